"""Plain-text preference list files.

::

    # comments run to end of line; blank lines are ignored
    a b c d          <- universe, defines index order
    a b              <- most preferred member
    a c d
    -                <- the empty set
"""

from __future__ import annotations

from typing import Iterable, Optional, TextIO

from .model import AltSet, PreferenceList, Universe, normalize

EMPTY_TOKEN = "-"


class ListFileError(ValueError):
    def __init__(self, message: str, lineno: Optional[int] = None) -> None:
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


def _tokens(lines: Iterable[str]):
    for lineno, line in enumerate(lines, 1):
        body = line.split("#", 1)[0].split()
        if body:
            yield lineno, body


def parse(text: str) -> PreferenceList:
    rows = _tokens(text.splitlines())
    try:
        lineno, header = next(rows)
    except StopIteration:
        raise ListFileError("missing universe line") from None
    if EMPTY_TOKEN in header:
        raise ListFileError(f"{EMPTY_TOKEN!r} is reserved for the empty set", lineno)
    try:
        universe = Universe(header)
    except ValueError as exc:
        raise ListFileError(str(exc), lineno) from None

    members = []
    for lineno, names in rows:
        if names == [EMPTY_TOKEN]:
            members.append(AltSet())
            continue
        if EMPTY_TOKEN in names:
            raise ListFileError(f"{EMPTY_TOKEN!r} must stand alone on its line", lineno)
        if len(set(names)) != len(names):
            raise ListFileError("repeated alternative on one line", lineno)
        try:
            members.append(universe.altset(names))
        except KeyError as exc:
            raise ListFileError(exc.args[0], lineno) from None
    return normalize(members, universe)


def load(fp: TextIO) -> PreferenceList:
    return parse(fp.read())


def serialize(plist: PreferenceList, comments: Iterable[str] = ()) -> str:
    """Inverse of :func:`parse`.

    An empty set that normalization appended is left out, so it is appended
    again on reading.
    """
    if not plist.m:
        raise ValueError("an empty universe cannot be written as a list file")
    out = [f"# {c}" for c in comments]
    out.append(" ".join(plist.universe.names))
    members = plist.members[:-1] if plist.empty_appended else plist.members
    for s in members:
        out.append(" ".join(plist.universe.names_of(s)) if s else EMPTY_TOKEN)
    return "\n".join(out) + "\n"
