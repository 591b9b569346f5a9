"""Universe, subsets and preference lists.

Sets are stored as Python ints used as bit vectors: bit ``i`` is set iff the
alternative with universe index ``i`` belongs to the set.  CPython ints are
packed into machine words, so union, intersection, difference and the subset
test all run in time linear in the number of words, with no size cap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Union


class Universe:
    """An ordered, finite set of named alternatives."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]) -> None:
        names = tuple(names)
        index = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise ValueError(f"alternative names must be non-empty strings, got {name!r}")
            if name in index:
                raise ValueError(f"duplicate alternative name {name!r}")
            index[name] = i
        self.names = names
        self._index = index

    @classmethod
    def of_size(cls, m: int) -> "Universe":
        """Universe with default names ``a, b, c, ...`` (``x0, x1, ...`` past 26)."""
        if m < 0:
            raise ValueError("universe size must be non-negative")
        if m <= 26:
            return cls(chr(ord("a") + i) for i in range(m))
        return cls(f"x{i}" for i in range(m))

    @property
    def m(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"Universe({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown alternative {name!r}") from None

    def name(self, i: int) -> str:
        return self.names[i]

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def altset(self, names: Iterable[str]) -> "AltSet":
        """Build the AltSet holding the named alternatives."""
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return AltSet(mask)

    def names_of(self, s: "AltSet") -> list[str]:
        """Names of the members of ``s`` sorted by universe index."""
        return [self.names[i] for i in s]

    def format(self, s: "AltSet") -> str:
        return "{" + ", ".join(self.names_of(s)) + "}"


@dataclass(frozen=True, order=False)
class AltSet:
    """An immutable subset of a universe, held as a bitmask."""

    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("AltSet mask must be non-negative")

    @classmethod
    def of(cls, indices: Iterable[int]) -> "AltSet":
        mask = 0
        for i in indices:
            if i < 0:
                raise ValueError(f"negative universe index {i}")
            mask |= 1 << i
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and i >= 0 and bool(self.mask >> i & 1)

    def __or__(self, other: "AltSet") -> "AltSet":
        return AltSet(self.mask | other.mask)

    def __and__(self, other: "AltSet") -> "AltSet":
        return AltSet(self.mask & other.mask)

    def __sub__(self, other: "AltSet") -> "AltSet":
        return AltSet(self.mask & ~other.mask)

    def __le__(self, other: "AltSet") -> bool:
        return not self.mask & ~other.mask

    def __ge__(self, other: "AltSet") -> bool:
        return not other.mask & ~self.mask

    def __lt__(self, other: "AltSet") -> bool:
        return self <= other and self.mask != other.mask

    def __gt__(self, other: "AltSet") -> bool:
        return other < self

    def issubset(self, other: "AltSet") -> bool:
        return self <= other

    def with_element(self, i: int) -> "AltSet":
        return AltSet(self.mask | 1 << i)

    def fits(self, m: int) -> bool:
        """True iff no bit at position >= m is set."""
        return self.mask >> m == 0

    def __repr__(self) -> str:
        return f"AltSet({sorted(self)})"


EMPTY = AltSet(0)


@dataclass(frozen=True)
class PreferenceList:
    """A normalized preference list: rank 0 is most preferred, the empty set is present.

    Build instances with :func:`normalize`.  Duplicates and out-of-order
    subsets are kept as given; the checkers report them as coherence
    violations.
    """

    universe: Universe
    members: tuple[AltSet, ...]
    empty_appended: bool = False
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "masks", tuple(s.mask for s in self.members))

    @property
    def n(self) -> int:
        return len(self.members)

    @property
    def m(self) -> int:
        return self.universe.m

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, rank: int) -> AltSet:
        return self.members[rank]

    def __iter__(self) -> Iterator[AltSet]:
        return iter(self.members)

    def rank_of(self, s: AltSet) -> Optional[int]:
        """Rank of the first member equal to ``s``, or None."""
        for r, mask in enumerate(self.masks):
            if mask == s.mask:
                return r
        return None

    def format(self) -> str:
        return "(" + ", ".join(self.universe.format(s) for s in self.members) + ")"


def normalize(members: Iterable[AltSet], universe: Union[Universe, int]) -> PreferenceList:
    """Build a PreferenceList, appending the empty set unless some member is empty.

    ``universe`` may be a Universe or a size, in which case default names are
    used.  Order is preserved exactly.
    """
    if isinstance(universe, int):
        universe = Universe.of_size(universe)
    members = tuple(s if isinstance(s, AltSet) else AltSet(s) for s in members)
    for s in members:
        if not s.fits(universe.m):
            raise ValueError(f"{s!r} uses indices outside a universe of size {universe.m}")
    appended = all(s.mask for s in members)
    if appended:
        members = members + (EMPTY,)
    return PreferenceList(universe, members, appended)


def from_names(universe: Sequence[str], members: Iterable[Iterable[str]]) -> PreferenceList:
    """Convenience constructor: ``from_names("abc", [["a", "b"], ["c"]])``."""
    u = Universe(universe)
    return normalize((u.altset(names) for names in members), u)


def prec(plist: PreferenceList, i: int, j: int) -> bool:
    """True iff the member at rank ``i`` properly precedes the one at rank ``j``."""
    n = plist.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"rank out of range for a list of {n} members: ({i}, {j})")
    return i < j


class Outcome(enum.Enum):
    SUBSTITUTABLE = "substitutable"
    NOT_SUBSTITUTABLE = "not_substitutable"
    NOT_COHERENT = "not_coherent"


@dataclass(frozen=True)
class Witness:
    """Member ranks ``x_rank < y_rank`` and an element ``x_elem`` of X - Y.

    (X, Y) is a witness when the choice on X | Y is X and the choice on
    Y | {x} is Y: adding the rest of X to Y | {x} makes x chosen.
    """

    x_rank: int
    y_rank: int
    x_elem: int


@dataclass(frozen=True)
class Violation:
    """A ⊆ B with x in f(B) ∩ A but x not in f(A)."""

    A: AltSet
    B: AltSet
    x_elem: int


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    algorithm: str
    mode: str = "witness"
    coherent: bool = True
    complete: Optional[bool] = None
    witness: Optional[Witness] = None
    violation: Optional[Violation] = None
    # (i, j), i < j, with members[i] ⊆ members[j]
    incoherent_pair: Optional[tuple[int, int]] = None
    # (rank, d_X, required) where required is 2**|X| or "exceeds N"
    incompleteness: Optional[tuple[int, int, Union[int, str]]] = None

    @property
    def substitutable(self) -> bool:
        return self.outcome is Outcome.SUBSTITUTABLE
