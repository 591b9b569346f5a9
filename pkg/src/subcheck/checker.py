"""Witness search: the fast sensitivity-based test and the naive baseline.

Both searches scan ordered member pairs (X, Y), X before Y, with X in list
order and Y in list order for each X, and report the first witness they meet
with the smallest certifying element.  On any coherent list they therefore
return the same witness, which is what the differential tests rely on.

Sensitivity polarity: a witness needs Y *insensitive* to some x in X - Y,
i.e. f(Y | {x}) = Y.  The fast test uses exactly that condition.  The
opposite reading (Y sensitive to x) is kept in :func:`printed_condition` only
so tests can show where it disagrees with the definition.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .choice import (
    PreconditionError,
    check_coherence,
    check_completeness,
    choice_rank,
    completeness_from_counts,
)
from .model import AltSet, Outcome, PreferenceList, Verdict, Violation, Witness

FIGURE1 = "figure1"
WITNESS = "witness"
MODES = (FIGURE1, WITNESS)


class InvariantError(AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class InvalidWitness(ValueError):
    pass


class SensMatrix:
    """Boolean |U| x N table; ``sens[x, r]`` is true iff member r is sensitive to x.

    Stored row-per-member as bitmasks over the universe.
    """

    __slots__ = ("m", "rows")

    def __init__(self, m: int, rows: Sequence[int]) -> None:
        self.m = m
        self.rows = tuple(rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, len(self.rows)

    def __getitem__(self, key: tuple[int, int]) -> bool:
        x, r = key
        if not 0 <= x < self.m:
            raise IndexError(f"element index {x} out of range")
        return bool(self.rows[r] >> x & 1)

    def sensitive_to(self, r: int) -> AltSet:
        return AltSet(self.rows[r])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SensMatrix) and (self.m, self.rows) == (other.m, other.rows)

    def to_array(self):
        import numpy as np

        out = np.zeros((self.m, self.n), dtype=bool)
        for r, row in enumerate(self.rows):
            for x in AltSet(row):
                out[x, r] = True
        return out


def _phase1(masks: Sequence[int]):
    """Fused coherence check, subset counting and sensitivity marking.

    Returns ``(bad_pair, counts, sens_rows)``; on incoherence the last two are None.

    For X before Y and x not in Y, X ⊆ Y | {x} holds iff X - Y is empty
    (incoherent) or X - Y == {x}, so one difference per pair covers every x.
    """
    n = len(masks)
    nmasks = [~s for s in masks]
    sens = [0] * n
    counts = [1] * n
    for i in range(n):
        x = masks[i]
        nx = nmasks[i]
        d = 1
        for j in range(i + 1, n):
            diff = x & nmasks[j]
            if not diff:
                return (i, j), None, None
            if not masks[j] & nx:
                d += 1
            if not diff & (diff - 1):
                sens[j] |= diff
        counts[i] = d
    return None, counts, sens


def build_sensitivity(plist: PreferenceList) -> SensMatrix:
    bad, _, rows = _phase1(plist.masks)
    if bad is not None:
        raise PreconditionError(f"list is not coherent: members {bad[0]} and {bad[1]}")
    return SensMatrix(plist.m, rows)


def _first_witness_fast(masks: Sequence[int], sens: Sequence[int]) -> Optional[Witness]:
    n = len(masks)
    # elements outside Y to which Y is insensitive
    free = [~(s | t) for s, t in zip(masks, sens)]
    for i in range(n):
        x = masks[i]
        blocked = sens[i] & ~x
        for j in range(i + 1, n):
            if masks[j] & blocked:
                continue
            cand = x & free[j]
            if cand:
                return Witness(i, j, (cand & -cand).bit_length() - 1)
    return None


def printed_condition(plist: PreferenceList, sens: SensMatrix, i: int, j: int) -> bool:
    """The pair test with the sensitivity polarity reversed on the Y side.

    True iff X is insensitive to every y in Y - X and Y is *sensitive* to some
    x in X - Y.  This is not a witness test; it exists for regression tests.
    """
    x, y = plist.masks[i], plist.masks[j]
    x_insensitive = (y & ~x & sens.rows[i]) == 0
    y_sensitive = (x & ~y & sens.rows[j]) != 0
    return x_insensitive and y_sensitive


def _with_violation(plist: PreferenceList, w: Optional[Witness]) -> Optional[Violation]:
    return None if w is None else witness_to_violation(plist, w)


def find_witness_fast(plist: PreferenceList, mode: str = WITNESS) -> Verdict:
    """Decide substitutability in O(|U|^2 N^2) time.

    ``mode="figure1"`` stops with a not-substitutable verdict as soon as the
    list turns out incomplete (no witness is produced).  ``mode="witness"``
    records completeness and always searches for a witness.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    masks = plist.masks
    bad, counts, sens = _phase1(masks)
    if bad is not None:
        return Verdict(Outcome.NOT_COHERENT, "fast", mode, coherent=False, incoherent_pair=bad)

    report = completeness_from_counts(masks, counts)
    if mode == FIGURE1 and not report.complete:
        return Verdict(
            Outcome.NOT_SUBSTITUTABLE, "fast", mode,
            complete=False, incompleteness=report.first_failure,
        )

    w = _first_witness_fast(masks, sens)
    if w is None and not report.complete:
        # substitutable lists are complete
        raise InvariantError("no witness found on an incomplete list")
    return Verdict(
        Outcome.NOT_SUBSTITUTABLE if w else Outcome.SUBSTITUTABLE, "fast", mode,
        complete=report.complete, incompleteness=report.first_failure,
        witness=w, violation=_with_violation(plist, w),
    )


def insensitive_table(plist: PreferenceList) -> list[int]:
    """For each member Y, the elements x outside Y with f(Y | {x}) = Y, by direct evaluation."""
    masks = plist.masks
    out = []
    for r, y in enumerate(masks):
        row = 0
        for e in range(plist.m):
            bit = 1 << e
            if not y & bit and choice_rank(masks, y | bit) == r:
                row |= bit
        out.append(row)
    return out


def find_witness_naive(plist: PreferenceList) -> Verdict:
    """Decide substitutability by testing every member pair directly.

    Every pair pays a full evaluation of f(X | Y), giving O(N^3 |U|) time.
    """
    bad = check_coherence(plist)
    if bad is not None:
        return Verdict(Outcome.NOT_COHERENT, "naive", coherent=False, incoherent_pair=bad)
    report = check_completeness(plist)
    masks = plist.masks
    insens = insensitive_table(plist)
    n = len(masks)
    w = None
    for i in range(n):
        x = masks[i]
        for j in range(i + 1, n):
            y = masks[j]
            if choice_rank(masks, x | y) != i:
                continue
            cand = x & ~y & insens[j]
            if cand:
                w = Witness(i, j, (cand & -cand).bit_length() - 1)
                break
        if w is not None:
            break
    return Verdict(
        Outcome.NOT_SUBSTITUTABLE if w else Outcome.SUBSTITUTABLE, "naive",
        complete=report.complete, incompleteness=report.first_failure,
        witness=w, violation=_with_violation(plist, w),
    )


def verify_witness(plist: PreferenceList, w: Witness) -> bool:
    """Check a witness against its definition by direct evaluation."""
    masks = plist.masks
    n = len(masks)
    i, j, e = w.x_rank, w.y_rank, w.x_elem
    if not (0 <= i < j < n) or e < 0:
        return False
    x, y = masks[i], masks[j]
    bit = 1 << e
    if not x & bit or y & bit:
        return False
    return choice_rank(masks, x | y) == i and choice_rank(masks, y | bit) == j


def witness_to_violation(plist: PreferenceList, w: Witness) -> Violation:
    """Turn witness (X, Y, x) into the violation A = Y | {x} ⊆ B = X | Y."""
    if not verify_witness(plist, w):
        raise InvalidWitness(f"{w} is not a witness")
    masks = plist.masks
    x, y = masks[w.x_rank], masks[w.y_rank]
    bit = 1 << w.x_elem
    a, b = y | bit, x | y
    fa = masks[choice_rank(masks, a)]
    fb = masks[choice_rank(masks, b)]
    if not (a & ~b == 0 and fb & a & bit and not fa & bit):
        raise InvariantError(f"witness {w} does not yield a violation")
    return Violation(AltSet(a), AltSet(b), w.x_elem)
