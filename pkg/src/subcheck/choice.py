"""The choice function induced by a preference list, and its structural checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .model import AltSet, PreferenceList


class PreconditionError(ValueError):
    """Raised when an operation is called outside its documented domain."""


def choice_rank(masks, a: int) -> int:
    """Rank of the first mask contained in ``a``; -1 if none is."""
    na = ~a
    for r, s in enumerate(masks):
        if not s & na:
            return r
    return -1


def eval_choice(plist: PreferenceList, A: AltSet) -> tuple[int, AltSet]:
    """Return ``(rank, member)`` for the first member of ``plist`` contained in ``A``."""
    r = choice_rank(plist.masks, A.mask)
    if r < 0:
        # only reachable if the list was built without normalize()
        raise PreconditionError("preference list has no member contained in the argument")
    return r, plist.members[r]


def check_coherence(plist: PreferenceList) -> Optional[tuple[int, int]]:
    """Lexicographically first rank pair (i, j), i < j, with members[i] ⊆ members[j].

    Returns None when the list is coherent.
    """
    masks = plist.masks
    n = len(masks)
    for i in range(n):
        nx = masks[i]
        for j in range(i + 1, n):
            if not nx & ~masks[j]:
                return i, j
    return None


def is_coherent(plist: PreferenceList) -> bool:
    return check_coherence(plist) is None


def required_count(size: int, n: int) -> Union[int, str]:
    """``2**size``, or ``"exceeds N"`` when that cannot be reached by ``n`` members."""
    if size > 62 or size >= n.bit_length():
        # 2**size > n >= d_X
        return "exceeds N"
    return 1 << size


@dataclass(frozen=True)
class CompletenessReport:
    complete: bool
    per_member_counts: tuple[int, ...]
    first_failure: Optional[tuple[int, int, Union[int, str]]] = None


def completeness_from_counts(masks, counts) -> CompletenessReport:
    n = len(masks)
    first = None
    for r, (mask, d) in enumerate(zip(masks, counts)):
        need = required_count(mask.bit_count(), n)
        if need != d:
            first = (r, d, need)
            break
    return CompletenessReport(first is None, tuple(counts), first)


def check_completeness(plist: PreferenceList) -> CompletenessReport:
    """Count, for every member X, the members at or after X that are subsets of X.

    On a coherent list every member contained in X comes after X, so the
    count d_X equals 2**|X| for all X exactly when the list is complete.
    """
    if not is_coherent(plist):
        raise PreconditionError("completeness counts are only defined for coherent lists")
    masks = plist.masks
    n = len(masks)
    counts = []
    for i in range(n):
        x = masks[i]
        nx = ~x
        d = 1
        for j in range(i + 1, n):
            if not masks[j] & nx:
                d += 1
        counts.append(d)
    return completeness_from_counts(masks, counts)


def is_fixed_point(plist: PreferenceList, A: AltSet) -> bool:
    return eval_choice(plist, A)[1] == A


def check_outcast(plist: PreferenceList, A: AltSet, B: AltSet) -> bool:
    """Whether f(B) = f(A) for a sandwich f(A) ⊆ B ⊆ A.

    Always true on coherent lists; kept as an executable statement of that fact.
    """
    ra, fa = eval_choice(plist, A)
    if not (fa <= B and B <= A):
        raise PreconditionError("outcast needs f(A) ⊆ B ⊆ A")
    rb, _ = eval_choice(plist, B)
    return rb == ra
