"""Ground truth straight from the definition of substitutability.

Everything here enumerates the powerset of the universe, so it is only meant
for small universes (``oracle_max``, default 8, overridable through the
``SUBCHECK_ORACLE_MAX`` environment variable, hard cap 16).
"""

from __future__ import annotations

import os
import warnings
from typing import Optional

from .choice import PreconditionError, check_coherence, choice_rank
from .checker import verify_witness
from .model import AltSet, Outcome, PreferenceList, Verdict, Violation, Witness

DEFAULT_ORACLE_MAX = 8
HARD_ORACLE_MAX = 16


class UniverseTooLarge(ValueError):
    pass


def oracle_max() -> int:
    raw = os.environ.get("SUBCHECK_ORACLE_MAX")
    if raw is None:
        return DEFAULT_ORACLE_MAX
    value = int(raw)
    if not 0 <= value <= HARD_ORACLE_MAX:
        raise ValueError(f"SUBCHECK_ORACLE_MAX must be in [0, {HARD_ORACLE_MAX}], got {value}")
    return value


def _guard(plist: PreferenceList, limit: Optional[int]) -> None:
    limit = oracle_max() if limit is None else limit
    if limit > HARD_ORACLE_MAX:
        raise ValueError(f"oracle limit capped at {HARD_ORACLE_MAX}")
    if plist.m > limit:
        raise UniverseTooLarge(f"universe of size {plist.m} exceeds oracle limit {limit}")
    if plist.m > DEFAULT_ORACLE_MAX:
        warnings.warn(f"oracle over 2**{plist.m} subsets may be slow", RuntimeWarning, stacklevel=3)


def full_choice_table(plist: PreferenceList, *, strategy: str = "stamp",
                      limit: Optional[int] = None) -> list[int]:
    """``table[A]`` = rank of f(A) for every bitmask A over the universe.

    ``strategy="scan"`` evaluates every subset independently; ``"stamp"``
    walks members in rank order and claims each still-unassigned superset.
    """
    _guard(plist, limit)
    size = 1 << plist.m
    masks = plist.masks
    if strategy == "scan":
        return [choice_rank(masks, a) for a in range(size)]
    if strategy != "stamp":
        raise ValueError(f"unknown strategy {strategy!r}")
    full = size - 1
    table = [-1] * size
    for r, s in enumerate(masks):
        rest = full & ~s
        sub = rest
        while True:
            a = s | sub
            if table[a] < 0:
                table[a] = r
            if not sub:
                break
            sub = (sub - 1) & rest
    return table


def brute_force_check(plist: PreferenceList, *, limit: Optional[int] = None) -> Verdict:
    """Test f(B) ∩ A ⊆ f(A) for all A ⊆ B ⊆ U.

    Pairs are visited with B ascending, then A ascending as bitmasks; the first
    failing pair is returned with its smallest offending element.
    """
    bad = check_coherence(plist)
    if bad is not None:
        return Verdict(Outcome.NOT_COHERENT, "brute", coherent=False, incoherent_pair=bad)
    table = full_choice_table(plist, limit=limit)
    masks = plist.masks
    for b in range(1 << plist.m):
        fb = masks[table[b]]
        if not fb:
            continue
        # ascending sub-masks of b
        a = 0
        while True:
            excess = fb & a & ~masks[table[a]]
            if excess:
                x = (excess & -excess).bit_length() - 1
                return Verdict(
                    Outcome.NOT_SUBSTITUTABLE, "brute",
                    violation=Violation(AltSet(a), AltSet(b), x),
                )
            if a == b:
                break
            a = ((a | ~b) + 1) & b
    return Verdict(Outcome.SUBSTITUTABLE, "brute")


def is_violation(plist: PreferenceList, v: Violation) -> bool:
    masks = plist.masks
    a, b, bit = v.A.mask, v.B.mask, 1 << v.x_elem
    if a & ~b:
        return False
    fa = masks[choice_rank(masks, a)]
    fb = masks[choice_rank(masks, b)]
    return bool(fb & a & bit) and not fa & bit


def violation_to_witness(plist: PreferenceList, v: Violation) -> Witness:
    """The pair (f(B), f(A)) with the violating element, as in the converse direction."""
    masks = plist.masks
    rb = choice_rank(masks, v.B.mask)
    ra = choice_rank(masks, v.A.mask)
    return Witness(rb, ra, v.x_elem)


def enumerate_all_witnesses(plist: PreferenceList, *, limit: Optional[int] = None) -> list[Witness]:
    """Every witness triple, ordered by (x_rank, y_rank, x_elem)."""
    _guard(plist, limit)
    if check_coherence(plist) is not None:
        raise PreconditionError("witness enumeration requires a coherent list")
    masks = plist.masks
    n = len(masks)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for e in AltSet(masks[i] & ~masks[j]):
                w = Witness(i, j, e)
                if verify_witness(plist, w):
                    out.append(w)
    return out
