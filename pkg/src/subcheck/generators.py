"""Seeded instance generators.

All randomness comes from ``random.Random(seed)`` (Mersenne Twister), so the
same parameters always give the same list.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .model import AltSet, PreferenceList, normalize

PRNG = "python-random-mt19937"
KINDS = ("responsive", "complete_coherent", "random_coherent")
MAX_COMPLETE_M = 20


@dataclass(frozen=True)
class GenSpec:
    kind: str
    m: int
    seed: int = 0
    q: Optional[int] = None
    n: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.kind == "responsive" and (self.q is None or not 1 <= self.q <= self.m):
            raise ValueError("responsive lists need 1 <= q <= m")
        if self.kind == "random_coherent" and (self.n is None or not 0 <= self.n <= 1 << self.m):
            raise ValueError("random_coherent lists need 0 <= n <= 2**m")
        if self.kind == "complete_coherent" and self.m > MAX_COMPLETE_M:
            raise ValueError(f"complete lists are capped at m = {MAX_COMPLETE_M}")

    def build(self) -> PreferenceList:
        if self.kind == "responsive":
            return gen_responsive(self.m, self.q, self.seed)
        if self.kind == "complete_coherent":
            return gen_complete_coherent(self.m, self.seed)
        return gen_random_coherent(self.m, self.n, self.seed)

    def describe(self) -> str:
        parts = [f"kind={self.kind}", f"m={self.m}"]
        if self.q is not None:
            parts.append(f"q={self.q}")
        if self.n is not None:
            parts.append(f"n={self.n}")
        parts += [f"seed={self.seed}", f"prng={PRNG}"]
        return " ".join(parts)


def gen_responsive(m: int, q: int, seed: int = 0, *, priority: Optional[Sequence[int]] = None) -> PreferenceList:
    """Capacity-``q`` responsive choice under a random (or given) priority order.

    Members are all subsets of size at most q, ordered by their ascending
    priority ranks padded to length q with a rank worse than any element.
    The induced choice picks the min(q, |A|) best elements of A.
    """
    if not 1 <= q <= m:
        raise ValueError("need 1 <= q <= m")
    if priority is None:
        order = list(range(m))
        random.Random(seed).shuffle(order)
    else:
        order = list(priority)
        if sorted(order) != list(range(m)):
            raise ValueError("priority must be a permutation of range(m)")
    rank = {e: r for r, e in enumerate(order)}
    worst = m

    def key(mask: int):
        ranks = sorted(rank[e] for e in AltSet(mask))
        return ranks + [worst] * (q - len(ranks))

    subsets = [s for s in range(1 << m) if s.bit_count() <= q]
    subsets.sort(key=key)
    return normalize(map(AltSet, subsets), m)


def gen_complete_coherent(m: int, seed: int = 0) -> PreferenceList:
    """Random linear extension of reverse inclusion over all 2**m subsets.

    Repeatedly places a uniformly chosen set among those whose supersets are
    all placed already.
    """
    if not 0 <= m <= MAX_COMPLETE_M:
        raise ValueError(f"need 0 <= m <= {MAX_COMPLETE_M}")
    rng = random.Random(seed)
    full = (1 << m) - 1
    # unplaced one-element supersets of each set
    pending = [m - s.bit_count() for s in range(1 << m)]
    ready = [full]
    out = []
    while ready:
        k = rng.randrange(len(ready))
        ready[k], ready[-1] = ready[-1], ready[k]
        s = ready.pop()
        out.append(s)
        rest = s
        while rest:
            low = rest & -rest
            sub = s ^ low
            pending[sub] -= 1
            if not pending[sub]:
                ready.append(sub)
            rest ^= low
    return normalize(map(AltSet, out), m)


def gen_random_coherent(m: int, n: int, seed: int = 0) -> PreferenceList:
    """``n`` distinct random subsets in non-increasing size order, empty set appended if absent."""
    if m < 0 or not 0 <= n <= 1 << m:
        raise ValueError("need 0 <= n <= 2**m")
    rng = random.Random(seed)
    picks = rng.sample(range(1 << m), n)
    rng.shuffle(picks)
    picks.sort(key=lambda s: -s.bit_count())
    return normalize(map(AltSet, picks), m)


def droppable_ranks(plist: PreferenceList) -> list[int]:
    """Ranks of non-empty members that are proper subsets of an earlier member."""
    masks = plist.masks
    out = []
    for r, s in enumerate(masks):
        if s and any(not s & ~t and s != t for t in masks[:r]):
            out.append(r)
    return out


def mutate_drop(plist: PreferenceList, rank: Optional[int] = None, seed: int = 0) -> PreferenceList:
    """Remove one member that some earlier member contains.

    The result misses a subset of a surviving member, so it is incomplete
    and hence not substitutable.  With ``rank=None`` an eligible rank is
    drawn using ``seed``.
    """
    eligible = droppable_ranks(plist)
    if rank is None:
        if not eligible:
            raise ValueError("no member can be dropped with an incompleteness guarantee")
        rank = random.Random(seed).choice(eligible)
    if not 0 <= rank < plist.n:
        raise IndexError(f"rank {rank} out of range")
    if not plist.masks[rank]:
        raise ValueError("the empty set cannot be dropped")
    if rank not in eligible:
        raise ValueError(f"member at rank {rank} has no earlier superset; the drop guarantees nothing")
    members = plist.members[:rank] + plist.members[rank + 1:]
    return PreferenceList(plist.universe, members, plist.empty_appended)
