"""Slow reference semantics on frozensets, sharing no code with the package.

Used to compute expected values independently of the bitmask implementation.
"""

from itertools import chain, combinations


def powerset(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))]


def choose(members, A):
    """(rank, set) of the first member contained in A."""
    for r, s in enumerate(members):
        if s <= A:
            return r, s
    raise AssertionError("list lacks the empty set")


def violations(members, universe):
    """All (A, B, x) with A ⊆ B and x in f(B) ∩ A but not in f(A)."""
    out = []
    for B in powerset(universe):
        fb = choose(members, B)[1]
        for A in powerset(B):
            fa = choose(members, A)[1]
            for x in sorted(fb & A - fa):
                out.append((A, B, x))
    return out


def is_substitutable(members, universe):
    return not violations(members, universe)


def witnesses(members):
    """All (i, j, x) with the witness property, straight from the definition."""
    out = []
    for i, X in enumerate(members):
        for j in range(i + 1, len(members)):
            Y = members[j]
            if choose(members, X | Y)[1] != X:
                continue
            for x in sorted(X - Y):
                if choose(members, Y | {x})[1] == Y:
                    out.append((i, j, x))
    return out


def sensitive(members, r, x):
    Y = members[r]
    return choose(members, Y | {x})[1] != Y


def subset_counts(members):
    return [sum(1 for Y in members if Y <= X) for X in members]
