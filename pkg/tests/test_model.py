import itertools

import pytest
from hypothesis import given, strategies as st

from subcheck import EMPTY, AltSet, Universe, from_names, normalize, prec
from subcheck.choice import check_coherence


def test_universe_bijection():
    u = Universe(["x", "y", "z"])
    assert [u.index(n) for n in u] == [0, 1, 2]
    assert [u.name(i) for i in range(3)] == ["x", "y", "z"]
    with pytest.raises(ValueError):
        Universe(["a", "a"])
    with pytest.raises(ValueError):
        Universe(["a", ""])
    with pytest.raises(KeyError):
        u.index("w")


def test_default_names():
    assert Universe.of_size(3).names == ("a", "b", "c")
    assert Universe.of_size(30).names[-1] == "x29"


def test_normalize_paper_example(L_paper, S):
    assert L_paper.n == 6
    assert L_paper.empty_appended
    assert L_paper.members == (S("ab"), S("acd"), S("ac"), S("a"), S("c"), EMPTY)


def test_normalize_empty_input():
    plist = normalize([], 2)
    assert plist.members == (EMPTY,)
    assert plist.n == 1 and plist.empty_appended


def test_normalize_keeps_misplaced_empty(S):
    plist = normalize([EMPTY, S("a")], 1)
    assert plist.members == (EMPTY, S("a"))
    assert not plist.empty_appended
    assert check_coherence(plist) == (0, 1)


def test_normalize_rejects_out_of_universe_bits():
    with pytest.raises(ValueError):
        normalize([AltSet(0b100)], 2)


@pytest.mark.parametrize("members", [[], [0b11, 0b01], [0b01, 0, 0b10], [0b10, 0b10]])
def test_normalize_idempotent(members):
    once = normalize(map(AltSet, members), 2)
    twice = normalize(once.members, once.universe)
    assert twice.members == once.members


@pytest.mark.parametrize("i, j, expected", [(0, 4, True), (3, 3, False), (5, 0, False)])
def test_prec(L_paper, i, j, expected):
    assert prec(L_paper, i, j) is expected


def test_prec_out_of_range(L_paper):
    with pytest.raises(IndexError):
        prec(L_paper, 0, 6)


def test_prec_strict_total_order(L_paper):
    for i, j in itertools.permutations(range(L_paper.n), 2):
        assert prec(L_paper, i, j) != prec(L_paper, j, i)


def test_altset_algebra_exhaustive_small():
    for m in range(5):
        sets = [AltSet(k) for k in range(1 << m)]
        for a, b in itertools.product(sets, repeat=2):
            assert a <= a | b
            assert not ((a - b) & b)
            assert len(a | b) == len(a) + len(b) - len(a & b)
            assert (a <= b) == (set(a) <= set(b))
            assert set(a - b) == set(a) - set(b)
            assert (a | b).fits(m)


@given(st.sets(st.integers(0, 200)), st.sets(st.integers(0, 200)))
def test_altset_matches_python_sets_multiword(xs, ys):
    a, b = AltSet.of(xs), AltSet.of(ys)
    assert set(a | b) == xs | ys
    assert set(a & b) == xs & ys
    assert set(a - b) == xs - ys
    assert (a <= b) == (xs <= ys)
    assert len(a) == len(xs)
    assert list(a) == sorted(xs)


def test_from_names_and_format(L_paper):
    assert L_paper.format() == "({a, b}, {a, c, d}, {a, c}, {a}, {c}, {})"
    assert L_paper.rank_of(from_names("abcd", []).universe.altset("c")) == 4
