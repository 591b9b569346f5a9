import pytest
from hypothesis import given, settings, strategies as st

import reference as ref
from conftest import members_as_indices, random_coherent_lists
from subcheck import (
    EMPTY,
    FIGURE1,
    AltSet,
    Outcome,
    PreconditionError,
    Witness,
    build_sensitivity,
    find_witness_fast,
    find_witness_naive,
    from_names,
    gen_random_coherent,
    normalize,
    verify_witness,
    witness_to_violation,
)
from subcheck.checker import InvalidWitness, insensitive_table, printed_condition

A, B, C, D = range(4)


def test_sensitivity_paper(L_paper):
    sens = build_sensitivity(L_paper)
    assert sens.shape == (4, 6)
    assert sens[A, 4]  # {a,c} precedes {c}
    assert not sens[B, 4]
    assert sens[D, 2]  # {a,c,d} precedes {a,c}


def test_sensitivity_false_on_own_elements():
    for plist in random_coherent_lists(100, seed=3):
        sens = build_sensitivity(plist)
        for r, s in enumerate(plist.members):
            assert not any(sens[x, r] for x in s)


def test_sensitivity_matches_direct_evaluation():
    for plist in random_coherent_lists(300, seed=4):
        sens = build_sensitivity(plist)
        members = members_as_indices(plist)
        for r in range(plist.n):
            for x in range(plist.m):
                assert sens[x, r] == ref.sensitive(members, r, x)


def test_sensitivity_refuses_incoherent():
    with pytest.raises(PreconditionError):
        build_sensitivity(from_names("ab", ["a", "ab"]))


def test_sensitivity_to_array(L_paper):
    arr = build_sensitivity(L_paper).to_array()
    assert arr.shape == (4, 6)
    assert arr[A, 4] and not arr[B, 4]


def test_insensitive_table_is_complement(L_paper):
    sens = build_sensitivity(L_paper)
    table = insensitive_table(L_paper)
    full = (1 << L_paper.m) - 1
    for r, y in enumerate(L_paper.masks):
        assert table[r] == full & ~y & ~sens.rows[r]


def test_fast_paper(L_paper, S):
    v = find_witness_fast(L_paper)
    assert v.outcome is Outcome.NOT_SUBSTITUTABLE
    assert v.witness == Witness(0, 4, B)
    assert L_paper[0] == S("ab") and L_paper[4] == S("c")
    assert v.violation.A == S("bc") and v.violation.B == S("abc")
    assert v.complete is False


def test_fast_figure1_paper(L_paper):
    v = find_witness_fast(L_paper, FIGURE1)
    assert v.outcome is Outcome.NOT_SUBSTITUTABLE
    assert v.witness is None
    assert v.incompleteness == (0, 3, 4)


def test_fast_small_substitutable():
    assert find_witness_fast(from_names("a", ["a"])).outcome is Outcome.SUBSTITUTABLE


def test_fast_resp3(L_resp3):
    v = find_witness_fast(L_resp3)
    assert v.outcome is Outcome.SUBSTITUTABLE
    assert v.complete is True
    assert ref.is_substitutable(members_as_indices(L_resp3), range(3))


def test_printed_polarity_misfires_on_resp3(L_resp3, S):
    sens = build_sensitivity(L_resp3)
    i, j = L_resp3.rank_of(S("ab")), L_resp3.rank_of(S("bc"))
    assert printed_condition(L_resp3, sens, i, j)
    # but no witness exists at all
    assert ref.witnesses(members_as_indices(L_resp3)) == []


def test_fast_not_coherent():
    v = find_witness_fast(normalize([EMPTY, AltSet(1)], 1))
    assert v.outcome is Outcome.NOT_COHERENT
    assert v.incoherent_pair == (0, 1)
    assert not v.coherent


def test_naive_examples(L_paper, L_resp3):
    assert find_witness_naive(L_paper).witness == Witness(0, 4, B)
    assert find_witness_naive(L_resp3).outcome is Outcome.SUBSTITUTABLE
    assert find_witness_naive(normalize([], 0)).outcome is Outcome.SUBSTITUTABLE
    assert find_witness_naive(from_names("ab", ["a", "ab"])).outcome is Outcome.NOT_COHERENT


def test_verify_witness_examples(L_paper):
    assert verify_witness(L_paper, Witness(0, 4, B))
    assert not verify_witness(L_paper, Witness(0, 1, B))
    assert verify_witness(L_paper, Witness(1, 4, D))
    assert not verify_witness(L_paper, Witness(4, 0, C))
    assert not verify_witness(L_paper, Witness(0, 4, C))  # c ∉ X − Y
    assert not verify_witness(L_paper, Witness(0, 9, B))


def test_witness_to_violation_examples(L_paper, S):
    v = witness_to_violation(L_paper, Witness(0, 4, B))
    assert (v.A, v.B, v.x_elem) == (S("bc"), S("abc"), B)
    v = witness_to_violation(L_paper, Witness(1, 4, D))
    assert (v.A, v.B, v.x_elem) == (S("cd"), S("acd"), D)
    with pytest.raises(InvalidWitness):
        witness_to_violation(L_paper, Witness(0, 1, B))


def test_witness_with_empty_second_component(S):
    # X = {a, b} before ∅ with nothing containing only b: f({b}) = ∅
    plist = from_names("ab", ["ab", "a"])
    w = Witness(0, 2, B)
    assert verify_witness(plist, w)
    v = witness_to_violation(plist, w)
    assert (v.A, v.B) == (S("b"), S("ab"))


def test_fast_and_naive_agree_with_reference():
    for plist in random_coherent_lists(400, seed=8):
        fast = find_witness_fast(plist)
        naive = find_witness_naive(plist)
        assert fast.outcome == naive.outcome
        assert fast.witness == naive.witness
        expected = ref.witnesses(members_as_indices(plist))
        if expected:
            assert (fast.witness.x_rank, fast.witness.y_rank, fast.witness.x_elem) == expected[0]
        else:
            assert fast.outcome is Outcome.SUBSTITUTABLE


def test_lemma4_first_part():
    """f(X ∪ Y) = X implies X insensitive to every element of Y − X."""
    for plist in random_coherent_lists(200, seed=21):
        sens = build_sensitivity(plist)
        members = members_as_indices(plist)
        for i, x in enumerate(members):
            for j in range(i + 1, len(members)):
                y = members[j]
                if ref.choose(members, x | y)[0] == i:
                    assert not any(sens[e, i] for e in y - x)


@settings(max_examples=200, deadline=None)
@given(m=st.integers(1, 5), data=st.data())
def test_fast_figure1_never_contradicts_witness_mode(m, data):
    n = data.draw(st.integers(0, 1 << m))
    plist = gen_random_coherent(m, n, data.draw(st.integers(0, 2**32)))
    full = find_witness_fast(plist)
    fig = find_witness_fast(plist, FIGURE1)
    assert fig.outcome == full.outcome
    if fig.complete:
        assert fig.witness == full.witness
