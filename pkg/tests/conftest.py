import random

import pytest

from subcheck import AltSet, from_names, gen_random_coherent


def members_as_indices(plist):
    """Members as frozensets of universe indices, for the reference module."""
    return [frozenset(s) for s in plist.members]


def random_coherent_lists(count, seed, max_m=6, max_n=40):
    rng = random.Random(seed)
    for _ in range(count):
        m = rng.randint(1, max_m)
        n = rng.randint(0, min(max_n, 1 << m))
        yield gen_random_coherent(m, n, rng.getrandbits(32))


def subset(plist, names):
    return plist.universe.altset(names)


@pytest.fixture
def L_paper():
    return from_names("abcd", ["ab", "acd", "ac", "a", "c"])


@pytest.fixture
def L_resp3():
    return from_names("abc", ["ab", "ac", "a", "bc", "b", "c", ""])


@pytest.fixture
def S():
    """Set builder for L_paper / L_resp3 style fixtures: S("ab") -> {a, b}."""
    return lambda names: AltSet.of(ord(c) - ord("a") for c in names)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, msg in test_acceptance.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {msg}")
