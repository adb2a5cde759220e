import random
from itertools import combinations

import networkx as nx
import pytest

from conftest import random_language
from nfca import (
    DomainError, FiniteLanguage, FoolingMode, FoolingSet, gen_lf, gen_llk, max_fooling_set,
    verify_fooling_set,
)
from nfca.bounds import POOL_LIMIT, splittings


def _lf24_pairs(cover):
    pairs = [("bba" + "b" * j, "b" * (2 - j)) for j in range(3)]
    if cover:
        pairs.append(("", "bbabb"))
    else:
        pairs += [("a" * i, "b" * (2 - i) + "abb") for i in range(3)]
    return pairs


def test_extended_nfa_fooling_set_of_six():
    L = gen_lf(2, 4)
    v = verify_fooling_set(L, FoolingSet(_lf24_pairs(False), "NFA_EXTENDED"))
    assert v.valid and v.bound == 6 and v.violation is None


def test_plain_form_fails_on_same_set():
    L = gen_lf(2, 4)
    v = verify_fooling_set(L, FoolingSet(_lf24_pairs(False), "NFA_PLAIN"))
    assert not v.valid
    i, j, clause = v.violation
    assert i < j and "in L" in clause


def test_cover_extended_set_of_four():
    L = gen_lf(2, 4)
    v = verify_fooling_set(L, FoolingSet(_lf24_pairs(True), "COVER_EXTENDED"))
    assert v.valid and v.bound == 4


def test_membership_violation_reported():
    L = gen_lf(2, 4)
    v = verify_fooling_set(L, FoolingSet([("b", "b")], "NFA_PLAIN"))
    assert not v.valid and v.violation[:2] == (0, 0)


def test_fooling_set_invariants():
    with pytest.raises(DomainError):
        FoolingSet([], "NFA_PLAIN")
    with pytest.raises(DomainError):
        FoolingSet([("a", ""), ("a", "")], "NFA_PLAIN")
    with pytest.raises(ValueError):
        FoolingSet([("a", "")], "SOMETHING")


def test_singleton_empty_word():
    L = FiniteLanguage([""])
    for mode in FoolingMode:
        S = max_fooling_set(L, mode)
        assert S.pairs == (("", ""),)


def test_empty_pool_errors():
    with pytest.raises(DomainError):
        max_fooling_set(FiniteLanguage(["a"]), "NFA_PLAIN", pool=[])
    assert max_fooling_set(FiniteLanguage([], ell=2), "NFA_PLAIN") is None


def test_pool_limit():
    L = FiniteLanguage(["a" * n for n in range(80)])
    with pytest.raises(DomainError):
        max_fooling_set(L, "NFA_PLAIN", pool=[("a" * i, "a" * j) for i in range(50) for j in range(50)])
    assert len(splittings(L)) > POOL_LIMIT
    with pytest.raises(DomainError):
        max_fooling_set(L, "NFA_PLAIN")


def test_lf24_max_cover_extended_is_four():
    S = max_fooling_set(gen_lf(2, 4), "COVER_EXTENDED")
    assert len(S) == 4 and verify_fooling_set(gen_lf(2, 4), S).valid


def test_lf24_max_nfa_extended_is_six():
    assert len(max_fooling_set(gen_lf(2, 4), "NFA_EXTENDED")) == 6


def test_llk_restricted_pool_stays_at_three():
    # with both parts of every pair longer than one letter the bound cannot exceed 3
    for l, k in ((9, 5), (11, 5), (9, 7)):
        L = gen_llk(l, k)
        pool = [(x, y) for x, y in splittings(L) if len(x) > 1]
        assert len(max_fooling_set(L, "COVER_EXTENDED", pool)) <= 3


def _brute_max(L, mode):
    pool = splittings(L)
    g = nx.Graph()
    g.add_nodes_from(range(len(pool)))
    for i, j in combinations(range(len(pool)), 2):
        if verify_fooling_set(L, FoolingSet([pool[i], pool[j]], mode)).valid:
            g.add_edge(i, j)
    return max(len(c) for c in nx.find_cliques(g))


@pytest.mark.parametrize("mode", list(FoolingMode))
def test_max_fooling_matches_networkx(mode):
    rng = random.Random(hash(mode.value) % 1000)
    for _ in range(25):
        L = random_language(rng, alphabet=rng.choice(["a", "ab"]), max_ell=4, p=0.3)
        S = max_fooling_set(L, mode)
        if S is None:
            assert not L.words
            continue
        assert verify_fooling_set(L, S).valid
        assert len(S) == _brute_max(L, mode)


def test_mode_monotonicity():
    rng = random.Random(77)
    for _ in range(60):
        L = random_language(rng, alphabet="ab", max_ell=4, p=0.3)
        for plain, ext in ((FoolingMode.NFA_PLAIN, FoolingMode.NFA_EXTENDED),
                           (FoolingMode.COVER_PLAIN, FoolingMode.COVER_EXTENDED)):
            S = max_fooling_set(L, plain)
            if S is None:
                continue
            assert verify_fooling_set(L, FoolingSet(S.pairs, ext)).valid
