from itertools import product

import pytest

from conftest import brute_accepts, random_nfa
from nfca import (
    Dfa, DomainError, FiniteLanguage, NoWitnessError, Nfa, RejectedInputError, accepts, determinize,
    enumerate_accepted, fixture_fig7, levels, minimize_dfa, nfa_fig1, nfca_fig2, shortest_witness, trim,
    UNREACHABLE,
)
from nfca.automata import codistances
from nfca.words import words_up_to


def test_fig2_membership():
    A = nfca_fig2(4)
    assert accepts(A, "aaa")
    assert not accepts(A, "bb")


def test_fig7_rejects_aaa():
    A, _ = fixture_fig7()
    assert not accepts(A, "aaa")
    assert accepts(A, "aa") and accepts(A, "aaaa")


def test_unknown_symbol_rejected():
    with pytest.raises(RejectedInputError):
        accepts(nfca_fig2(3), "abc")


def test_invariants_checked():
    with pytest.raises(DomainError):
        Nfa.build("a", 2, [(0, "a", 2)], [])
    with pytest.raises(DomainError):
        Nfa.build("a", 2, [(0, "b", 1)], [])
    with pytest.raises(DomainError):
        Nfa.build("a", 2, [], [5])
    with pytest.raises(DomainError):
        Dfa(2, ("a",), 0, set(), [[1], [2]])


def test_enumerate_fig7():
    A, ell = fixture_fig7()
    assert enumerate_accepted(A, ell).words == ("aa", "aaaa")


def test_enumerate_ell_zero():
    A = Nfa.build("a", 1, [(0, "a", 0)], [0])
    assert enumerate_accepted(A, 0).words == ("",)
    B = Nfa.build("a", 1, [(0, "a", 0)], [])
    assert enumerate_accepted(B, 0).words == ()


def test_enumerate_matches_membership_oracle(rng):
    for _ in range(150):
        A = random_nfa(rng)
        ell = rng.randint(0, 7)
        got = enumerate_accepted(A, ell)
        assert got.ell == ell
        expected = {w for w in words_up_to(A.alphabet, ell) if brute_accepts(A, w)}
        assert got.wordset == expected


def test_determinize_trajectory():
    A = nfca_fig2(4)
    D = determinize(A)
    s = D.initial
    assert D.labels[s] == {0}
    s = D.delta(s, "b")
    assert D.labels[s] == {0}
    s = D.delta(s, "a")
    assert D.labels[s] == {0, 1}


def test_determinize_has_sink():
    A = Nfa.build("ab", 2, [(0, "a", 1), (1, "a", 1), (1, "b", 1), (0, "b", 0)], [1])
    D = determinize(A)
    # every subset reached is non-empty, yet the empty sink is still there
    assert frozenset() in D.labels
    sink = D.labels.index(frozenset())
    assert all(t == sink for t in D.table[sink])


def test_no_finals_gives_empty_language():
    A = Nfa.build("ab", 2, [(0, "a", 1), (1, "b", 0)], [])
    D = minimize_dfa(determinize(A))
    assert D.state_count == 1 and not D.finals


def test_determinize_preserves_language(rng):
    for _ in range(100):
        A = random_nfa(rng)
        D = determinize(A)
        for w in words_up_to(A.alphabet, 5):
            assert accepts(D, w) == accepts(A, w)


def test_fig1_minimal_dfa_has_15_states():
    assert minimize_dfa(determinize(nfa_fig1(2, 4))).state_count == 15


def test_minimize_idempotent_and_canonical(rng):
    for _ in range(60):
        A = random_nfa(rng)
        M = minimize_dfa(determinize(A))
        assert minimize_dfa(M) == M
        for w in words_up_to(A.alphabet, 5):
            assert accepts(M, w) == accepts(A, w)
        # relabelling the input does not change the canonical output
        perm = list(range(A.state_count))
        rng.shuffle(perm)
        B = Nfa.build(A.alphabet, A.state_count, [(perm[s], a, perm[t]) for s, a, t in A.transitions],
                      [perm[f] for f in A.finals], initial=perm[A.initial])
        assert minimize_dfa(determinize(B)) == M


def test_minimal_dfa_of_empty_language():
    D = Dfa(3, ("a",), 0, set(), [[1], [2], [0]])
    assert minimize_dfa(D).state_count == 1


def test_levels_fig7():
    A, _ = fixture_fig7()
    assert levels(A) == {0: 0, 1: 1, 5: 1, 2: 2, 6: 2, 3: 3, 4: 4}


def test_levels_invariant(rng):
    for _ in range(100):
        A = random_nfa(rng)
        lv = levels(A)
        assert lv[A.initial] == 0
        for s, _, t in A.transitions:
            if lv[s] is not None:
                assert lv[t] is not None and lv[t] <= lv[s] + 1


def test_unreachable_level_and_witness():
    A = Nfa.build("a", 2, [], [1])
    assert levels(A)[1] is UNREACHABLE
    with pytest.raises(NoWitnessError):
        shortest_witness(A, 1)


def test_shortest_witness_is_shortlex_least(rng):
    for _ in range(80):
        A = random_nfa(rng)
        lv = levels(A)
        for s in range(A.state_count):
            if lv[s] is None:
                continue
            w = shortest_witness(A, s)
            assert len(w) == lv[s]
            first = next(x for x in words_up_to(A.alphabet, lv[s]) if s in A.reached(x))
            assert w == first


def test_shortest_witness_fig2():
    A = nfca_fig2(4)
    assert shortest_witness(A, 3) == "aaa"
    assert shortest_witness(A, 0) == ""


def test_trim_keeps_bounded_language(rng):
    for _ in range(100):
        A = random_nfa(rng)
        ell = rng.randint(0, 6)
        T = trim(A, ell)
        assert T.state_count <= A.state_count
        assert enumerate_accepted(T, ell).wordset == enumerate_accepted(A, ell).wordset
        lv, cd = levels(T), codistances(T)
        for s in range(T.state_count):
            if s != T.initial:
                assert lv[s] + cd[s] <= ell


def test_trim_empty_language_single_state():
    A = Nfa.build("a", 3, [(0, "a", 1), (1, "a", 2)], [])
    T = trim(A, 5)
    assert T.state_count == 1 and not T.finals


def test_finite_language_container():
    L = FiniteLanguage(["ba", "a", "", "a"], alphabet="ab")
    assert L.words == ("", "a", "ba")
    assert L.ell == 2
    with pytest.raises(DomainError):
        FiniteLanguage(["abc"], ell=2)
    with pytest.raises(DomainError):
        FiniteLanguage(["c"], alphabet="ab")
    assert FiniteLanguage([]).ell == 0


def test_shortlex_enumeration_order():
    words = list(words_up_to("ba", 2))
    assert words == ["", "b", "a", "bb", "ba", "ab", "aa"]
    assert len(list(words_up_to("ab", 5))) == sum(2 ** k for k in range(6))


def test_random_nfa_product_oracle(rng):
    # membership agrees with a direct product over all words of length <= 4
    for _ in range(30):
        A = random_nfa(rng, alphabet="abc")
        for n in range(5):
            for w in product("abc", repeat=n):
                w = "".join(w)
                assert accepts(A, w) == brute_accepts(A, w)
