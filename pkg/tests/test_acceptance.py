"""Acceptance suite: one PASS/FAIL line per criterion, printed even under capture.

All comparisons are exact (integer sizes, word sets, verdicts); there are no
numeric tolerances to pin.
"""

import random

import pytest

from conftest import nfca_corpus, random_language, random_nfa
from nfca import (
    FiniteLanguage, FoolingMode, MergeKind, SearchBudget, accepts, complexity_report,
    enumerate_accepted, fixture_fig6, fixture_fig7, gen_lf, gen_llk, is_cover, levels,
    max_dissimilar_sequence, max_fooling_set, merge_and_check, minimal_nfa_exact,
    minimal_unary_nfa_for_lengthset, minimize_dfca, reduction_nfa, similarity_pairs,
    state_similar, strong_merge, trim, weak_merge, word_similar,
)
from nfca.bounds import splittings
from nfca.families import fig7_language
from nfca.hardness import covers_everything, random_formulas, small_formulas
from nfca.words import words_up_to


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        return ok
    return emit


def test_criterion_1_lf24_quartet(verdict):
    d = complexity_report(gen_lf(2, 4)).to_dict()
    expected = {"sc": 15, "csc": 8, "nsc": 6, "ncsc": 4}
    assert verdict(1, d == expected, f"L_F(2,4) report {d}, expected {expected}")


def test_criterion_2_dissimilar_words(verdict):
    L = gen_lf(2, 4)
    words = [w for w in words_up_to("ab", 3) if len(w) == 3]
    pairwise = all(not word_similar(L, x, y) for i, x in enumerate(words) for y in words[i + 1:])
    size = len(max_dissimilar_sequence(L))
    ok = len(words) == 8 and pairwise and size == 8
    assert verdict(2, ok, f"{len(words)} length-3 words pairwise dissimilar={pairwise}; "
                          f"max dissimilar sequence {size}, expected 8")


def _llk97(ell):
    L = gen_llk(9, 7, ell=ell)
    return minimal_unary_nfa_for_lengthset([len(w) for w in L.words], L.ell, SearchBudget(6))


def test_criterion_3_llk97_unary_search(verdict):
    outcomes = {}
    for ell in (10, 9):
        res = _llk97(ell)
        outcomes[ell] = res
    matching = [ell for ell, r in outcomes.items() if r.size == 6 and not r.timed_out]
    parts = []
    for ell, r in outcomes.items():
        found = f"minimum {r.size}" if r.size is not None else f"no cover with <= 6 states (minimum >= {r.lower})"
        parts.append(f"ell={ell}: {found}")
    closest = gen_llk(9, 6)
    side = minimal_unary_nfa_for_lengthset([len(w) for w in closest.words], closest.ell).size
    reading = f"matching reading ell={matching[0]}" if matching else "neither reading gives 6"
    detail = "; ".join(parts) + f"; {reading}; for comparison gen_llk(9,6) has minimum {side}"
    assert verdict(3, bool(matching), detail)


def test_criterion_4_fooling_ceiling(verdict):
    ok = True
    parts = []
    for l, k in ((9, 5), (11, 5)):
        L = gen_llk(l, k)
        fool = len(max_fooling_set(L, FoolingMode.COVER_EXTENDED))
        restricted = len(max_fooling_set(L, FoolingMode.COVER_EXTENDED,
                                         [(x, y) for x, y in splittings(L) if len(x) > 1]))
        ncsc = minimal_unary_nfa_for_lengthset([len(w) for w in L.words], L.ell, SearchBudget(8))
        bound = ncsc.size if ncsc.size is not None else ncsc.lower
        ok &= fool <= 3 and bound > 3
        parts.append(f"gen_llk({l},{k}): max COVER_EXTENDED fooling set {fool} "
                     f"(limited to |x| > 1: {restricted}), ncsc {bound}")
    assert verdict(4, ok, "; ".join(parts) + "; need fooling <= 3 < ncsc")


def test_criterion_5_merge_fixtures(verdict):
    A, ell = fixture_fig7()
    L = fig7_language()
    pairs = similarity_pairs(A, ell)
    lv = levels(A)
    B = trim(strong_merge(A, 5, 3), ell)
    strong_ok = B.state_count == 5 and is_cover(B, L).equal and lv[5] <= lv[3]
    _, weak = merge_and_check(A, L, 5, 3, MergeKind.WEAK)
    F, ell6 = fixture_fig6()
    L6 = enumerate_accepted(F, ell6)
    fig6_ok = ell6 == 14 and not word_similar(L6, "aa", "ba") and state_similar(F, ell6, 2, 7)
    ok = (3, 5) in pairs and strong_ok and not weak.cover_preserved and weak.witness == "aaa" and fig6_ok
    assert verdict(5, ok, f"fig7 pairs {pairs}; strong merge+trim -> {B.state_count} states, "
                          f"cover={strong_ok}; weak merge witness {weak.witness!r}; fig6 claims {fig6_ok}")


def test_criterion_6_strong_merge_safety(verdict):
    merges = failures = 0
    for A, L in nfca_corpus(1000):
        lv = levels(A)
        for x, y in similarity_pairs(A, L.ell):
            for p, q in ((x, y), (y, x)):
                if lv[p] <= lv[q]:
                    merges += 1
                    failures += not is_cover(strong_merge(A, p, q), L).equal
    ok = failures == 0 and merges > 0
    assert verdict(6, ok, f"{merges} strong merges over 1000 random NFCAs, {failures} broke the cover")


def test_criterion_7_weak_merge_monotone(verdict):
    merges = failures = 0
    for A, L in nfca_corpus(1000):
        before = enumerate_accepted(A, 8).wordset
        for p in range(A.state_count):
            for q in range(p + 1, A.state_count):
                after = enumerate_accepted(weak_merge(A, p, q), 8).wordset
                merges += 1
                # a superset up to length 8 is a superset at every smaller bound too
                failures += not before <= after
    ok = failures == 0 and merges > 0
    assert verdict(7, ok, f"{merges} weak merges checked at ell <= 8, {failures} lost a word")


def test_criterion_8_hardness(verdict):
    formulas = list(small_formulas(1, 3)) + list(small_formulas(2, 3)) + list(random_formulas(3, 50))
    mismatches = 0
    for F in formulas:
        R = reduction_nfa(F)
        if F.variable_count == 3:
            assert R.primes == (2, 3, 5) and R.ell == 30
        mismatches += covers_everything(R).equal != (not F.is_satisfiable())
    assert verdict(8, mismatches == 0,
                   f"{len(formulas)} formulas, cover of a* <=> UNSAT mismatches: {mismatches}")


def test_criterion_9_oracles(verdict):
    rng = random.Random(99)
    enum_bad = 0
    for _ in range(300):
        A = random_nfa(rng, alphabet=rng.choice(["a", "ab"]))
        ell = rng.randint(0, 8)
        got = enumerate_accepted(A, ell).wordset
        enum_bad += got != {w for w in words_up_to(A.alphabet, ell) if accepts(A, w)}

    search_bad = 0
    for _ in range(80):
        ell = rng.randint(0, 9)
        T = {t for t in range(ell + 1) if rng.random() < 0.5}
        L = FiniteLanguage(("a" * t for t in T), ell=ell, alphabet="a")
        u = minimal_unary_nfa_for_lengthset(T, ell, SearchBudget(4))
        g = minimal_nfa_exact(L, SearchBudget(4, None, "COVER"))
        search_bad += u.size != g.size

    dfca_bad = 0
    for _ in range(200):
        L = random_language(rng, alphabet=rng.choice(["a", "ab"]), max_ell=6)
        dfca_bad += minimize_dfca(L).state_count != len(max_dissimilar_sequence(L))

    ok = enum_bad == search_bad == dfca_bad == 0
    assert verdict(9, ok, f"enumerate vs accepts mismatches {enum_bad}/300; unary vs general search "
                          f"{search_bad}/80; DFCA vs dissimilar sequence {dfca_bad}/200")
