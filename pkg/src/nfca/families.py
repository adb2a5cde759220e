"""Language families and fixed example automata.

Every automaton built here is checked against the language it is meant to
represent; a mismatch raises :class:`FixtureIntegrityError`.
"""

from dataclasses import dataclass
from itertools import product

from .automata import Nfa, enumerate_accepted, levels
from .cover import is_cover, state_similar
from .errors import DomainError, FixtureIntegrityError
from .language import word_similar
from .words import FiniteLanguage


@dataclass(frozen=True)
class FamilyParams:
    """``LF`` with ``(m, n)`` or ``LLK`` with ``(l, k)``."""

    family: str
    first: int
    second: int

    def __post_init__(self):
        if self.family not in ("LF", "LLK"):
            raise DomainError(f"unknown family {self.family!r}")
        _check_lf(self.first, self.second) if self.family == "LF" else _check_llk(self.first, self.second)

    def language(self):
        return (gen_lf if self.family == "LF" else gen_llk)(self.first, self.second)


def _check_lf(m, n):
    if m < 0 or n < 2:
        raise DomainError(f"LF needs m >= 0 and n >= 2, got m={m}, n={n}")


def _check_llk(l, k):
    if not l > k >= 2:
        raise DomainError(f"LLK needs l > k >= 2, got l={l}, k={k}")


def gen_lf(m, n):
    """Words ``u a v`` over ``{a, b}`` with ``|u| <= m`` and ``|v| = n - 2``; ``ell = m + n - 1``."""
    _check_lf(m, n)
    tails = ["".join(v) for v in product("ab", repeat=n - 2)]
    words = set()
    for size in range(m + 1):
        for u in product("ab", repeat=size):
            head = "".join(u) + "a"
            words.update(head + v for v in tails)
    return FiniteLanguage(words, ell=m + n - 1, alphabet="ab")


def gen_llk(l, k, ell=None):
    """Unary words ``a^(1+m)`` for ``0 <= m <= l`` with ``m`` not a multiple of ``k``.

    The cover length defaults to ``l + 1``, the longest word; with ``ell=l``
    the language is truncated to words of length at most ``l``.
    """
    _check_llk(l, k)
    if ell is None:
        ell = l + 1
    if ell < 0:
        raise DomainError("ell must be non-negative")
    words = ["a" * (1 + m) for m in range(l + 1) if m % k and 1 + m <= ell]
    return FiniteLanguage(words, ell=ell, alphabet="a")


def _expect_cover(A, L, what):
    verdict = is_cover(A, L)
    if not verdict.equal:
        raise FixtureIntegrityError(f"{what} does not cover its language (witness {verdict.witness!r})")
    return A


def _expect(condition, message):
    if not condition:
        raise FixtureIntegrityError(message)


def nfca_fig2(n):
    """``n`` states: a looping start state, an ``a`` into a chain of ``n - 1`` states, last one final.

    Accepts ``{a,b}* a {a,b}^(n-2)`` and so covers ``gen_lf(m, n)`` for every ``m``.
    """
    _check_lf(0, n)
    T = [(0, c, 0) for c in "ab"] + [(0, "a", 1)]
    T += [(i, c, i + 1) for i in range(1, n - 1) for c in "ab"]
    A = Nfa.build("ab", n, T, [n - 1])
    for m in (0, 1):
        _expect_cover(A, gen_lf(m, n), f"nfca_fig2({n})")
    return A


def nfa_fig1(m, n):
    """An ``m + n`` state NFA accepting exactly ``gen_lf(m, n)``.

    States ``0..m`` form a chain on both symbols; each of them enters the
    chain ``m+1 .. m+n-1`` on ``a``, whose last state is final.
    """
    _check_lf(m, n)
    T = [(j, c, j + 1) for j in range(m) for c in "ab"]
    T += [(j, "a", m + 1) for j in range(m + 1)]
    T += [(m + i, c, m + i + 1) for i in range(1, n - 1) for c in "ab"]
    A = Nfa.build("ab", m + n, T, [m + n - 1])
    L = gen_lf(m, n)
    _expect(enumerate_accepted(A, L.ell + A.state_count).wordset == L.wordset,
            f"nfa_fig1({m}, {n}) does not accept exactly its language")
    return A


def ak_automaton(k):
    """States ``0..k``: ``0 -> 1 -> ... -> k -> 1`` on ``a``, finals ``2..k``; covers ``gen_llk(l, k)``."""
    _check_llk(k + 1, k)
    T = [(i, "a", i + 1) for i in range(k)] + [(k, "a", 1)]
    A = Nfa.build("a", k + 1, T, range(2, k + 1))
    for l in (k + 1, 2 * k + 1):
        _expect_cover(A, gen_llk(l, k), f"ak_automaton({k})")
    return A


def fixture_fig6():
    """Two branches on ``b`` (a 2-cycle and a 3-cycle) and one on ``a`` (a 2-cycle); ``ell = 14``.

    In it ``ba`` reaches 2 and ``aa`` reaches 7; states 2 and 7 are similar
    although the words ``aa`` and ``ba`` are not.
    """
    ell = 14
    T = [(0, "b", 1), (0, "b", 3), (0, "a", 6), (1, "a", 2), (2, "a", 1),
         (3, "a", 4), (4, "a", 5), (5, "a", 3), (6, "a", 7), (7, "a", 6)]
    A = Nfa.build("ab", 8, T, [2, 4, 5, 7])
    L = enumerate_accepted(A, ell)
    _expect(2 in A.reached("ba") and 7 in A.reached("aa"), "fixture_fig6: 2 in d(0,ba) and 7 in d(0,aa) expected")
    _expect("baa" in L and "aaa" not in L, "fixture_fig6: should accept baa and reject aaa")
    _expect(state_similar(A, ell, 2, 7), "fixture_fig6: states 2 and 7 should be similar")
    _expect(not word_similar(L, "aa", "ba"), "fixture_fig6: aa and ba should be dissimilar")
    return A, ell


def fixture_fig7():
    """Two ``a``-paths from the start: one through a looping state 3 to final 4, one to final 6; ``ell = 4``.

    It covers ``{aa, aaaa}``; states 3 and 5 are similar.
    """
    ell = 4
    T = [(0, "a", 1), (0, "a", 5), (1, "a", 2), (2, "a", 3), (3, "a", 3), (3, "a", 4), (5, "a", 6)]
    A = Nfa.build("a", 7, T, [4, 6])
    _expect_cover(A, fig7_language(), "fixture_fig7")
    _expect(levels(A)[3] == 3, "fixture_fig7: state 3 should have level 3")
    return A, ell


def fig7_language():
    return FiniteLanguage(["aa", "aaaa"], ell=4, alphabet="a")
