import random
from itertools import product

import pytest

from nfca import FiniteLanguage, Nfa


def random_nfa(rng, max_states=6, alphabet="ab", density=0.25):
    n = rng.randint(1, max_states)
    T = [(s, a, t) for s in range(n) for a in alphabet for t in range(n) if rng.random() < density]
    finals = [s for s in range(n) if rng.random() < 0.4]
    return Nfa.build(alphabet, n, T, finals)


def random_language(rng, alphabet="ab", max_ell=6, p=None):
    ell = rng.randint(0, max_ell)
    p = rng.random() if p is None else p
    words = ["".join(w) for n in range(ell + 1) for w in product(alphabet, repeat=n) if rng.random() < p]
    return FiniteLanguage(words, ell=ell, alphabet=alphabet)


def brute_accepts(A, word):
    """Path-search membership, independent of the bitmask simulation."""
    current = {A.initial}
    for c in word:
        current = {t for s, a, t in A.transitions if s in current and a == c}
    return bool(current & A.finals)


def fig5_left():
    """The six-state automaton of the decomposition example: a 2-cycle and a 3-cycle off the start."""
    return Nfa.build("a", 6, [(0, "a", 1), (0, "a", 3), (1, "a", 2), (2, "a", 1),
                              (3, "a", 4), (4, "a", 5), (5, "a", 3)], [2, 4, 5])


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_nfca(rng, max_states=8, max_ell=8):
    """A trimmed automaton together with the finite language it covers.

    Every state gets an incoming edge from an earlier one so that trimming
    rarely collapses the sample to the initial state alone.
    """
    from nfca import enumerate_accepted, trim

    alphabet = rng.choice(["a", "ab"])
    n = rng.randint(1, max_states)
    density = rng.uniform(0.1, 0.35)
    T = {(rng.randrange(s), rng.choice(alphabet), s) for s in range(1, n)}
    T |= {(s, a, t) for s in range(n) for a in alphabet for t in range(n) if rng.random() < density}
    finals = [s for s in range(n) if rng.random() < 0.4]
    ell = rng.randint(0, max_ell)
    A = trim(Nfa.build(alphabet, n, sorted(T), finals), ell)
    return A, enumerate_accepted(A, ell)


def nfca_corpus(count=1000, seed=4):
    rng = random.Random(seed)
    return [random_nfca(rng) for _ in range(count)]
