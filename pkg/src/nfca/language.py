"""Word similarity, dissimilar sequences and DFAs built from explicit word sets."""

from .automata import Dfa, minimize_dfa
from .clique import max_clique
from .words import FiniteLanguage

__all__ = ["FiniteLanguage", "word_similar", "max_dissimilar_sequence", "dfa_of", "residual"]


def residual(L, x, budget):
    """Suffixes ``w`` with ``|w| <= budget`` and ``x + w`` in ``L``."""
    n = len(x)
    return frozenset(w[n:] for w in L.words if len(w) - n <= budget and w.startswith(x))


def word_similar(L, x, y):
    """``x ~_L y``: every extension within ``ell - max(|x|, |y|)`` treats both alike."""
    budget = L.ell - max(len(x), len(y))
    if budget < 0:
        return True
    return residual(L, x, budget) == residual(L, y, budget)


def dfa_of(L):
    """Minimal complete DFA accepting exactly ``L.words`` (trie plus sink, minimized)."""
    alphabet = L.alphabet
    node = {"": 0}
    order = [""]
    for w in L.words:
        for k in range(1, len(w) + 1):
            p = w[:k]
            if p not in node:
                node[p] = len(order)
                order.append(p)
    sink = len(order)
    table = []
    for p in order:
        table.append([node.get(p + a, sink) for a in alphabet])
    table.append([sink] * len(alphabet))
    finals = {node[w] for w in L.words}
    return minimize_dfa(Dfa(len(order) + 1, alphabet, 0, finals, table))


def _representatives(L):
    """Shortlex-least word for every state of ``dfa_of(L)`` reachable within ``ell``.

    Two words reaching the same DFA state are similar, and the shorter one is
    dissimilar from everything the longer one is, so a maximum dissimilar
    sequence can always be drawn from these representatives.
    """
    D = dfa_of(L)
    rep = {D.initial: ""}
    frontier = [D.initial]
    for _ in range(L.ell):
        nxt = []
        for s in frontier:
            for i, a in enumerate(D.alphabet):
                t = D.table[s][i]
                if t not in rep:
                    rep[t] = rep[s] + a
                    nxt.append(t)
        frontier = nxt
    return sorted(rep.values(), key=L.shortlex_key())


def max_dissimilar_sequence(L):
    """A maximum set of pairwise ``~_L``-dissimilar words of length at most ``ell``."""
    words = _representatives(L)
    adjacency = [0] * len(words)
    for i, x in enumerate(words):
        for j in range(i + 1, len(words)):
            if not word_similar(L, x, words[j]):
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    clique = max_clique(adjacency)
    return [words[i] for i in sorted(clique)]
