"""Cover-language semantics: cover equality and state similarity."""

from dataclasses import dataclass
from typing import Optional

from .automata import as_nfa, enumerate_accepted, levels
from .errors import DomainError
from .words import shortlex_key


@dataclass(frozen=True)
class CoverVerdict:
    equal: bool
    witness: Optional[str] = None

    def __bool__(self):
        return self.equal


def is_cover(automaton, L):
    """Whether ``L(A)`` agrees with ``L`` on every word of length at most ``L.ell``.

    On disagreement the shortlex-least differing word (in the automaton's
    alphabet order) is returned as witness.
    """
    A = as_nfa(automaton)
    used = {c for w in L.words for c in w}
    if used - set(A.alphabet):
        raise DomainError(f"language uses symbols the automaton lacks: {sorted(used - set(A.alphabet))}")
    diff = enumerate_accepted(A, L.ell).wordset ^ L.wordset
    if not diff:
        return CoverVerdict(True)
    return CoverVerdict(False, min(diff, key=shortlex_key(A.alphabet)))


class _Similarity:
    """Memoized synchronized walk of two subset constructions."""

    def __init__(self, A):
        self.A = A
        self.memo = {}

    def agree(self, P, Q, budget):
        if P == Q:
            return True
        key = (P, Q, budget) if P < Q else (Q, P, budget)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        fin = self.A.final_mask
        ok = bool(P & fin) == bool(Q & fin)
        if ok and budget > 0:
            for i in range(len(self.A.alphabet)):
                if not self.agree(self.A.step(P, i), self.A.step(Q, i), budget - 1):
                    ok = False
                    break
        self.memo[key] = ok
        return ok


def _check_state(lv, s, ell):
    if s not in lv:
        raise DomainError(f"state {s} out of range")
    if lv[s] is None:
        raise DomainError(f"state {s} is unreachable")
    if lv[s] > ell:
        raise DomainError(f"state {s} has level {lv[s]} > ell={ell}")


def state_similar(automaton, ell, p, q):
    """``p ~_A q``: equal acceptance from ``p`` and ``q`` up to ``ell - max(level(p), level(q))``."""
    A = as_nfa(automaton)
    lv = levels(A)
    _check_state(lv, p, ell)
    _check_state(lv, q, ell)
    return _Similarity(A).agree(1 << p, 1 << q, ell - max(lv[p], lv[q]))


def similarity_pairs(automaton, ell):
    """All unordered similar pairs ``(p, q)`` with ``p < q``, in increasing order."""
    A = as_nfa(automaton)
    lv = levels(A)
    for s in range(A.state_count):
        _check_state(lv, s, ell)
    walker = _Similarity(A)
    pairs = []
    for p in range(A.state_count):
        for q in range(p + 1, A.state_count):
            if walker.agree(1 << p, 1 << q, ell - max(lv[p], lv[q])):
                pairs.append((p, q))
    return pairs
