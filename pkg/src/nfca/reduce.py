"""State merging and other size reductions for cover automata.

A *weak* merge of ``q`` into ``p`` collapses the two states, so every edge
touching ``q`` is re-attached to ``p``.  A *strong* merge redirects the edges
entering ``q`` to ``p`` and deletes ``q`` with everything leaving it.  Strong
merges of similar states, keeping the state of lower level, preserve cover
equality; weak merges never remove words but may add some.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .automata import Nfa, as_nfa, codistances, enumerate_accepted, iter_bits, levels, trim
from .cover import is_cover, similarity_pairs
from .errors import DomainError, PreconditionError


class MergeKind(str, Enum):
    WEAK = "WEAK"
    STRONG = "STRONG"


@dataclass(frozen=True)
class MergeReport:
    kind: MergeKind
    merged_into: int
    removed: int
    cover_preserved: bool
    witness: Optional[str] = None


def _check_pair(A, p, q):
    if p == q:
        raise DomainError("cannot merge a state into itself")
    for s in (p, q):
        if not 0 <= s < A.state_count:
            raise DomainError(f"state {s} out of range")


def _renumber(q, p):
    """Index map after deleting ``q``; ``q`` itself maps onto ``p``."""
    def new(s):
        if s == q:
            s = p
        return s - 1 if s > q else s
    return new


def weak_merge(automaton, p, q):
    """Collapse ``q`` into ``p``; ``p`` becomes final if either state was."""
    A = as_nfa(automaton)
    _check_pair(A, p, q)
    new = _renumber(q, p)
    transitions = {(new(s), a, new(t)) for s, a, t in A.transitions}
    finals = {new(f) for f in A.finals}
    return Nfa(A.state_count - 1, A.alphabet, new(A.initial), frozenset(finals), frozenset(transitions))


def strong_merge(automaton, p, q):
    """Redirect the edges entering ``q`` to ``p`` and delete ``q`` with its outgoing edges.

    No cover check is made here; see :func:`reduce_nfca` for the safe use.
    """
    A = as_nfa(automaton)
    _check_pair(A, p, q)
    new = _renumber(q, p)
    transitions = {(new(s), a, new(t)) for s, a, t in A.transitions if s != q}
    finals = {new(f) for f in A.finals if f != q}
    return Nfa(A.state_count - 1, A.alphabet, new(A.initial), frozenset(finals), frozenset(transitions))


def merge_and_check(automaton, L, p, q, kind):
    """Merge ``q`` into ``p`` and report whether the result still covers ``L``."""
    kind = MergeKind(kind)
    merged = (weak_merge if kind is MergeKind.WEAK else strong_merge)(automaton, p, q)
    verdict = is_cover(merged, L)
    return merged, MergeReport(kind, p, q, verdict.equal, verdict.witness)


def reduce_nfca(automaton, L):
    """Greedy strong merging of similar states until no similar pair is left.

    Each round trims to ``L.ell``, recomputes levels and similar pairs, and
    removes the similar state of highest level (ties: smallest pair) into its
    partner.  Returns the reduced automaton and one report per merge.
    """
    A = as_nfa(automaton)
    verdict = is_cover(A, L)
    if not verdict.equal:
        raise PreconditionError(f"input is not a cover automaton for the language (witness {verdict.witness!r})")
    reports = []
    while True:
        A = trim(A, L.ell)
        lv = levels(A)
        best = None
        for x, y in similarity_pairs(A, L.ell):
            keep, drop = (x, y) if lv[x] <= lv[y] else (y, x)
            rank = (-lv[drop], x, y)
            if best is None or rank < best[0]:
                best = (rank, keep, drop)
        if best is None:
            return A, reports
        _, keep, drop = best
        merged, report = merge_and_check(A, L, keep, drop, MergeKind.STRONG)
        if not report.cover_preserved:
            raise AssertionError(f"strong merge of similar states {drop}->{keep} broke cover equality")
        reports.append(report)
        A = merged


def subautomaton_states(automaton, p):
    """States reachable from ``p`` that can still reach a final state, plus ``p``."""
    A = as_nfa(automaton)
    codist = codistances(A)
    seen = {p}
    stack = [p]
    while stack:
        s = stack.pop()
        for i in range(len(A.alphabet)):
            for t in iter_bits(A.succ_masks[i][s]):
                if t not in seen and codist[t] is not None:
                    seen.add(t)
                    stack.append(t)
    return seen


def _right_language(A, p, budget):
    start = Nfa(A.state_count, A.alphabet, p, A.finals, A.transitions)
    return enumerate_accepted(start, budget).wordset


def replace_subautomaton(automaton, p, A1, A2, L):
    """Replace the sub-automaton generated by ``p`` with the union of ``A1`` and ``A2``.

    ``p`` keeps its finality and its external edges, and gains the first-step
    behaviour of both initial states.  The non-empty words of length at most
    ``L.ell - level(p)`` accepted from ``p`` must equal those of
    ``L(A1) | L(A2)``.  Raises :class:`PreconditionError` naming the violated
    clause; the result is checked to cover ``L`` before it is returned.
    """
    A = as_nfa(automaton)
    A1, A2 = as_nfa(A1), as_nfa(A2)
    if not 0 <= p < A.state_count:
        raise DomainError(f"state {p} out of range")
    for part in (A1, A2):
        if set(part.alphabet) - set(A.alphabet):
            raise DomainError("replacement automata must use the host alphabet")
    region = subautomaton_states(A, p)
    inner = region - {p}
    if A.initial in inner:
        raise PreconditionError(f"closure violated: the initial state lies inside the sub-automaton of {p}")
    for s, a, t in A.sorted_transitions():
        if s not in region and t in inner:
            raise PreconditionError(f"closure violated: transition {s} -{a}-> {t} enters the sub-automaton of {p}")

    level = levels(A)[p]
    if level is None or level > L.ell:
        raise PreconditionError(f"state {p} is unreachable or above the cover length")
    budget = L.ell - level
    here = _right_language(A, p, budget) - {""}
    there = (enumerate_accepted(A1, budget).wordset | enumerate_accepted(A2, budget).wordset) - {""}
    if here != there:
        sample = min(here ^ there, key=lambda w: (len(w), w))
        raise PreconditionError(f"bounded right-language mismatch at state {p} (first difference {sample!r})")

    outer = [s for s in range(A.state_count) if s not in inner]
    index = {s: i for i, s in enumerate(outer)}
    off1 = len(outer)
    off2 = off1 + A1.state_count
    transitions = set()
    for s, a, t in A.transitions:
        if s in index and s != p and t in index:
            transitions.add((index[s], a, index[t]))
    for s, a, t in A.transitions:
        if s == p and (t not in region or t == p):
            transitions.add((index[p], a, index[t]))
    for part, off in ((A1, off1), (A2, off2)):
        for s, a, t in part.transitions:
            transitions.add((off + s, a, off + t))
            if s == part.initial:
                transitions.add((index[p], a, off + t))
    finals = {index[f] for f in A.finals if f in index}
    finals |= {off1 + f for f in A1.finals} | {off2 + f for f in A2.finals}
    B = Nfa(off2 + A2.state_count, A.alphabet, index[A.initial], frozenset(finals), frozenset(transitions))
    verdict = is_cover(B, L)
    if not verdict.equal:
        raise PreconditionError(f"cover check failed for the rebuilt automaton (witness {verdict.witness!r})")
    return B
