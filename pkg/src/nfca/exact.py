"""Exact state complexities: sc, csc, nsc and ncsc of a finite language.

sc and csc come from polynomial constructions (minimal DFA, DFCA by
similarity merging).  nsc and ncsc need exhaustive search, which is bounded by
a :class:`SearchBudget`; when the budget runs out the answer is an interval.
"""

import json
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from . import _kernels
from .automata import Dfa, Nfa, as_nfa, enumerate_accepted, levels, restrict, trim
from .bounds import FoolingMode, fooling_bound
from .cover import is_cover
from .errors import DomainError
from .language import dfa_of, word_similar
from .reduce import reduce_nfca
from .words import FiniteLanguage, words_up_to


class SearchMode(str, Enum):
    EQUAL = "EQUAL"
    COVER = "COVER"


@dataclass(frozen=True)
class SearchBudget:
    max_states: int = 8
    deadline: Optional[float] = None
    mode: SearchMode = SearchMode.COVER

    def __post_init__(self):
        if self.max_states < 1:
            raise DomainError("max_states must be at least 1")
        object.__setattr__(self, "mode", SearchMode(self.mode))


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive search.

    ``size`` is ``None`` when the search did not finish or found nothing
    within ``max_states``; ``lower`` is then the smallest size not yet
    refuted and ``upper`` the best size known (``None`` if none).
    Unpacks as ``(size, automaton)``.
    """

    size: Optional[int]
    automaton: Optional[Nfa]
    lower: int
    upper: Optional[int]
    timed_out: bool = False
    nodes: int = 0

    def __iter__(self):
        return iter((self.size, self.automaton))


def _absolute(deadline):
    return 0.0 if deadline is None else time.monotonic() + max(float(deadline), 1e-6)


# ---------------------------------------------------------------- DFCA


def minimize_dfca(L):
    """A minimal complete deterministic cover automaton for ``L``.

    States of ``dfa_of(L)`` are visited in index (breadth-first) order; each
    is merged into the least-index earlier representative whose shortest
    word is similar to its own, otherwise it becomes a representative.
    """
    D = dfa_of(L)
    words = {D.initial: ""}
    order = [D.initial]
    for s in order:
        for i, a in enumerate(D.alphabet):
            t = D.table[s][i]
            if t not in words:
                words[t] = words[s] + a
                order.append(t)
    order.sort()
    reps = []
    cls = {}
    for s in order:
        for r in reps:
            if word_similar(L, words[r], words[s]):
                cls[s] = cls[r]
                break
        else:
            cls[s] = len(reps)
            reps.append(s)
    table = [[cls[D.table[r][i]] for i in range(len(D.alphabet))] for r in reps]
    finals = {cls[r] for r in reps if r in D.finals}
    labels = tuple(words[r] for r in reps)
    result = Dfa(len(reps), D.alphabet, cls[D.initial], frozenset(finals), tuple(map(tuple, table)), labels)
    assert is_cover(result, L).equal
    return result


# ---------------------------------------------------------------- NFA search


def _rows_to_nfa(alphabet, n, rows, finals_mask):
    transitions = set()
    for s in range(n):
        for i, a in enumerate(alphabet):
            m, t = rows[s][i], 0
            while m:
                if m & 1:
                    transitions.add((s, a, t))
                m >>= 1
                t += 1
    finals = {s for s in range(n) if finals_mask >> s & 1}
    return Nfa(n, tuple(alphabet), 0, frozenset(finals), frozenset(transitions))


def _accepts_exactly(A, L):
    """Exact-language check: an ``n``-state NFA accepting a word longer than ``ell``
    accepts one of length at most ``ell + n``."""
    return enumerate_accepted(A, L.ell + A.state_count).wordset == L.wordset


def minimal_nfa_exact(L, budget=SearchBudget(), lower_bound=1):
    """Smallest NFA (``EQUAL``) or cover NFA (``COVER``) for ``L`` with at most ``budget.max_states`` states.

    Sizes are tried upward from ``lower_bound``, which must be a valid lower
    bound.  The witness has initial state 0 and states numbered by first use.
    """
    equal = budget.mode is SearchMode.EQUAL
    alphabet = L.alphabet
    members = [w in L.wordset for w in words_up_to(alphabet, L.ell)]
    stop = _absolute(budget.deadline)
    nodes = 0
    n = max(1, lower_bound)
    while n <= budget.max_states:
        status, rows, fmask, count = _kernels.tree_search(len(alphabet), L.ell, members, n, equal, stop)
        nodes += count
        if status < 0:
            return SearchResult(None, None, n, None, True, nodes)
        if status > 0:
            A = _rows_to_nfa(alphabet, n, rows, fmask)
            ok = _accepts_exactly(A, L) if equal else is_cover(A, L).equal
            assert ok, "search produced an automaton that fails verification"
            return SearchResult(n, A, n, n, False, nodes)
        n += 1
    return SearchResult(None, None, n, None, False, nodes)


def minimal_unary_nfa_for_lengthset(T, ell, budget=SearchBudget()):
    """Smallest unary NFA accepting ``a^t`` for exactly the ``t <= ell`` in ``T``.

    Only lengths up to ``ell`` are constrained, so this is the cover measure
    of the unary language with length set ``T``.
    """
    T = set(T)
    if any(t < 0 or t > ell for t in T):
        raise DomainError("length set must lie within 0..ell")
    L = FiniteLanguage(("a" * t for t in T), ell=ell, alphabet=("a",))
    stop = _absolute(budget.deadline)
    nodes = 0
    for n in range(1, budget.max_states + 1):
        status, succ, fmask, count = _kernels.unary_search(sorted(T), ell, n, stop)
        nodes += count
        if status < 0:
            return SearchResult(None, None, n, None, True, nodes)
        if status > 0:
            A = _rows_to_nfa(("a",), n, [[r] for r in succ], fmask)
            assert is_cover(A, L).equal, "unary search produced an automaton that fails verification"
            return SearchResult(n, A, n, n, False, nodes)
    return SearchResult(None, None, budget.max_states + 1, None, False, nodes)


# ---------------------------------------------------------------- report


@dataclass
class ComplexityReport:
    """Values are ints when exact, ``(lower, upper)`` tuples otherwise."""

    sc: int
    csc: int
    nsc: object
    ncsc: object
    witnesses: dict = field(default_factory=dict)

    @staticmethod
    def bounds(value):
        return (value, value) if isinstance(value, int) else tuple(value)

    def is_consistent(self):
        sc, csc = self.sc, self.csc
        nl, nu = self.bounds(self.nsc)
        cl, cu = self.bounds(self.ncsc)
        return 1 <= cl <= cu and nl <= nu and cl <= nl and cu <= nu and nu <= sc and cu <= csc <= sc

    def to_dict(self):
        def enc(v):
            return v if isinstance(v, int) else {"lower": v[0], "upper": v[1]}
        return {"sc": self.sc, "csc": self.csc, "nsc": enc(self.nsc), "ncsc": enc(self.ncsc)}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=False)


def _searched(L, mode, lower, upper, witness, budget, stop):
    """Exact value by search between ``lower`` and ``upper - 1``; else the interval."""
    if lower >= upper:
        return upper, witness
    remaining = None if stop is None else max(stop - time.monotonic(), 1e-6)
    cap = min(upper - 1, budget.max_states)
    res = minimal_nfa_exact(L, SearchBudget(max(cap, 1), remaining, mode), lower)
    if res.size is not None:
        return res.size, res.automaton
    if not res.timed_out and res.lower > cap and cap == upper - 1:
        return upper, witness
    return (max(lower, res.lower), upper), witness


def complexity_report(L, budget=SearchBudget()):
    """sc, csc, nsc and ncsc of ``L``, with witnesses for the upper values.

    ``budget.max_states`` caps the searched sizes and ``budget.deadline``
    the total search time; ``budget.mode`` is ignored.
    """
    stop = None if budget.deadline is None else time.monotonic() + budget.deadline
    D = dfa_of(L)
    C = minimize_dfca(L)
    sc, csc = D.state_count, C.state_count

    nfa = trim(as_nfa(D), L.ell)
    n_lower = max(1, fooling_bound(L, FoolingMode.NFA_EXTENDED))
    nsc, nfa = _searched(L, SearchMode.EQUAL, n_lower, nfa.state_count, nfa, budget, stop)

    candidates = [as_nfa(nfa), trim(as_nfa(C), L.ell)]
    candidates.append(reduce_nfca(candidates[-1], L)[0])
    nfca = min(candidates, key=lambda A: A.state_count)
    c_lower = max(1, fooling_bound(L, FoolingMode.COVER_EXTENDED))
    ncsc, nfca = _searched(L, SearchMode.COVER, c_lower, nfca.state_count, nfca, budget, stop)

    # the chain ncsc <= nsc and ncsc <= csc
    nl, nu = ComplexityReport.bounds(nsc)
    cl, cu = ComplexityReport.bounds(ncsc)
    if nu < cu:
        cu, nfca = nu, nfa
    nl = max(nl, cl)
    nsc = nl if nl == nu else (nl, nu)
    ncsc = cl if cl == cu else (cl, cu)
    report = ComplexityReport(sc, csc, nsc, ncsc, {"sc": D, "csc": C, "nsc": nfa, "ncsc": nfca})
    assert report.is_consistent(), report.to_dict()
    return report
