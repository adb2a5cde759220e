"""Unary automata encoding 3-CNF satisfiability.

Variable ``x_i`` gets the ``i``-th prime ``p_i``.  A length ``t`` encodes the
assignment ``x_i = t mod p_i`` when every residue is 0 or 1.  The automaton
accepts the lengths that are not encodings at all, plus the encodings of
assignments falsifying some clause.  Below ``k = p_1 * ... * p_n`` every
assignment is encoded (Chinese remaindering), so the automaton covers ``a*``
up to length ``k`` exactly when the formula is unsatisfiable.
"""

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import lcm, prod

from .automata import Nfa
from .cover import is_cover
from .errors import DomainError
from .words import FiniteLanguage


@dataclass(frozen=True)
class CnfFormula:
    """``clauses`` holds triples of literals ``(variable, polarity)``, variables from 1."""

    variable_count: int
    clauses: tuple

    def __init__(self, variable_count, clauses):
        if variable_count < 1:
            raise DomainError("a formula needs at least one variable")
        norm = []
        for clause in clauses:
            lits = tuple(_literal(l) for l in clause)
            if len(lits) != 3:
                raise DomainError(f"clause {clause!r} does not have exactly 3 literals")
            for v, _ in lits:
                if not 1 <= v <= variable_count:
                    raise DomainError(f"variable {v} outside 1..{variable_count}")
            norm.append(lits)
        object.__setattr__(self, "variable_count", variable_count)
        object.__setattr__(self, "clauses", tuple(norm))

    def satisfied_by(self, values):
        """``values[v - 1]`` is the truth value of variable ``v``."""
        return all(any(values[v - 1] == pol for v, pol in c) for c in self.clauses)

    def is_satisfiable(self):
        return any(self.satisfied_by(bits) for bits in product((False, True), repeat=self.variable_count))


def _literal(lit):
    """Accept ``(v, polarity)`` or a DIMACS-style signed integer."""
    if isinstance(lit, int):
        if lit == 0:
            raise DomainError("0 is not a literal")
        return abs(lit), lit > 0
    v, pol = lit
    return int(v), bool(pol)


@dataclass(frozen=True)
class ReductionResult:
    automaton: Nfa
    ell: int
    primes: tuple


def first_primes(n):
    """The ``n`` smallest primes, by trial division."""
    if n < 1:
        raise DomainError("n must be at least 1")
    primes = []
    c = 2
    while len(primes) < n:
        if all(c % p for p in primes if p * p <= c):
            primes.append(c)
        c += 1
    return primes


def _cycle(length, finals):
    T = [(i, "a", (i + 1) % length) for i in range(length)]
    return Nfa.build("a", length, T, finals)


def modulus_nfa(p, residues, tail=False):
    """Accepts ``a^t`` iff ``t mod p`` is in ``residues``; a ``p``-cycle.

    With ``tail`` the start is a separate state without incoming edges, one
    step before the cycle (``p + 1`` states).
    """
    residues = set(residues)
    if p < 1 or any(not 0 <= r < p for r in residues):
        raise DomainError(f"residues must lie in 0..{p - 1}")
    if not tail:
        return _cycle(p, residues)
    T = [(i, "a", (i + 1) % p) for i in range(p)] + [(p, "a", 1 % p)]
    finals = set(residues) | ({p} if 0 in residues else set())
    return Nfa(p + 1, ("a",), p, frozenset(finals), frozenset(T))


def clause_nfa(clause, assignment, primes):
    """Accepts ``a^t`` iff ``t mod primes[j] == assignment[j]`` for each literal ``j``.

    ``assignment`` gives 0/1 values to the clause's three literals' variables
    and must falsify the clause; the automaton is one cycle whose length is
    the lcm of the primes involved.
    """
    lits = [_literal(l) for l in clause]
    if not len(lits) == len(assignment) == len(primes):
        raise DomainError("clause, assignment and primes must have the same length")
    seen = {}
    for (v, pol), value, p in zip(lits, assignment, primes):
        if value not in (0, 1):
            raise DomainError("assignment values must be 0 or 1")
        if bool(value) == pol:
            raise DomainError(f"assignment satisfies literal {'' if pol else '-'}x{v}")
        if seen.setdefault(v, (value, p)) != (value, p):
            raise DomainError(f"inconsistent value or prime for variable x{v}")
    length = lcm(*primes)
    finals = [t for t in range(length) if all(t % p == value for value, p in zip(assignment, primes))]
    return _cycle(length, finals)


def falsifying_assignments(clause):
    """All 0/1 assignments of the clause's distinct variables that falsify it, as per-literal triples."""
    lits = [_literal(l) for l in clause]
    variables = sorted({v for v, _ in lits})
    out = []
    for bits in product((0, 1), repeat=len(variables)):
        value = dict(zip(variables, bits))
        if all(bool(value[v]) != pol for v, pol in lits):
            out.append(tuple(value[v] for v, _ in lits))
    return out


def union_nfa(parts):
    """Disjoint union behind a fresh initial state 0 that copies every part's first steps."""
    T = set()
    finals = set()
    offset = 1
    for A in parts:
        if A.alphabet != ("a",):
            raise DomainError("union parts must be unary over 'a'")
        for s, a, t in A.transitions:
            T.add((offset + s, a, offset + t))
            if s == A.initial:
                T.add((0, a, offset + t))
        finals |= {offset + f for f in A.finals}
        if A.initial in A.finals:
            finals.add(0)
        offset += A.state_count
    return Nfa(offset, ("a",), 0, frozenset(finals), frozenset(T))


def reduction_nfa(F):
    """The union of the non-encoding automata ``B_i`` and one cycle per clause falsifier."""
    primes = first_primes(F.variable_count)
    parts = [modulus_nfa(p, set(range(2, p))) for p in primes]
    for clause in F.clauses:
        ps = [primes[v - 1] for v, _ in clause]
        parts.extend(clause_nfa(clause, a, ps) for a in falsifying_assignments(clause))
    return ReductionResult(union_nfa(parts), prod(primes), tuple(primes))


def expected_state_count(F):
    """State count of :func:`reduction_nfa`: ``1 + sum p_i`` plus one lcm-cycle per falsifier."""
    primes = first_primes(F.variable_count)
    total = 1 + sum(primes)
    for clause in F.clauses:
        ps = [primes[v - 1] for v, _ in clause]
        total += lcm(*ps) * len(falsifying_assignments(clause))
    return total


def covers_everything(result):
    """Whether the reduction automaton accepts every ``a^t`` with ``t <= ell``."""
    full = FiniteLanguage(("a" * t for t in range(result.ell + 1)), ell=result.ell, alphabet="a")
    return is_cover(result.automaton, full)


def small_formulas(variable_count, max_clauses):
    """All formulas over exactly ``variable_count`` variables with at most ``max_clauses`` clauses.

    Clauses and formulas are taken as multisets, so duplicates and order
    variants appear once.
    """
    lits = [(v, pol) for v in range(1, variable_count + 1) for pol in (True, False)]
    clauses = list(combinations_with_replacement(lits, 3))
    for m in range(max_clauses + 1):
        for combo in combinations_with_replacement(clauses, m):
            yield CnfFormula(variable_count, combo)


def random_formulas(variable_count, count, seed=0, max_clauses=24):
    rng = random.Random(seed)
    lits = [(v, pol) for v in range(1, variable_count + 1) for pol in (True, False)]
    for _ in range(count):
        m = rng.randint(1, max_clauses)
        yield CnfFormula(variable_count, [tuple(rng.choice(lits) for _ in range(3)) for _ in range(m)])
