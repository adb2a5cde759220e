"""Automaton representations and the classical algorithms on them.

States are dense integers ``0..state_count-1``.  Internally, sets of states
are Python ints used as bitmasks, which keeps subset simulation cheap.
"""

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DomainError, NoWitnessError, RejectedInputError
from .words import FiniteLanguage, normalize_alphabet, shortlex_key

UNREACHABLE = None


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(states):
    m = 0
    for s in states:
        m |= 1 << s
    return m


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton without empty-word transitions.

    ``transitions`` is a set of ``(source, symbol, target)`` triples.
    """

    state_count: int
    alphabet: tuple
    initial: int
    finals: frozenset
    transitions: frozenset

    def __post_init__(self):
        alphabet = normalize_alphabet(self.alphabet)
        finals = frozenset(self.finals)
        transitions = frozenset(tuple(t) for t in self.transitions)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "finals", finals)
        object.__setattr__(self, "transitions", transitions)
        n = self.state_count
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"state_count must be a positive integer, got {n!r}")
        if not 0 <= self.initial < n:
            raise DomainError(f"initial state {self.initial} out of range")
        for f in finals:
            if not 0 <= f < n:
                raise DomainError(f"final state {f} out of range")
        symbols = set(alphabet)
        for s, a, t in transitions:
            if not (0 <= s < n and 0 <= t < n):
                raise DomainError(f"transition {(s, a, t)} references a state out of range")
            if a not in symbols:
                raise DomainError(f"transition {(s, a, t)} uses symbol outside the alphabet")

    @classmethod
    def build(cls, alphabet, state_count, transitions, finals, initial=0):
        return cls(state_count, tuple(alphabet), initial, frozenset(finals), frozenset(transitions))

    @cached_property
    def symbol_index(self):
        return {a: i for i, a in enumerate(self.alphabet)}

    @cached_property
    def succ_masks(self):
        """``succ_masks[i][s]`` is the bitmask of ``delta(s, alphabet[i])``."""
        table = [[0] * self.state_count for _ in self.alphabet]
        idx = self.symbol_index
        for s, a, t in self.transitions:
            table[idx[a]][s] |= 1 << t
        return tuple(tuple(row) for row in table)

    @cached_property
    def final_mask(self):
        return mask_of(self.finals)

    def step(self, mask, i):
        row = self.succ_masks[i]
        out = 0
        for s in iter_bits(mask):
            out |= row[s]
        return out

    def successors(self, state, symbol):
        return frozenset(iter_bits(self.succ_masks[self.symbol_index[symbol]][state]))

    def run(self, word, start=None):
        """Bitmask of states reached from ``start`` (default: initial) on ``word``."""
        mask = (1 << self.initial) if start is None else start
        idx = self.symbol_index
        for c in word:
            if c not in idx:
                raise RejectedInputError(f"symbol {c!r} is not in the alphabet {''.join(self.alphabet)!r}")
            mask = self.step(mask, idx[c])
        return mask

    def reached(self, word):
        """The set of states reached from the initial state on ``word``."""
        return frozenset(iter_bits(self.run(word)))

    def sorted_transitions(self):
        idx = self.symbol_index
        return sorted(self.transitions, key=lambda t: (t[0], idx[t[1]], t[2]))

    def to_nfa(self):
        return self


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton; ``table[s][i]`` is the target of ``s`` on ``alphabet[i]``.

    ``labels`` optionally records, per state, the NFA subset it stands for.
    """

    state_count: int
    alphabet: tuple
    initial: int
    finals: frozenset
    table: tuple
    labels: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        alphabet = normalize_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        n = self.state_count
        if n < 1 or not 0 <= self.initial < n:
            raise DomainError("invalid DFA state count or initial state")
        if len(self.table) != n:
            raise DomainError("DFA table must have one row per state")
        for row in self.table:
            if len(row) != len(alphabet) or not all(0 <= t < n for t in row):
                raise DomainError("DFA must have exactly one in-range target per (state, symbol)")
        if not all(0 <= f < n for f in self.finals):
            raise DomainError("final state out of range")

    @property
    def transitions(self):
        return {(s, a): self.table[s][i] for s in range(self.state_count) for i, a in enumerate(self.alphabet)}

    @cached_property
    def symbol_index(self):
        return {a: i for i, a in enumerate(self.alphabet)}

    def delta(self, state, symbol):
        return self.table[state][self.symbol_index[symbol]]

    def run(self, word):
        s = self.initial
        idx = self.symbol_index
        for c in word:
            if c not in idx:
                raise RejectedInputError(f"symbol {c!r} is not in the alphabet {''.join(self.alphabet)!r}")
            s = self.table[s][idx[c]]
        return s

    @cached_property
    def nfa(self):
        triples = {(s, a, self.table[s][i]) for s in range(self.state_count) for i, a in enumerate(self.alphabet)}
        return Nfa(self.state_count, self.alphabet, self.initial, self.finals, frozenset(triples))

    def to_nfa(self):
        return self.nfa


def as_nfa(automaton):
    return automaton.to_nfa()


def accepts(automaton, word):
    """Whether ``automaton`` accepts ``word``."""
    if isinstance(automaton, Dfa):
        return automaton.run(word) in automaton.finals
    return bool(automaton.run(word) & automaton.final_mask)


def codistances(automaton):
    """Length of the shortest path from each state to a final state (None if none)."""
    A = as_nfa(automaton)
    preds = defaultdict(set)
    for s, _, t in A.transitions:
        preds[t].add(s)
    dist = {f: 0 for f in A.finals}
    queue = deque(sorted(A.finals))
    while queue:
        t = queue.popleft()
        for s in preds[t]:
            if s not in dist:
                dist[s] = dist[t] + 1
                queue.append(s)
    return [dist.get(s) for s in range(A.state_count)]


def enumerate_accepted(automaton, ell):
    """``L(A)`` intersected with words of length at most ``ell``, as a FiniteLanguage.

    Words sharing a reached subset are advanced together; subsets from which
    no final state is reachable within the remaining length are dropped.
    """
    if ell < 0:
        raise DomainError("ell must be non-negative")
    A = as_nfa(automaton)
    codist = codistances(A)
    fin = A.final_mask
    layer = {1 << A.initial: [""]}
    accepted = []
    for t in range(ell + 1):
        remaining = ell - t
        nxt = defaultdict(list)
        for mask, words in layer.items():
            if mask & fin:
                accepted.extend(words)
            if remaining == 0:
                continue
            for i, a in enumerate(A.alphabet):
                m2 = A.step(mask, i)
                if m2 and _can_accept_within(m2, codist, remaining - 1):
                    nxt[m2].extend(w + a for w in words)
        layer = nxt
    return FiniteLanguage(accepted, ell=ell, alphabet=A.alphabet)


def _can_accept_within(mask, codist, budget):
    for s in iter_bits(mask):
        d = codist[s]
        if d is not None and d <= budget:
            return True
    return False


def determinize(automaton):
    """Subset construction; the empty subset is always present as a sink."""
    A = as_nfa(automaton)
    start = 1 << A.initial
    index = {start: 0}
    order = [start]
    rows = []
    k = 0
    while k < len(order):
        mask = order[k]
        row = []
        for i in range(len(A.alphabet)):
            m2 = A.step(mask, i)
            if m2 not in index:
                index[m2] = len(order)
                order.append(m2)
            row.append(index[m2])
        rows.append(row)
        k += 1
    if 0 not in index:
        index[0] = len(order)
        order.append(0)
        rows.append([index[0]] * len(A.alphabet))
    finals = {index[m] for m in order if m & A.final_mask}
    labels = tuple(frozenset(iter_bits(m)) for m in order)
    return Dfa(len(order), A.alphabet, 0, finals, rows, labels=labels)


def _canonical(state_count, alphabet, initial, finals, table):
    """Renumber reachable states by breadth-first discovery, symbols in alphabet order."""
    index = {initial: 0}
    order = [initial]
    k = 0
    while k < len(order):
        for t in table[order[k]]:
            if t not in index:
                index[t] = len(order)
                order.append(t)
        k += 1
    new_table = [[index[t] for t in table[s]] for s in order]
    new_finals = {index[s] for s in order if s in finals}
    return Dfa(len(order), alphabet, 0, new_finals, new_table)


def minimize_dfa(dfa):
    """Minimal complete DFA in canonical breadth-first numbering (Moore refinement)."""
    D = _canonical(dfa.state_count, dfa.alphabet, dfa.initial, dfa.finals, dfa.table)
    n = D.state_count
    block = [1 if s in D.finals else 0 for s in range(n)]
    count = len(set(block))
    while True:
        signatures = {}
        new_block = []
        for s in range(n):
            sig = (block[s],) + tuple(block[t] for t in D.table[s])
            new_block.append(signatures.setdefault(sig, len(signatures)))
        if len(signatures) == count:
            break
        block, count = new_block, len(signatures)
    reps = {}
    for s in range(n):
        reps.setdefault(block[s], s)
    table = {b: [block[t] for t in D.table[s]] for b, s in reps.items()}
    finals = {block[s] for s in D.finals}
    return _canonical(len(reps), D.alphabet, block[D.initial], finals, table)


def levels(automaton):
    """Breadth-first distance from the initial state; ``UNREACHABLE`` (None) if no path."""
    A = as_nfa(automaton)
    adj = defaultdict(set)
    for s, _, t in A.transitions:
        adj[s].add(t)
    level = {A.initial: 0}
    queue = deque([A.initial])
    while queue:
        s = queue.popleft()
        for t in sorted(adj[s]):
            if t not in level:
                level[t] = level[s] + 1
                queue.append(t)
    return {s: level.get(s, UNREACHABLE) for s in range(A.state_count)}


def shortest_witness(automaton, state):
    """The shortlex-least word reaching ``state`` from the initial state."""
    A = as_nfa(automaton)
    if not 0 <= state < A.state_count:
        raise DomainError(f"state {state} out of range")
    witness = {A.initial: ""}
    queue = deque([A.initial])
    while queue:
        s = queue.popleft()
        if s == state:
            return witness[s]
        for i, a in enumerate(A.alphabet):
            for t in iter_bits(A.succ_masks[i][s]):
                if t not in witness:
                    witness[t] = witness[s] + a
                    queue.append(t)
    raise NoWitnessError(f"state {state} is unreachable")


def restrict(automaton, keep):
    """Sub-automaton on the states in ``keep`` (must contain the initial), renumbered in order."""
    A = as_nfa(automaton)
    keep = sorted(set(keep))
    if A.initial not in keep:
        raise DomainError("the initial state must be kept")
    new = {s: i for i, s in enumerate(keep)}
    transitions = {(new[s], a, new[t]) for s, a, t in A.transitions if s in new and t in new}
    finals = {new[f] for f in A.finals if f in new}
    return Nfa(len(keep), A.alphabet, new[A.initial], frozenset(finals), frozenset(transitions))


def trim(automaton, ell):
    """Drop states that lie on no accepted path of length at most ``ell``.

    The initial state is always kept, so the empty language trims to a single
    non-final state.
    """
    A = as_nfa(automaton)
    lv = levels(A)
    codist = codistances(A)
    keep = [
        s for s in range(A.state_count)
        if s == A.initial or (lv[s] is not None and codist[s] is not None and lv[s] + codist[s] <= ell)
    ]
    return restrict(A, keep)


def words_sorted(words, alphabet):
    return sorted(words, key=shortlex_key(alphabet))
