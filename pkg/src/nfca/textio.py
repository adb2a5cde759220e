"""Text formats: automata, languages, fooling pairs, DIMACS CNF, DOT and JSON.

Automaton files look like::

    alphabet: ab
    states: 3
    initial: 0
    final: 2
    transitions:
    0 a 1
    1 b 2

``#`` starts a comment and blank lines are ignored everywhere.  ``_`` stands
for the empty word.
"""

import json

from .automata import Nfa, as_nfa
from .errors import DomainError, ParseError
from .hardness import CnfFormula
from .words import EPSILON_TOKEN, FiniteLanguage, format_word, normalize_alphabet, parse_word

HEADER_KEYS = ("alphabet", "states", "initial", "final")


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(token, lineno, what):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"{what} must be non-negative, got {value}", lineno)
    return value


def parse_automaton(text):
    """Parse the automaton text format into an :class:`Nfa`."""
    header = {}
    lines = _lines(text)
    last = 0
    for lineno, line in lines:
        last = lineno
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise ParseError(f"expected 'key: value' header, got {line!r}", lineno)
        if key == "transitions":
            if value.strip():
                raise ParseError("'transitions:' must stand alone on its line", lineno)
            break
        if key not in HEADER_KEYS:
            raise ParseError(f"unknown header {key!r}", lineno)
        if key in header:
            raise ParseError(f"duplicate header {key!r}", lineno)
        header[key] = (value.strip(), lineno)
    else:
        raise ParseError("missing 'transitions:' line", last or None)
    for key in HEADER_KEYS:
        if key not in header:
            raise ParseError(f"missing header {key!r}", last or None)

    value, lineno = header["alphabet"]
    try:
        alphabet = normalize_alphabet(value.replace(" ", ""))
    except DomainError as exc:
        raise ParseError(str(exc), lineno) from None
    value, lineno = header["states"]
    n = _int(value, lineno, "state count")
    if n < 1:
        raise ParseError("state count must be positive", lineno)

    def state(token, lineno):
        s = _int(token, lineno, "state")
        if s >= n:
            raise ParseError(f"state {s} out of range 0..{n - 1}", lineno)
        return s

    value, lineno = header["initial"]
    initial = state(value, lineno)
    value, lineno = header["final"]
    finals = {state(tok, lineno) for tok in value.split()}

    transitions = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected '<src> <symbol> <dst>', got {line!r}", lineno)
        s, a, t = parts
        if a not in alphabet:
            raise ParseError(f"unknown symbol {a!r}", lineno)
        triple = (state(s, lineno), a, state(t, lineno))
        if triple in transitions:
            raise ParseError(f"duplicate transition {line!r}", lineno)
        transitions.add(triple)
    return Nfa(n, alphabet, initial, frozenset(finals), frozenset(transitions))


def format_automaton(automaton):
    """Canonical text form: transitions sorted by source, symbol order, target."""
    A = as_nfa(automaton)
    out = [
        f"alphabet: {''.join(A.alphabet)}",
        f"states: {A.state_count}",
        f"initial: {A.initial}",
        "final: " + " ".join(str(f) for f in sorted(A.finals)),
        "transitions:",
    ]
    out += [f"{s} {a} {t}" for s, a, t in A.sorted_transitions()]
    return "\n".join(line.rstrip() for line in out) + "\n"


def parse_language(text):
    """One word per line; optional ``ell:`` and ``alphabet:`` headers before the first word."""
    ell = alphabet = None
    words = []
    for lineno, line in _lines(text):
        key, sep, value = line.partition(":")
        if sep and not words and key.strip().lower() in ("ell", "alphabet"):
            key = key.strip().lower()
            if key == "ell":
                if ell is not None:
                    raise ParseError("duplicate 'ell:' header", lineno)
                ell = _int(value.strip(), lineno, "ell")
            else:
                if alphabet is not None:
                    raise ParseError("duplicate 'alphabet:' header", lineno)
                alphabet = value.replace(" ", "")
            continue
        if len(line.split()) != 1:
            raise ParseError(f"expected one word per line, got {line!r}", lineno)
        words.append((parse_word(line), lineno))
    try:
        return FiniteLanguage([w for w, _ in words], ell=ell, alphabet=alphabet)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_language(L):
    out = [f"alphabet: {''.join(L.alphabet)}", f"ell: {L.ell}"]
    out += [format_word(w) for w in L.words]
    return "\n".join(out) + "\n"


def parse_pairs(text):
    """Fooling pairs, ``x , y`` per line."""
    pairs = []
    for lineno, line in _lines(text):
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != 2 or not all(parts) or any(len(p.split()) != 1 for p in parts):
            raise ParseError(f"expected 'x , y', got {line!r}", lineno)
        pairs.append((parse_word(parts[0]), parse_word(parts[1])))
    return pairs


def format_pairs(pairs):
    return "".join(f"{format_word(x)} , {format_word(y)}\n" for x, y in pairs)


def parse_dimacs(text):
    """A DIMACS CNF file as a :class:`CnfFormula`.

    Clauses with fewer than three literals are padded by repeating their last
    literal; clauses with more than three distinct literals are rejected,
    while surplus duplicates are dropped.
    """
    header = None
    clauses = []
    current = []
    last = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        last = lineno
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected a single 'p cnf <vars> <clauses>' header", lineno)
            header = (_int(parts[2], lineno, "variable count"), _int(parts[3], lineno, "clause count"))
            continue
        if header is None:
            raise ParseError("clause before the 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds the declared {header[0]} variables", lineno)
            if lit:
                current.append(lit)
                continue
            clauses.append(_three(current, lineno))
            current = []
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        clauses.append(_three(current, last))
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    try:
        return CnfFormula(max(header[0], 1), clauses)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def _three(lits, lineno):
    if not lits:
        raise ParseError("empty clause", lineno)
    distinct = list(dict.fromkeys(lits))
    if len(distinct) > 3:
        raise ParseError(f"clause has {len(distinct)} distinct literals, at most 3 allowed", lineno)
    if len(lits) > 3:
        lits = distinct
    return tuple(lits + [lits[-1]] * (3 - len(lits)))


def to_dot(automaton, name="A"):
    """GraphViz digraph; finals double-circled, the initial state marked by an entry arrow."""
    A = as_nfa(automaton)
    out = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for s in range(A.state_count):
        shape = "doublecircle" if s in A.finals else "circle"
        out.append(f'  {s} [shape={shape}, label="{s}"];')
    out.append(f"  __start -> {A.initial};")
    for s, a, t in A.sorted_transitions():
        out.append(f'  {s} -> {t} [label="{a}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def report_json(report):
    return json.dumps(report.to_dict(), indent=2) + "\n"


__all__ = [
    "EPSILON_TOKEN", "parse_automaton", "format_automaton", "parse_language", "format_language",
    "parse_pairs", "format_pairs", "parse_dimacs", "to_dot", "report_json",
]
