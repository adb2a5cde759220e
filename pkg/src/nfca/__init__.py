"""Nondeterministic finite cover automata for finite languages."""

from .automata import (
    UNREACHABLE, Dfa, Nfa, accepts, determinize, enumerate_accepted, levels, minimize_dfa,
    shortest_witness, trim,
)
from .bounds import BoundVerdict, FoolingMode, FoolingSet, max_fooling_set, verify_fooling_set
from .cover import CoverVerdict, is_cover, similarity_pairs, state_similar
from .errors import (
    AutomatonError, DomainError, FixtureIntegrityError, NoWitnessError, ParseError,
    PreconditionError, RejectedInputError,
)
from .exact import (
    ComplexityReport, SearchBudget, SearchMode, SearchResult, complexity_report,
    minimal_nfa_exact, minimal_unary_nfa_for_lengthset, minimize_dfca,
)
from .families import (
    FamilyParams, ak_automaton, fixture_fig6, fixture_fig7, gen_lf, gen_llk, nfa_fig1, nfca_fig2,
)
from .hardness import (
    CnfFormula, ReductionResult, clause_nfa, first_primes, modulus_nfa, reduction_nfa,
)
from .language import dfa_of, max_dissimilar_sequence, word_similar
from .reduce import (
    MergeKind, MergeReport, merge_and_check, reduce_nfca, replace_subautomaton, strong_merge,
    weak_merge,
)
from .textio import format_automaton, parse_automaton, to_dot
from .words import FiniteLanguage

__version__ = "0.1.0"
