"""Command-line interface.

Exit status: 0 on success, 1 for a negative verdict (word rejected, not a
cover, invalid fooling set, unfinished search), 2 for usage or input errors.
"""

import argparse
import sys

from . import textio
from .automata import accepts, enumerate_accepted, levels
from .bounds import FoolingMode, FoolingSet, max_fooling_set, verify_fooling_set
from .cover import is_cover, similarity_pairs, state_similar
from .errors import AutomatonError
from .exact import SearchBudget, SearchMode, complexity_report, minimal_nfa_exact, minimize_dfca
from .families import ak_automaton, fixture_fig6, fixture_fig7, gen_lf, gen_llk
from .hardness import covers_everything, reduction_nfa
from .reduce import reduce_nfca
from .words import format_word, parse_word


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _aut(path):
    return textio.parse_automaton(_read(path))


def _lang(path):
    return textio.parse_language(_read(path))


def _budget(args, mode):
    return SearchBudget(args.max_n, args.deadline, mode)


def cmd_accept(args, out):
    ok = accepts(_aut(args.automaton), parse_word(args.word))
    print("ACCEPT" if ok else "REJECT", file=out)
    return 0 if ok else 1


def cmd_language(args, out):
    out.write(textio.format_language(enumerate_accepted(_aut(args.automaton), args.ell)))
    return 0


def cmd_cover_check(args, out):
    verdict = is_cover(_aut(args.automaton), _lang(args.language))
    if verdict.equal:
        print("COVER OK", file=out)
        return 0
    print(f"NOT A COVER: witness {format_word(verdict.witness)}", file=out)
    return 1


def cmd_levels(args, out):
    for s, lv in sorted(levels(_aut(args.automaton)).items()):
        print(s, "-" if lv is None else lv, file=out)
    return 0


def cmd_similar(args, out):
    A = _aut(args.automaton)
    if args.states:
        if len(args.states) != 2:
            raise _UsageError("similar: give either no states or exactly two")
        p, q = args.states
        ok = state_similar(A, args.ell, p, q)
        print("SIMILAR" if ok else "NOT SIMILAR", file=out)
        return 0 if ok else 1
    for p, q in similarity_pairs(A, args.ell):
        print(p, q, file=out)
    return 0


def cmd_reduce(args, out):
    R, reports = reduce_nfca(_aut(args.automaton), _lang(args.language))
    for r in reports:
        print(f"# merged {r.removed} into {r.merged_into}", file=out)
    out.write(textio.format_automaton(R))
    return 0


def cmd_dfca_min(args, out):
    out.write(textio.format_automaton(minimize_dfca(_lang(args.language))))
    return 0


def cmd_exact_min(args, out):
    mode = SearchMode.EQUAL if args.mode == "nfa" else SearchMode.COVER
    res = minimal_nfa_exact(_lang(args.language), _budget(args, mode))
    if res.size is None:
        why = "deadline reached" if res.timed_out else f"no automaton with at most {args.max_n} states"
        print(f"UNKNOWN: {why}; minimum is at least {res.lower}", file=out)
        return 1
    print(f"# minimal size: {res.size}", file=out)
    out.write(textio.format_automaton(res.automaton))
    return 0


def cmd_fooling(args, out):
    L = _lang(args.language)
    mode = FoolingMode(args.mode.upper())
    if args.action == "verify":
        if args.pairs is None:
            raise _UsageError("fooling verify: a pairs file is required")
        verdict = verify_fooling_set(L, FoolingSet(textio.parse_pairs(_read(args.pairs)), mode))
        if verdict.valid:
            print(f"VALID: bound {verdict.bound}", file=out)
            return 0
        i, j, clause = verdict.violation
        print(f"INVALID: pairs {i} and {j}: {clause}", file=out)
        return 1
    S = max_fooling_set(L, mode)
    pairs = [] if S is None else S.pairs
    print(f"# size: {len(pairs)}", file=out)
    out.write(textio.format_pairs(pairs))
    return 0


def cmd_report(args, out):
    out.write(textio.report_json(complexity_report(_lang(args.language), _budget(args, SearchMode.COVER))))
    return 0


def cmd_gen(args, out):
    p = args.params
    if args.family == "ak":
        if len(p) != 1:
            raise _UsageError("gen ak: expects <k>")
        out.write(textio.format_automaton(ak_automaton(p[0])))
        return 0
    if len(p) != 2:
        raise _UsageError(f"gen {args.family}: expects two parameters")
    L = gen_lf(*p) if args.family == "lf" else gen_llk(*p, ell=args.ell)
    out.write(textio.format_language(L))
    return 0


def cmd_fixture(args, out):
    A, ell = (fixture_fig6 if args.name == "fig6" else fixture_fig7)()
    print(f"# ell: {ell}", file=out)
    out.write(textio.format_automaton(A))
    return 0


def cmd_sat_reduce(args, out):
    R = reduction_nfa(textio.parse_dimacs(_read(args.cnf)))
    print(f"# ell: {R.ell}", file=out)
    print("# primes: " + " ".join(map(str, R.primes)), file=out)
    out.write(textio.format_automaton(R.automaton))
    if args.check:
        full = covers_everything(R).equal
        print(f"# covers a* up to ell: {'yes (unsatisfiable)' if full else 'no (satisfiable)'}", file=out)
    return 0


def cmd_dot(args, out):
    out.write(textio.to_dot(_aut(args.automaton)))
    return 0


def build_parser():
    parser = _Parser(prog="nfca", description="Cover automata for finite languages.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    def search_opts(p):
        p.add_argument("--max-n", type=int, default=8, help="largest size searched (default 8)")
        p.add_argument("--deadline", type=float, default=None, help="wall-clock limit in seconds")

    p = add("accept", cmd_accept, "test membership of a word (_ for the empty word)")
    p.add_argument("automaton")
    p.add_argument("word")
    p = add("language", cmd_language, "list accepted words up to a length")
    p.add_argument("automaton")
    p.add_argument("--ell", type=int, required=True)
    p = add("cover-check", cmd_cover_check, "check that an automaton covers a language")
    p.add_argument("automaton")
    p.add_argument("language")
    p = add("levels", cmd_levels, "print the level of every state")
    p.add_argument("automaton")
    p = add("similar", cmd_similar, "list similar state pairs, or test one pair")
    p.add_argument("automaton")
    p.add_argument("states", nargs="*", type=int)
    p.add_argument("--ell", type=int, required=True)
    p = add("reduce", cmd_reduce, "merge similar states while preserving the cover")
    p.add_argument("automaton")
    p.add_argument("language")
    p = add("dfca-min", cmd_dfca_min, "minimal deterministic cover automaton")
    p.add_argument("language")
    p = add("exact-min", cmd_exact_min, "exhaustive minimal NFA or cover NFA")
    p.add_argument("language")
    p.add_argument("--mode", choices=("nfa", "nfca"), required=True)
    search_opts(p)
    p = add("fooling", cmd_fooling, "verify or search fooling sets")
    p.add_argument("action", choices=("verify", "search"))
    p.add_argument("language")
    p.add_argument("pairs", nargs="?")
    p.add_argument("--mode", required=True, type=str.upper, choices=[m.value for m in FoolingMode])
    p = add("report", cmd_report, "sc, csc, nsc and ncsc as JSON")
    p.add_argument("language")
    search_opts(p)
    p = add("gen", cmd_gen, "generate a family language (lf, llk) or automaton (ak)")
    p.add_argument("family", choices=("lf", "llk", "ak"))
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--ell", type=int, default=None, help="cover length for llk (default l+1)")
    p = add("fixture", cmd_fixture, "print a fixed example automaton")
    p.add_argument("name", choices=("fig6", "fig7"))
    p = add("sat-reduce", cmd_sat_reduce, "unary automaton for a DIMACS 3-CNF formula")
    p.add_argument("cnf")
    p.add_argument("--check", action="store_true", help="also report whether it covers a*")
    p = add("dot", cmd_dot, "GraphViz rendering of an automaton")
    p.add_argument("automaton")
    return parser


def run_command(argv, out=None, err=None):
    """Run one command; returns the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _UsageError as exc:
        print(exc, file=err)
        return 2
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 2
    except (AutomatonError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def main(argv=None):
    return run_command(sys.argv[1:] if argv is None else argv)
