"""Command line entry point: ``bracketstraight <command> ...``."""

import argparse
import csv
import sys

from .cases import build_turnbull_young, builtin_cases
from .core import BracketPolynomial
from .errors import CapacityError, DisagreementError, ParseError, SymbolRangeError
from .harness import ALGORITHMS, generate_corpus, instrumented_straighten, run_benchmark_suite
from .stats import RotaCost, StepStats
from .textio import parse_cases_file, parse_tableau_file, serialize_cases, serialize_polynomial

EXIT_PARSE, EXIT_CAPACITY, EXIT_DISAGREE = 2, 3, 4


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_stats(path, stats):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if isinstance(stats, StepStats):
            w.writerow(["step", "terms"])
            w.writerows(enumerate(stats.per_step_terms, start=1))
        elif isinstance(stats, RotaCost):
            w.writerow(["nonzero_matrix_entries", "tableau_enumeration_cost", "total"])
            w.writerow([stats.nonzero_matrix_entries, stats.tableau_enumeration_cost, stats.total])
        else:
            w.writerow(["note"])
            w.writerow(["no step statistics for this algorithm"])


def cmd_straighten(args):
    f = parse_tableau_file(_read(args.infile))
    nf, stats = instrumented_straighten(f, args.alg, args.budget)
    sys.stdout.write(serialize_polynomial(nf, base=args.base))
    if args.stats:
        _write_stats(args.stats, stats)
    if stats is not None:
        print(f"# {args.alg}: {stats.summary()}", file=sys.stderr)
    return 0


def cmd_bench(args):
    cases = builtin_cases() if args.cases == "builtin" else parse_cases_file(_read(args.cases))
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    unknown = [a for a in algs if a not in ALGORITHMS]
    if unknown:
        raise SystemExit(f"unknown algorithms: {', '.join(unknown)}")
    report = run_benchmark_suite(cases, algs, args.budget, include_time=not args.no_time)
    text = report.to_csv()
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return 0


def cmd_corpus(args):
    try:
        d, n = (int(x) for x in args.shape.lower().split("x"))
    except ValueError:
        raise SystemExit(f"--shape must look like 3x3, got {args.shape!r}") from None
    tableaux = generate_corpus(d, n, args.symbols, not args.repeated, args.limit)
    cases = {f"{d}x{n}-{k}": BracketPolynomial({t: 1}) for k, t in enumerate(tableaux, start=1)}
    sys.stdout.write(serialize_cases(cases))
    return 0


def cmd_ty(args):
    k, _ = build_turnbull_young()
    if args.normal_form:
        k, stats = instrumented_straighten(k, "cb")
        print(f"# cb: {stats.steps} steps, {len(k)} terms", file=sys.stderr)
    sys.stdout.write(serialize_polynomial(k, base=0 if not args.one_based else 1))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="bracketstraight", description="Straightening of bracket polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("straighten", help="straighten a polynomial file")
    s.add_argument("--alg", choices=ALGORITHMS, default="cb")
    s.add_argument("--in", dest="infile", required=True, help="input file, '-' for stdin")
    s.add_argument("--stats", help="write per-step statistics to this CSV")
    s.add_argument("--budget", type=int, help="step, expansion or tableau budget")
    s.add_argument("--base", type=int, choices=(0, 1), default=1, help="label base for output")
    s.set_defaults(func=cmd_straighten)

    b = sub.add_parser("bench", help="run a benchmark suite and write CSV")
    b.add_argument("--cases", default="builtin", help="cases file, or 'builtin'")
    b.add_argument("--algs", default="cb,white2", help="comma separated algorithm list")
    b.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    b.add_argument("--budget", type=int)
    b.add_argument("--no-time", action="store_true", help="omit wall time for byte-stable output")
    b.set_defaults(func=cmd_bench)

    c = sub.add_parser("corpus", help="list non-straight tableaux as a cases file")
    c.add_argument("--shape", required=True, help="d x n, e.g. 3x3")
    c.add_argument("--symbols", type=int, required=True)
    c.add_argument("--limit", type=int)
    c.add_argument("--repeated", action="store_true", help="allow repeated symbols across rows")
    c.set_defaults(func=cmd_corpus)

    t = sub.add_parser("ty", help="print the Turnbull-Young polynomial K")
    t.add_argument("--normal-form", action="store_true", help="print its straightened form instead")
    t.add_argument("--one-based", action="store_true", help="labels 1..10 instead of 0..9")
    t.set_defaults(func=cmd_ty)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, SymbolRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except DisagreementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
