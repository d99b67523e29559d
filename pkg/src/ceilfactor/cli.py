"""Command line entry point: ``ceilfactor {factor,yield,dbgen,bench}``.

Exit status is 0 on success, 1 on a usage or parse error, and 2 when
``factor`` runs through its database without finding a factor.
"""

import argparse
import sys
from fractions import Fraction

from .core import parse_natural
from .databases import build, parse_recipe
from .harness import compare_strategies, factor_with_db, generate_semiprimes, summarize, write_csv
from .yields import format_fractions, fractions_of, union_of_fractions

EXIT_OK, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _natural(text):
    try:
        return parse_natural(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _ratio(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    return value


def _natural_list(text):
    return [_natural(part) for part in text.split(",")]


def build_parser():
    parser = _Parser(prog="ceilfactor", description="Factor semiprimes with the ceiling-square multiplier test.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    out = _Parser(add_help=False)
    out.add_argument("-o", "--output", default="-", help="output file (default: standard output)")

    p = sub.add_parser("factor", parents=[out], help="factor N by scanning a multiplier database")
    p.add_argument("--n", required=True, type=_natural, dest="n")
    p.add_argument("--db", required=True, help="database recipe, e.g. consecutive:200")
    p.add_argument("--max-scan", type=_natural, default=None)

    p = sub.add_parser("yield", parents=[out], help="yield of one multiplier or of a set")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--d", type=_natural)
    group.add_argument("--set", type=_natural_list, dest="values", metavar="d1,d2,...")

    p = sub.add_parser("dbgen", parents=[out], help="print a database, one value per line")
    p.add_argument("--db", required=True)

    p = sub.add_parser("bench", parents=[out], help="benchmark recipes on seeded semiprimes (CSV)")
    p.add_argument("--bits", required=True, type=_natural, help="bit size of each prime factor")
    p.add_argument("--count", required=True, type=_natural)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--db", required=True, help="comma separated recipes")
    p.add_argument("--max-scan", type=_natural, default=None)
    p.add_argument("--r-max", type=_ratio, default=None, help="reject pairs with q/p above this")
    p.add_argument("--workers", type=_natural, default=1)
    p.add_argument("--no-timing", action="store_true", help="leave elapsed_ms blank")
    p.add_argument("--figure", default=None, help="also save a cost/success figure here (PNG, PDF, SVG)")
    return parser


def _cmd_factor(args, out, err):
    recipe = parse_recipe(args.db)
    if recipe.is_auto:
        raise UsageError("consecutive:auto needs the factor ratio; give an explicit m")
    if args.n < 4:
        raise UsageError("--n must be at least 4")
    rec = factor_with_db(args.n, build(recipe), args.max_scan)
    if not rec.success:
        out.write(f"no factor found (scanned {rec.cost})\n")
        return EXIT_EXHAUSTED
    a, b = rec.factors
    out.write(f"{args.n} = {a} * {b} (d={rec.winning_d}, t={rec.t}, cost={rec.cost})\n")
    return EXIT_OK


def _cmd_yield(args, out, err):
    if args.d is not None:
        if args.d < 1:
            raise UsageError("--d must be at least 1")
        fracs = fractions_of(args.d)
        out.write(f"Y({args.d}) = {len(fracs)}\n")
    else:
        if any(v < 1 for v in args.values):
            raise UsageError("set elements must be at least 1")
        fracs = union_of_fractions(args.values)
        out.write(f"Y(S) = {len(fracs)}\n")
    out.write(format_fractions(fracs) + "\n")
    return EXIT_OK


def _cmd_dbgen(args, out, err):
    recipe = parse_recipe(args.db)
    if recipe.is_auto:
        raise UsageError("consecutive:auto depends on N and cannot be listed")
    for d in build(recipe):
        out.write(f"{d}\n")
    return EXIT_OK


def _cmd_bench(args, out, err):
    recipes = [parse_recipe(r) for r in args.db.split(",")]
    specs = generate_semiprimes(args.bits, args.count, args.seed, args.r_max)
    records = compare_strategies(specs, recipes, args.max_scan, workers=args.workers)
    meta = {"seed": args.seed, "bits": args.bits, "count": args.count,
            "r_max": args.r_max if args.r_max is not None else "none",
            "max_scan": args.max_scan if args.max_scan is not None else "none"}
    write_csv(records, out, meta, timing=not args.no_timing)
    err.write("# summary (cost = multipliers tested; failures count their full scan)\n")
    for s in summarize(records):
        err.write(s.line() + "\n")
    if args.figure:
        from .plots import plot_costs

        plot_costs(records, args.figure, title=f"{args.count} semiprimes, {args.bits}-bit factors, seed {args.seed}")
        err.write(f"# figure written to {args.figure}\n")
    return EXIT_OK


_COMMANDS = {"factor": _cmd_factor, "yield": _cmd_yield, "dbgen": _cmd_dbgen, "bench": _cmd_bench}


def run(args, stdout=None, stderr=None) -> int:
    """Execute parsed arguments; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if args.output != "-":
        with open(args.output, "w", newline="") as fh:
            return _COMMANDS[args.command](args, fh, stderr)
    return _COMMANDS[args.command](args, stdout, stderr)


def main(argv=None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return run(args, stdout, stderr)
    except (UsageError, ValueError) as exc:
        stderr.write(f"ceilfactor: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
