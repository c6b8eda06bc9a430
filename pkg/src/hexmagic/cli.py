"""Command-line interface: verify, gen, combine, search, mult, canon, render.

Exit codes are a stable scripting contract: 0 success (verified magic,
generation succeeded), 1 verified-not-magic, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import corpus
from .algebra import RecipeError, ZeroCellError, magic_product, run_recipe, to_multiplicative
from .grid import (
    Hexagon,
    HexFormatError,
    canonical_form,
    pretty,
    read_hexagon,
    render,
    write_hexagon,
)
from .search import InfeasibleSpecError, SearchSpec
from .search import enumerate as enumerate_search
from .templates import (
    MAGIC_SUM,
    UnsatisfiableConstraintsError,
    builtin_template,
    instantiate,
    solve_for_cells,
    synthesize_template,
)
from .verify import normal_magic_sum, verify

EXIT_OK = 0
EXIT_NOT_MAGIC = 1
EXIT_INPUT = 2


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _parse_assignments(pairs: list[str]) -> dict[str, Fraction]:
    out = {}
    for pair in pairs:
        name, _, value = pair.partition("=")
        if not name or not value:
            raise ValueError(f"expected name=value, got {pair!r}")
        out[name.strip()] = Fraction(value.strip())
    return out


def _emit(h: Hexagon, out: str | None) -> None:
    if out:
        write_hexagon(h, out)
    else:
        sys.stdout.write(render(h))


def cmd_verify(args) -> int:
    h = read_hexagon(args.path)
    report = verify(h)
    k = 2 * h.order - 1
    for name, chunk in (
        ("rows", report.line_sums[:k]),
        ("q-diagonals", report.line_sums[k : 2 * k]),
        ("s-diagonals", report.line_sums[2 * k :]),
    ):
        print(f"{name}: " + " ".join(str(s) for s in chunk))
    print(f"entries: {report.entry_min} .. {report.entry_max}"
          f" ({'distinct' if report.entries_distinct else 'with repeats'})")
    if report.is_magic:
        print(f"magic: M={report.magic_sum}" + (" (normal)" if report.is_normal else ""))
        return EXIT_OK
    distinct_sums = sorted(set(report.line_sums))
    print("not magic: line sums " + ", ".join(str(s) for s in distinct_sums))
    return EXIT_NOT_MAGIC


def cmd_gen(args) -> int:
    if args.synthesized:
        t = synthesize_template(args.order)
    else:
        t = builtin_template(args.order, args.variant)
    assignment = _parse_assignments(args.assignments)
    if args.constraint:
        constraints = []
        for spec in args.constraint:
            key, _, value = spec.partition("=")
            key = key.strip()
            if key == MAGIC_SUM:
                constraints.append((MAGIC_SUM, Fraction(value)))
            else:
                q, _, r = key.partition(",")
                constraints.append(((int(q), int(r)), Fraction(value)))
        solved = solve_for_cells(t, constraints)
        solved.update(assignment)
        assignment = solved
    else:
        for p in t.params:
            assignment.setdefault(p, Fraction(0))
    unknown = set(assignment) - set(t.params)
    if unknown:
        raise ValueError(f"unknown parameters {sorted(unknown)}; have {t.params}")
    h = instantiate(t, assignment)
    report = verify(h)
    print(f"M = {report.magic_sum}")
    _emit(h, args.out)
    return EXIT_OK


def cmd_combine(args) -> int:
    path = args.recipe
    if not Path(path).exists():
        path = corpus.recipe_path(path)
    h = run_recipe(path)
    report = verify(h)
    print(f"M = {report.magic_sum}")
    _emit(h, args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.normal:
        m = normal_magic_sum(args.order)
        if m is None:
            print(f"infeasible: no integral magic sum for a normal order-{args.order} "
                  "hexagon (row count does not divide the entry total)")
            return EXIT_INPUT
        spec = SearchSpec.normal(args.order, mode=args.mode)
    else:
        if args.entries is None or args.sum is None:
            print("need --entries LO..HI and --sum M (or --normal)")
            return EXIT_INPUT
        lo, _, hi = args.entries.partition("..")
        entries = [Fraction(v) for v in range(int(lo), int(hi) + 1)]
        spec = SearchSpec(args.order, tuple(entries), args.sum, mode=args.mode)
    result = enumerate_search(spec, workers=args.workers)
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    for i, h in enumerate(result.canonical):
        write_hexagon(h, outdir / f"solution-{i:04d}.hex")
    print(result.summary())
    return EXIT_OK


def cmd_mult(args) -> int:
    t = builtin_template(args.order, args.variant)
    assignment = _parse_assignments(args.assignments)
    h = to_multiplicative(t, assignment)
    p = magic_product(h)
    print(f"P = {p}")
    _emit(h, args.out)
    return EXIT_OK


def cmd_canon(args) -> int:
    h = read_hexagon(args.path)
    _emit(canonical_form(h), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    h = read_hexagon(args.path)
    print(pretty(h))
    report = verify(h)
    if report.is_magic:
        print(f"M = {report.magic_sum}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexmagic",
        description="Construct, verify, derive, and enumerate magic hexagons "
        "with exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a hexagon file; exit 0 iff magic")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="instantiate a template (built-in or synthesized)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--variant", default=None, help="built-in variant (order 7: diagonal|seven)")
    p.add_argument("--synthesized", action="store_true",
                   help="use the null-space template for this order")
    p.add_argument("--constraint", action="append", default=[],
                   metavar="Q,R=VALUE|M=VALUE",
                   help="solve for parameters meeting cell/magic-sum constraints")
    p.add_argument("assignments", nargs="*", metavar="name=value",
                   help="parameter values (unset parameters default to 0)")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("combine", help="run a recipe file (or bundled recipe id)")
    p.add_argument("recipe")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("search", help="exhaustively enumerate magic hexagons")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--normal", action="store_true",
                   help="entries 1..3n^2-3n+1 at the forced magic sum")
    p.add_argument("--entries", default=None, metavar="LO..HI",
                   help="consecutive integer entries")
    p.add_argument("--sum", type=_fraction, default=None, help="target magic sum")
    p.add_argument("--mode", default="all-solutions",
                   choices=("all-solutions", "first-solution", "count-canonical"))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out-dir", default="solutions")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("mult", help="multiplicative hexagon from a template")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--variant", default=None)
    p.add_argument("assignments", nargs="+", metavar="name=value")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("canon", help="canonical symmetry representative of a file")
    p.add_argument("path")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("render", help="pretty-print a hexagon file")
    p.add_argument("path")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HexFormatError, RecipeError, InfeasibleSpecError,
            UnsatisfiableConstraintsError, ZeroCellError, corpus.CorpusError,
            ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
