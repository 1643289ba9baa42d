"""Command-line front end.

Subcommands: gen (node tables), lebesgue (suprema vs bounds), verify (the
full check harness), plotdata (boundary profiles), greedy (greedy runs on a
circle grid), recursion (exact majorant/defect tables).  CSV output carries
a header row and 17 significant digits; JSON mirrors the same fields.  Exit
codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .core import binary_expand
from .disk import explicit_leja_point, explicit_section
from .extrema import (
    DEFAULT_GRID,
    DEFAULT_REFINE_TOL,
    lebesgue_constant,
    lebesgue_sharp_bound,
    quadratic_lebesgue_constant,
    quadratic_sharp_bound,
)
from .greedy import circle_grid, greedy_section, transfinite_diameter_diagnostic
from .interp import LagrangeBasis
from .recursion import defect_value, majorant_value
from .verify import SUITE_NAMES, run_suites

VERIFY_GRID_DEFAULT = 1 << 14


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _grid_size(text: str) -> int:
    value = int(text)
    if value < 16:
        raise argparse.ArgumentTypeError(f"grid must be at least 16, got {text}")
    return value


def _write_rows(header: List[str], rows: Iterable[Sequence], fmt: str, output: Optional[str]) -> None:
    rows = [list(r) for r in rows]
    if fmt == "json":
        text = json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    _emit(text, output)


def _emit(text: str, output: Optional[str]) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"cannot write {output}: {exc}", file=sys.stderr)
        raise SystemExit(1)


# ---------------------------------------------------------------------------
# subcommands


def _cmd_gen(args: argparse.Namespace) -> int:
    rows = []
    for i in range(args.k):
        angle = explicit_leja_point(i)
        point = angle.to_point()
        rows.append(
            [i, angle.numerator, angle.log_denominator, _fmt(point.real), _fmt(point.imag)]
        )
    _write_rows(
        ["index", "angle_numerator", "angle_log_denominator", "re", "im"],
        rows,
        args.format,
        args.output,
    )
    return 0


def _cmd_lebesgue(args: argparse.Namespace) -> int:
    exp = binary_expand(args.k)
    record: dict = {"k": args.k, "p0": exp.valuation, "s": exp.ones - 1}
    if args.which in ("lambda", "both"):
        rep = lebesgue_constant(args.k, args.grid, args.refine)
        bound = lebesgue_sharp_bound(args.k)
        record["lambda"] = rep.value
        record["lambda_bound"] = bound
        record["lambda_slack"] = bound - rep.value
    if args.which in ("lambda2", "both"):
        rep2 = quadratic_lebesgue_constant(args.k, args.grid, args.refine)
        bound2 = quadratic_sharp_bound(args.k)
        record["lambda2"] = rep2.value
        record["lambda2_bound"] = bound2
        record["lambda2_slack"] = bound2 - rep2.value
    record["grid"] = args.grid
    record["refine"] = args.refine
    if args.format == "json":
        _emit(json.dumps(record, indent=2) + "\n", args.output)
    else:
        header = list(record)
        row = [v if isinstance(v, int) else _fmt(v) for v in record.values()]
        _write_rows(header, [row], "csv", args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = [s.strip() for s in args.suites.split(",") if s.strip()]
    try:
        results = run_suites(
            names, max_k=args.max_k, grid_size=args.grid, refine_tolerance=args.refine
        )
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        payload = {
            "passed": not failed,
            "suites": [
                {
                    "name": r.name,
                    "checks": r.checks,
                    "failures": r.failures,
                    "worst_slack": r.worst_slack,
                    "first_failure": r.first_failure,
                    "seconds": round(r.seconds, 3),
                }
                for r in results
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [f"{'suite':<10} {'checks':>8} {'failed':>7} {'worst_slack':>13} {'seconds':>8}"]
        for r in results:
            slack = "-" if r.worst_slack is None else f"{r.worst_slack:.3e}"
            lines.append(
                f"{r.name:<10} {r.checks:>8} {r.failures:>7} {slack:>13} {r.seconds:>8.2f}"
            )
        for r in failed:
            lines.append(f"first failure in {r.name}: {r.first_failure}")
        total_checks = sum(r.checks for r in results)
        verdict = "PASS" if not failed else f"FAIL ({len(failed)} of {len(results)} suites)"
        lines.append(f"verify: {verdict} [{len(results)} suites, {total_checks} checks]")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if not failed else 1


def _cmd_plotdata(args: argparse.Namespace) -> int:
    basis = LagrangeBasis(explicit_section(args.k))
    theta = np.arange(args.grid) * (2.0 * np.pi / args.grid)
    if args.which == "lambda2":
        values = basis.quadratic_on_angles(theta)
    else:
        values = basis.lebesgue_on_angles(theta)
    rows = [[_fmt(t), _fmt(v)] for t, v in zip(theta, values)]
    _write_rows(["theta", "value"], rows, args.format, args.output)
    return 0


def _cmd_greedy(args: argparse.Namespace) -> int:
    candidates = circle_grid(args.grid)
    section = greedy_section(args.k, candidates, 1.0 + 0.0j)
    if args.diagnostic:
        rows = [[k, _fmt(v)] for k, v in transfinite_diameter_diagnostic(section)]
        _write_rows(["k", "value"], rows, args.format, args.output)
    else:
        rows = [[i, _fmt(p.real), _fmt(p.imag)] for i, p in enumerate(section.points)]
        _write_rows(["index", "re", "im"], rows, args.format, args.output)
    return 0


def _cmd_recursion(args: argparse.Namespace) -> int:
    rows = []
    for k in range(1, args.max_k + 1):
        u = majorant_value(k)
        d = defect_value(k)
        rows.append(
            [
                k,
                u.numerator,
                u.log_denominator,
                d.numerator,
                d.log_denominator,
                int(d.numerator == 0),
            ]
        )
    _write_rows(
        [
            "k",
            "majorant_numerator",
            "majorant_log_denominator",
            "defect_numerator",
            "defect_log_denominator",
            "defect_is_zero",
        ],
        rows,
        args.format,
        args.output,
    )
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lejadisk",
        description="Leja nodes on the unit disk: generation, Lebesgue suprema, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default=None, help="output path (default stdout)")

    p = sub.add_parser("gen", help="emit the first k closed-form nodes")
    p.add_argument("--k", type=_positive_int, required=True)
    add_common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("lebesgue", help="Lebesgue constants for section size k")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--grid", type=_grid_size, default=DEFAULT_GRID)
    p.add_argument("--refine", type=float, default=DEFAULT_REFINE_TOL)
    p.add_argument("--which", choices=("lambda", "lambda2", "both"), default="both")
    add_common(p)
    p.set_defaults(func=_cmd_lebesgue)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--max-k", type=_positive_int, default=None)
    p.add_argument("--grid", type=_grid_size, default=VERIFY_GRID_DEFAULT)
    p.add_argument("--refine", type=float, default=1e-11)
    p.add_argument(
        "--suites",
        default=",".join(SUITE_NAMES),
        help=f"comma-separated subset of {','.join(SUITE_NAMES)}",
    )
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("plotdata", help="boundary profile of the Lebesgue functions")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--grid", type=_grid_size, default=DEFAULT_GRID)
    p.add_argument("--which", choices=("lambda", "lambda2"), default="lambda")
    add_common(p)
    p.set_defaults(func=_cmd_plotdata)

    p = sub.add_parser("greedy", help="greedy section on an equispaced circle grid")
    p.add_argument("--k", type=_positive_int, default=16)
    p.add_argument("--grid", type=_grid_size, default=8192)
    p.add_argument(
        "--diagnostic",
        action="store_true",
        help="emit the geometric-mean distance diagnostic instead of nodes",
    )
    add_common(p)
    p.set_defaults(func=_cmd_greedy)

    p = sub.add_parser("recursion", help="exact majorant/defect table")
    p.add_argument("--max-k", type=_positive_int, default=64)
    add_common(p)
    p.set_defaults(func=_cmd_recursion)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
