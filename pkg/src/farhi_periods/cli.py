"""``farhi`` command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 hypothesis violation, 4 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from . import closedforms, farhi, verify
from .arith import Factorization, factorize, format_factored
from .polyarith import PolySyntaxError, poly_parse

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _instance(poly: str, k: int) -> farhi.FarhiInstance:
    if k < 0:
        raise UsageError("--k must be nonnegative")
    return farhi.new_instance(poly_parse(poly), k)


def show(fac: Factorization) -> str:
    """``2^2·3 = 12``, or just the value when the factored form adds nothing."""
    text = format_factored(fac)
    return text if text == str(fac.value) else f"{text} = {fac.value}"


def describe(report: farhi.PeriodReport) -> str:
    lines = [
        f"T = {show(report.T_factored)}",
        f"f = {report.f}, k = {report.k}",
        f"C = {show(factorize(report.C))}",
    ]
    for r in report.locals:
        lines.append(f"  p = {r.p}: e_p = {r.e_p}, T_p = {r.T_p}")
    return "\n".join(lines)


def cmd_eval(args) -> int:
    inst = _instance(args.poly, args.k)
    if args.n in inst.zero_set:
        print(f"note: f vanishes in the window at n = {args.n}; value extended along multiples of C = {inst.C}", file=sys.stderr)
    print(farhi.g_eval_ext(inst, args.n))
    return EXIT_OK


def cmd_period(args) -> int:
    report = farhi.least_period(_instance(args.poly, args.k))
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(describe(report))
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return bounds


def _cell(template: str, b: int, k: int) -> farhi.PeriodReport:
    try:
        return farhi.least_period(farhi.new_instance(poly_parse(template.format(b=b)), k))
    except (farhi.HypothesisViolation, farhi.ZeroPolynomial) as exc:
        raise farhi.HypothesisViolation(f"cell (b={b}, k={k}): {exc}") from None


def table_cells(template: str, b_range, k_range, jobs: int = 1) -> list[tuple[int, int, farhi.PeriodReport]]:
    """Least periods on the grid, ordered by ascending b then k."""
    keys = [(b, k) for b in range(b_range[0], b_range[1] + 1) for k in range(k_range[0], k_range[1] + 1)]
    for b in range(b_range[0], b_range[1] + 1):
        poly_parse(template.format(b=b))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            futures = [pool.submit(_cell, template, b, k) for b, k in keys]
            reports = [f.result() for f in futures]
    else:
        reports = [_cell(template, b, k) for b, k in keys]
    return [(b, k, r) for (b, k), r in zip(keys, reports)]


def render_table(template: str, cells, fmt: str) -> str:
    if fmt == "json":
        rows = [
            {
                "b": b,
                "k": k,
                "f": r.f,
                "T": str(r.T),
                "T_factored": [[p, e] for p, e in r.T_factored],
            }
            for b, k, r in cells
        ]
        return json.dumps({"template": template, "cells": rows}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["b", "k", "T", "T_factored"])
        for b, k, r in cells:
            writer.writerow([b, k, r.T, format_factored(r.T_factored)])
        return buf.getvalue()
    ks = sorted({k for _, k, _ in cells})
    bs = sorted({b for b, _, _ in cells})
    grid = {(b, k): format_factored(r.T_factored) for b, k, r in cells}
    out = ["| f \\ k | " + " | ".join(str(k) for k in ks) + " |"]
    out.append("|---" * (len(ks) + 1) + "|")
    for b in bs:
        label = template.format(b=b)
        out.append(f"| {label} | " + " | ".join(grid[b, k] for k in ks) + " |")
    return "\n".join(out) + "\n"


def cmd_table(args) -> int:
    if "{b}" not in args.template:
        raise UsageError("the template needs a {b} placeholder")
    cells = table_cells(args.template, args.b_range, args.k_range, args.jobs)
    sys.stdout.write(render_table(args.template, cells, args.format))
    return EXIT_OK


def cmd_closed_form(args) -> int:
    if args.k < 0:
        raise UsageError("--k must be nonnegative")
    if args.spaced:
        if args.a is None or args.b is not None:
            raise UsageError("--spaced takes --a and no --b")
        if args.a < 1:
            raise UsageError("--a must be positive")
        fac = closedforms.spaced_T(args.k, args.a)
    elif args.b is not None:
        if args.a is None or args.a < 1:
            raise UsageError("--b requires a positive --a")
        if math.gcd(args.a, args.b) != 1:
            print(f"error: gcd({args.a}, {args.b}) != 1", file=sys.stderr)
            return EXIT_HYPOTHESIS
        fac = closedforms.linear_T(args.k, args.a, args.b)
    elif args.a is not None:
        raise UsageError("--a needs either --b or --spaced")
    else:
        fac = closedforms.farhi_kane_T(args.k)
    print(show(fac))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="farhi", description="Least periods of Farhi arithmetic functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate g_{k,f}(n)")
    p.add_argument("--poly", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("period", help="least period of g_{k,f}")
    p.add_argument("--poly", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("table", help="grid of least periods over b and k")
    p.add_argument("--template", required=True, help="polynomial with a {b} placeholder, e.g. 'x^2+{b}'")
    p.add_argument("--b-range", type=_parse_range, default=(1, 6), metavar="LO..HI")
    p.add_argument("--k-range", type=_parse_range, default=(1, 6), metavar="LO..HI")
    p.add_argument("--format", choices=["json", "csv", "markdown"], default="markdown")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("closed-form", help="closed-form least periods")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--spaced", action="store_true", help="period of n(n+a)...(n+ka)/lcm")
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--suite", choices=["small", "full"], default="small")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PolySyntaxError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (farhi.HypothesisViolation, farhi.ZeroPolynomial) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except farhi.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
