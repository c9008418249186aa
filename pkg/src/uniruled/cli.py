"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 failed internal verification.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from fractions import Fraction

from . import acceptance, fano
from .bundle import BundleContext, FormulaInconsistency, check_identity_chi, check_veronese_bounds, invariants
from .classifier import Flags, Outcome, PolarizedPair, classify
from .serialize import dumps, to_jsonable
from .veronese import DEFAULT_SEED, generic_fiber_count, sharpness_sweep

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _use_color() -> bool:
    return "NO_COLOR" not in os.environ and sys.stdout.isatty()


def _style(text: str, code: str) -> str:
    return f"\033[{code}m{text}\033[0m" if _use_color() else text


def _fmt(x) -> str:
    return str(x) if not isinstance(x, Fraction) or x.denominator != 1 else str(x.numerator)


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> int:
    flags = Flags(globally_generated=True, big=True, smooth=args.smooth,
                  very_ample=args.very_ample, terminal_q_factorial=args.terminal)
    pair = PolarizedPair(args.dim, args.degree, args.sections, flags)
    v = classify(pair)
    if args.json:
        print(dumps({
            "input": {"dim": pair.dim, "d": pair.d, "n": pair.n, "flags": to_jsonable(flags)},
            "outcome": v.outcome,
            "fired_rules": [{"rule": r.rule, "text": r.text} for r in v.fired_rules],
            "clifford_bound": v.clifford_bound,
            "note": v.note,
        }))
        return EXIT_OK
    color = {Outcome.DEGREE_ONE: "32", Outcome.EXCEPTIONAL_P3_CUBIC: "33"}.get(v.outcome, "0")
    print(f"verdict: {_style(v.outcome.value, color)}")
    for r in v.fired_rules:
        print(f"  {r.rule:<4} {r.text}")
    if v.clifford_bound is not None:
        print(f"clifford bound d-2n+2: {_fmt(v.clifford_bound)}")
    if v.note:
        print(f"note: {v.note}")
    return EXIT_OK


def _row_line(r: fano.FanoRow) -> str:
    return (f"({r.label}) {r.ambient:<20} {r.section:<26} rho={_fmt(r.rho):<4} "
            f"ratio={_fmt(r.ratio):<4} K2={r.K_squared:<2} d={r.d:<3} n={r.n}")


def cmd_fano_table(args) -> int:
    rows = fano.TABLE
    if args.row:
        try:
            rows = (fano.get_row(args.row),)
        except KeyError as exc:
            raise ValueError(exc.args[0]) from None
    report = fano.verify_rows(rows)
    if args.csv:
        fano.write_csv(args.csv, rows)

    if args.json:
        print(dumps({"rows": rows, "checked": report.checked, "verified": report.verified,
                     "mismatches": report.mismatches, "csv": args.csv}))
    else:
        if args.row or not args.verify:
            for r in rows:
                print(_row_line(r))
        if args.verify or args.row:
            for m in report.mismatches:
                print(f"mismatch in row ({m.label}): {m.field} stored {_fmt(m.stored)}, derived {_fmt(m.derived)}")
            print(f"{report.verified}/{report.checked} rows verified")
        if args.csv:
            print(f"wrote {args.csv}")
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_bundle(args) -> int:
    ctx = BundleContext(args.genus, args.twist)
    inv = invariants(ctx, args.a)
    identity = check_identity_chi(ctx, args.a)
    bounds = check_veronese_bounds(inv.H_cubed, inv.n_expected) if inv.H_cubed > 0 else None
    if args.json:
        print(dumps({"invariants": inv, "G_cubed": ctx.G_cubed, "chi_identity": identity,
                     "n_expected_note": "expected, assumes vanishing of higher cohomology",
                     "veronese_bounds": bounds}))
    else:
        print(f"P^2-bundle over a genus {ctx.g} curve, K = {ctx.b}V - 3G, H = {args.a}V + 2G")
        print(f"  G^3                 {ctx.G_cubed}")
        print(f"  H^3                 {_fmt(inv.H_cubed)}")
        print(f"  k (two-line fibers) {_fmt(inv.k_degenerate)}")
        print(f"  K_S^2               {_fmt(inv.K_S_squared)}")
        print(f"  c2.H                {_fmt(inv.c2_dot_H)}")
        print(f"  chi(H)              {_fmt(inv.chi_H)}")
        print(f"  n                   {_fmt(inv.n_expected)} (expected, assumes vanishing)")
        print(f"  H^3 = 2chi - 12(1-g): {identity}")
        if bounds is None:
            print("  H is not big; degree bounds skipped")
        else:
            print(f"  d >= 2n-10: {bounds.bound_d_ok} (equality {bounds.d_equality})")
            print(f"  k >= (n-5)/2 = {_fmt(bounds.k_lower_bound)}: {bounds.k_ok} (equality {bounds.k_equality})")
    return EXIT_OK if identity else EXIT_VERIFY


def cmd_veronese(args) -> int:
    if args.sweep is not None:
        rows = sharpness_sweep(args.sweep)
        if args.json:
            print(dumps({"sweep": rows, "all_equalities_hold": True}))
        else:
            print(f"{'a':>4} {'d':>6} {'n':>6} {'2n-10':>6} {'k':>5} {'(n-5)/2':>8}")
            for r in rows:
                print(f"{r.a:>4} {r.d:>6} {r.n:>6} {r.two_n_minus_10:>6} {r.k:>5} {_fmt(r.k_bound):>8}")
            print(f"d = 2n-10 and k = (n-5)/2 for a = 1..{args.sweep}")
        return EXIT_OK

    draw = generic_fiber_count(args.a, args.seed)
    r = draw.report
    if args.json:
        print(dumps({"report": r, "seed_used": draw.seed, "redrawn": not draw.first_seed_generic}))
    else:
        print(f"a = {r.a}, seed {draw.seed}" + ("" if draw.first_seed_generic else f" (redrawn from {args.seed})"))
        print(f"  det degree        {r.det_degree}")
        print(f"  distinct roots    {r.distinct_roots} (expected {r.expected})")
        print(f"  squarefree        {r.squarefree}")
        print(f"  k from bundle     {r.k_from_liscio}, n = {r.n}, k = (n-5)/2: {r.prop_vfs_equality}")
    return EXIT_OK if r.matches_expected else EXIT_VERIFY


def cmd_selftest(args) -> int:
    start = time.perf_counter()
    results = acceptance.run_all()
    for res in results:
        line = res.line()
        print(_style(line, "32" if res.passed else "31"))
    total = time.perf_counter() - start
    passed = sum(r.passed for r in results)
    ok = passed == len(results) and total < 10.0
    print(f"{passed}/{len(results)} criteria passed in {total:.2f} s (limit 10 s)")
    return EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uniruled", description=(
        "Exact invariants and uniruledness criteria for polarized threefolds."))
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="decide H-degree-one uniruledness from (dim, d, n); "
                                        "H is assumed globally generated and big")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--degree", type=int, required=True, help="d = H^dim")
    p.add_argument("--sections", type=int, required=True, help="n = h^0(H) - 1")
    p.add_argument("--smooth", action="store_true")
    p.add_argument("--very-ample", action="store_true")
    p.add_argument("--terminal", action="store_true", help="X terminal and Q-factorial")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fano-table", help="show, verify or export the Q-Fano table")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--row", metavar="LETTER")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fano_table)

    p = sub.add_parser("bundle", help="invariants of (P(E), aV + 2G) over a genus-g curve")
    p.add_argument("--genus", "-g", type=int, default=0)
    p.add_argument("--twist", "-b", type=int, default=-2, help="b in K = bV - 3G")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("veronese", help="count two-line fibers of a random section of O(2, a)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--a", type=int)
    group.add_argument("--sweep", type=int, metavar="A_MAX")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_veronese)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except FormulaInconsistency as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
