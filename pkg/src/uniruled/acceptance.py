"""End-to-end acceptance checks, shared by ``uniruled selftest`` and pytest."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from . import fano
from .algebra import BinaryForm
from .bundle import BundleContext, invariants, riemann_roch_chi, triple_product
from .classifier import (Flags, Outcome, PolarizedPair, classify, delta_genus,
                         sharp_inequality_check)
from .veronese import P2xP1, count_degenerate_fibers, diagonal_section, generic_fiber_count

GRID = list(product(range(0, 5), range(-8, 9), range(-8, 9)))  # (g, b, a)
FIBER_SEEDS = tuple(range(42, 62))

GG_BIG = dict(globally_generated=True, big=True)

# (dim, d, n, flags) -> (outcome, fired rule ids, clifford bound)
CLASSIFY_GOLDEN = (
    ((3, 27, 19, Flags(**GG_BIG)), (Outcome.EXCEPTIONAL_P3_CUBIC, ("T1x",), Fraction(-9))),
    ((3, 12, 11, Flags(**GG_BIG, terminal_q_factorial=True)), (Outcome.DEGREE_ONE, ("EB",), Fraction(-8))),
    ((3, 24, 17, Flags(**GG_BIG)), (Outcome.BIG_UNIRULED_SYSTEM_ONLY, ("CC",), Fraction(-8))),
    ((5, 9, 16, Flags(**GG_BIG)), (Outcome.DEGREE_ONE, ("C12",), None)),
    ((3, 11, 12, Flags(smooth=True, very_ample=True)), (Outcome.DEGREE_ONE, ("HB",), Fraction(-11))),
)


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] {self.number}. {self.name}: {self.detail} "
                f"({self.seconds * 1000:.1f} ms, limit {self.limit * 1000:.0f} ms)")


def _timed(number: int, name: str, limit: float, fn: Callable[[], tuple]) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, not a crashed run
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if ok and elapsed >= limit:
        ok, detail = False, detail + "; over time limit"
    return CheckResult(number, name, ok, detail, elapsed, limit)


def check_table() -> tuple:
    bad = []
    for row in fano.TABLE:
        d, n = fano.derive_d_n(row.rho, row.K_squared)
        if (d, n) != (row.d, row.n) or row.ratio != -row.rho / (row.rho - 1):
            bad.append(row.label)
    total = len(fano.TABLE)
    ok = not bad and total == 20
    return ok, f"{total - len(bad)}/{total} rows reproduced" + (f"; mismatches {bad}" if bad else "")


def check_sharpness() -> tuple:
    bad = []
    for a in range(1, 51):
        inv = invariants(P2xP1, a)
        n = 6 * a + 5
        if not (inv.H_cubed == 12 * a and inv.chi_H == 6 * (a + 1) and inv.k_degenerate == 3 * a
                and inv.n_expected == n and inv.H_cubed == 2 * n - 10):
            bad.append(a)
    return not bad, "a = 1..50: H^3 = 12a, chi = 6(a+1), k = 3a, d = 2n-10" + (f"; fails {bad}" if bad else "")


def check_chi_identity() -> tuple:
    bad = []
    for g, b, a in GRID:
        inv = invariants(BundleContext(g, b), a)
        if inv.H_cubed != 2 * inv.chi_H - 12 * (1 - g):
            bad.append((g, b, a))
    return not bad, f"H^3 = 2chi - 12(1-g) on {len(GRID)} grid points" + (f"; fails {bad[:5]}" if bad else "")


def check_ring_oracle() -> tuple:
    bad = []
    for g, b, a in GRID:
        ctx = BundleContext(g, b)
        inv = invariants(ctx, a)
        H = ctx.polarization(a)
        KH = ctx.canonical() + H
        if (inv.H_cubed != triple_product(H, H, H)
                or inv.K_S_squared != triple_product(KH, KH, H)
                or inv.chi_H != riemann_roch_chi(ctx, H)):
            bad.append((g, b, a))
    return not bad, f"H^3, K_S^2, chi match ring assembly on {len(GRID)} points" + (
        f"; fails {bad[:5]}" if bad else "")


# Chow ring of P^2 x P^1: Q[h, f] / (h^3, f^2), monomials keyed by (i, j) for h^i f^j.

def _chow_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            i, j = i1 + i2, j1 + j2
            if i <= 2 and j <= 1:
                out[i, j] = out.get((i, j), 0) + c1 * c2
    return out


def splitting_c2_dot_H(a: int) -> int:
    """c2(P^2 x P^1).H for H = 2h + a f, from c(T) = (1 + h)^3 (1 + f)^2."""
    c: dict = {(0, 0): 1}
    for factor in [{(0, 0): 1, (1, 0): 1}] * 3 + [{(0, 0): 1, (0, 1): 1}] * 2:
        c = _chow_mul(c, factor)
    c2 = {m: v for m, v in c.items() if sum(m) == 2}
    return _chow_mul(c2, {(1, 0): 2, (0, 1): a}).get((2, 1), 0)


def check_c2_oracle() -> tuple:
    # K = -c1 = -3h - 2f, so b = -2; G = h has G^3 = 0 = 2(1 - 0) + b
    if P2xP1.G_cubed != 0:
        return False, "P^2 x P^1 identification b = -2 inconsistent"
    bad = [a for a in range(-10, 51)
           if not (splitting_c2_dot_H(a) == 3 * a + 12 == invariants(P2xP1, a).c2_dot_H)]
    return not bad, "c2.H = 3a + 12 from (1+h)^3(1+f)^2 for a = -10..50" + (f"; fails {bad}" if bad else "")


def check_fiber_counts() -> tuple:
    notes = []
    ok = True
    for a in (1, 2, 3):
        first_try = 0
        for seed in FIBER_SEEDS:
            draw = generic_fiber_count(a, seed)
            first_try += draw.first_seed_generic
            r = draw.report
            if not (r.distinct_roots == 3 * a and r.squarefree and r.det_degree == 3 * a):
                ok = False
        ok = ok and first_try >= 19
        notes.append(f"a={a}: {first_try}/20 generic")
    y0, y1 = BinaryForm.monomial(1, 0), BinaryForm.monomial(0, 1)
    engineered = count_degenerate_fibers(diagonal_section(1, [y0, y0, y0 + y1]))
    ok = ok and engineered.distinct_roots == 2 and not engineered.squarefree
    notes.append(f"engineered a=1: {engineered.distinct_roots} roots")
    return ok, "; ".join(notes)


def check_classifier() -> tuple:
    bad = []
    for (dim, d, n, flags), (outcome, rules, cliff) in CLASSIFY_GOLDEN:
        v = classify(PolarizedPair(dim, d, n, flags))
        if (v.outcome, v.fired_ids, v.clifford_bound) != (outcome, rules, cliff):
            bad.append((dim, d, n))
    grid_flags = (Flags(**GG_BIG), Flags(**GG_BIG, terminal_q_factorial=True),
                  Flags(**GG_BIG, smooth=True, very_ample=True))
    points = 0
    for d in range(1, 61):
        for n in range(4, 31):
            for fl in grid_flags:
                points += 1
                v = classify(PolarizedPair(3, d, n, fl))
                if v.outcome is Outcome.EXCEPTIONAL_P3_CUBIC and (d, n) != (27, 19):
                    bad.append(("exceptional", d, n))
                if v.outcome is Outcome.DEGREE_ONE and not v.fired_rules:
                    bad.append(("empty", d, n))
                if v.outcome is Outcome.EXCEPTIONAL_P3_CUBIC and any(
                        r.rule != "T1x" for r in v.fired_rules):
                    bad.append(("mixed", d, n))
            if (d < 2 * (n - 3) - 4) != (delta_genus(3, d, n) < n - 3 - 5):
                bad.append(("delta", d, n))
    return not bad, f"5 golden verdicts, {points} grid classifications" + (f"; fails {bad[:5]}" if bad else "")


def check_ledgers() -> tuple:
    bad = [r.label for r in fano.TABLE if fano.corner_ledger(r.rho, r.K_squared, 0) != r.d - 2 * r.n + 2]
    for a in range(1, 11):
        res = sharp_inequality_check(Fraction(2, 3), 12 * a, -8, 8 - 3 * a, 0)
        if not (res.holds and res.lhs == 0 and res.rhs == 0):
            bad.append(f"sharp a={a}")
    return not bad, "corner ledger on 20 rows, surface inequality a = 1..10" + (f"; fails {bad}" if bad else "")


CHECKS = (
    (1, "Table reproduction", 0.010, check_table),
    (2, "Sharpness family", 0.100, check_sharpness),
    (3, "chi identity", 1.0, check_chi_identity),
    (4, "Closed forms vs ring", 2.0, check_ring_oracle),
    (5, "c2 splitting oracle", 1.0, check_c2_oracle),
    (6, "Determinant fiber count", 5.0, check_fiber_counts),
    (7, "Classifier golden set", 1.0, check_classifier),
    (8, "Ledger checks", 1.0, check_ledgers),
)


def run_check(number: int) -> CheckResult:
    for num, name, limit, fn in CHECKS:
        if num == number:
            return _timed(num, name, limit, fn)
    raise KeyError(number)


def run_all() -> list:
    return [_timed(num, name, limit, fn) for num, name, limit, fn in CHECKS]
