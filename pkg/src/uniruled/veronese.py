"""Degenerate fibers of hyperplane sections of (P^2 x P^1, O(2, a)).

A section is a quadric in x = (x0:x1:x2) whose coefficients are binary forms
of degree a in (y0:y1). The fiber over (y0:y1) splits into two lines exactly
where the 3x3 coefficient matrix is singular, so the degenerate fibers are
the zeros of a binary form of degree 3a.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .algebra import BinaryForm, Number, SymMatrix3, det3, distinct_projective_roots
from .bundle import BundleContext, FormulaInconsistency, invariants

log = logging.getLogger(__name__)

# P^2 x P^1 as a P^2-bundle over P^1: G = pullback of a line, K = -3G - 2V
P2xP1 = BundleContext(g=0, b=-2)

COEFF_RANGE = (-99, 99)
DEFAULT_SEED = 42

_PAIRS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def coefficient_keys(a: int) -> list:
    return [(i, j, k) for i, j in _PAIRS for k in range(a + 1)]


@dataclass(frozen=True)
class SectionCoefficients:
    """Coefficients l[i, j, k] of sum l_ijk x_i x_j y0^k y1^(a-k), i <= j."""

    a: int
    l: Mapping

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("a must be a positive integer")
        keys = coefficient_keys(self.a)
        missing = [key for key in keys if key not in self.l]
        if missing:
            raise ValueError(f"missing coefficient l{missing[0]}")
        extra = set(self.l) - set(keys)
        if extra:
            raise ValueError(f"unexpected coefficient keys {sorted(extra)}")
        object.__setattr__(self, "l", {key: Fraction(self.l[key]) for key in keys})

    @classmethod
    def from_function(cls, a: int, fn) -> SectionCoefficients:
        return cls(a, {key: fn(*key) for key in coefficient_keys(a)})

    def __call__(self, x: Sequence[Number], y: Sequence[Number]) -> Fraction:
        """Value of the section polynomial at (x, y)."""
        y0, y1 = Fraction(y[0]), Fraction(y[1])
        return sum(
            (c * Fraction(x[i]) * Fraction(x[j]) * y0 ** k * y1 ** (self.a - k)
             for (i, j, k), c in self.l.items() if c),
            Fraction(0),
        )


def random_section(a: int, seed: int = DEFAULT_SEED) -> SectionCoefficients:
    rng = random.Random(seed)
    lo, hi = COEFF_RANGE
    return SectionCoefficients(a, {key: rng.randint(lo, hi) for key in coefficient_keys(a)})


def diagonal_section(a: int, forms: Sequence[BinaryForm]) -> SectionCoefficients:
    """Section whose matrix is diag(forms); handy for hand-built examples."""
    l = {key: 0 for key in coefficient_keys(a)}
    for i, form in enumerate(forms):
        if form.degree != a:
            raise ValueError("diagonal forms must have degree a")
        for k in range(a + 1):
            l[i, i, k] = form.coefficients[a - k]
    return SectionCoefficients(a, l)


def _quadratic_form(m: SymMatrix3, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    vals = m.evaluate(*y)
    return sum((x[i] * vals[i][j] * x[j] for i in range(3) for j in range(3)), Fraction(0))


def build_matrix(c: SectionCoefficients, check_points: int = 4) -> SymMatrix3:
    """Symmetric matrix M of binary forms with x.M.x equal to the section."""
    a = c.a
    entries = []
    for i, j in _PAIRS:
        form = BinaryForm.zero(a)
        for k in range(a + 1):
            form = form + BinaryForm.monomial(k, a - k, c.l[i, j, k])
        entries.append(form if i == j else form * Fraction(1, 2))
    m = SymMatrix3(tuple(entries))

    rng = random.Random(0)
    for _ in range(check_points):
        x = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(3)]
        y = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(2)]
        if _quadratic_form(m, x, y) != c(x, y):
            raise FormulaInconsistency("x.M.x does not reproduce the section")
    return m


@dataclass(frozen=True)
class FiberReport:
    a: int
    determinant: BinaryForm
    det_degree: int
    distinct_roots: int
    squarefree: bool
    expected: int
    matches_expected: bool
    k_from_liscio: int
    n: int
    prop_vfs_equality: bool


def count_degenerate_fibers(c: SectionCoefficients) -> FiberReport:
    a = c.a
    det = det3(build_matrix(c))
    if det.is_zero:
        raise ValueError("section is everywhere-degenerate (non-generic)")
    roots, squarefree = distinct_projective_roots(det)

    inv = invariants(P2xP1, a)
    n = 6 * (a + 1) - 1
    if inv.n_expected != n or inv.k_degenerate != 3 * a:
        raise FormulaInconsistency("bundle invariants disagree with h^0(O(2, a))")
    k = int(inv.k_degenerate)
    return FiberReport(
        a=a, determinant=det, det_degree=det.degree, distinct_roots=roots,
        squarefree=squarefree, expected=3 * a, matches_expected=roots == 3 * a,
        k_from_liscio=k, n=n, prop_vfs_equality=Fraction(k) == Fraction(n - 5, 2),
    )


@dataclass(frozen=True)
class GenericDraw:
    report: FiberReport
    seed: int  # the seed that produced ``report``
    first_seed_generic: bool


def generic_fiber_count(a: int, seed: int = DEFAULT_SEED) -> GenericDraw:
    """Count degenerate fibers of a random section, redrawing once if needed.

    A draw is generic when its determinant is nonzero and squarefree; a
    non-generic draw is retried with ``seed + 1``.
    """
    def draw(s: int) -> Optional[FiberReport]:
        try:
            return count_degenerate_fibers(random_section(a, s))
        except ValueError:
            return None

    report = draw(seed)
    if report is not None and report.squarefree:
        return GenericDraw(report, seed, True)
    log.warning("seed %d gave a non-generic section for a=%d; redrawing with seed %d",
                seed, a, seed + 1)
    retry = draw(seed + 1)
    if retry is None:
        raise ValueError(f"seeds {seed} and {seed + 1} both gave degenerate sections")
    return GenericDraw(retry, seed + 1, False)


@dataclass(frozen=True)
class SweepRow:
    a: int
    d: int
    n: int
    two_n_minus_10: int
    k: int
    k_bound: Fraction  # (n - 5) / 2


def sharpness_sweep(a_max: int) -> list:
    """Degree, sections and two-line fiber count of (P^2 x P^1, O(2, a))."""
    if a_max < 1:
        raise ValueError("a_max must be at least 1")
    rows = []
    for a in range(1, a_max + 1):
        inv = invariants(P2xP1, a)
        d, n, k = int(inv.H_cubed), int(inv.n_expected), int(inv.k_degenerate)
        row = SweepRow(a, d, n, 2 * n - 10, k, Fraction(n - 5, 2))
        if (d, n) != (12 * a, 6 * a + 5) or d != row.two_n_minus_10 or k != row.k_bound:
            raise FormulaInconsistency(f"sharpness equalities fail at a={a}: {row}")
        rows.append(row)
    return rows
