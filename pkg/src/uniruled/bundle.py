"""Numerical intersection ring of a P^2-bundle X = P(E) over a curve B.

Num X is spanned by G (a relatively O(1) class) and V (the fiber class), with

    G^2.V = 1,   G.V^2 = V^3 = 0,   G^3 = 2(1-g) + b,

where g is the genus of B and K_X = bV - 3G. The polarization of interest
is H = aV + 2G, which restricts to O(2) on every fiber.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import Number


class FormulaInconsistency(RuntimeError):
    """A closed form disagreed with its ring-level reconstruction."""


@dataclass(frozen=True)
class BundleContext:
    g: int
    b: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be non-negative")

    @property
    def G_cubed(self) -> int:
        return 2 * (1 - self.g) + self.b

    @property
    def G(self) -> DivisorClass:
        return DivisorClass(Fraction(1), Fraction(0), self)

    @property
    def V(self) -> DivisorClass:
        return DivisorClass(Fraction(0), Fraction(1), self)

    def canonical(self) -> DivisorClass:
        return self.b * self.V - 3 * self.G

    def polarization(self, a: Number) -> DivisorClass:
        return a * self.V + 2 * self.G

    def c2_dot(self, D: DivisorClass) -> Fraction:
        # c2.G = 8(1-g) + b and c2.V = 3, from the tangent sequences of G and V
        if D.context != self:
            raise ValueError("divisor class belongs to a different bundle")
        return D.alpha * (8 * (1 - self.g) + self.b) + 3 * D.beta

    def chi_O(self) -> int:
        return 1 - self.g


@dataclass(frozen=True)
class DivisorClass:
    """The class alpha*G + beta*V in Num X."""

    alpha: Fraction
    beta: Fraction
    context: BundleContext

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

    def _same(self, other: DivisorClass) -> None:
        if other.context != self.context:
            raise ValueError("divisor classes live on different bundles")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._same(other)
        return DivisorClass(self.alpha + other.alpha, self.beta + other.beta, self.context)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-1) * other

    def __neg__(self) -> DivisorClass:
        return (-1) * self

    def __rmul__(self, c: Number) -> DivisorClass:
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return DivisorClass(c * self.alpha, c * self.beta, self.context)

    __mul__ = __rmul__

    def __str__(self) -> str:
        return f"{self.alpha}*G + {self.beta}*V"


def triple_product(D1: DivisorClass, D2: DivisorClass, D3: DivisorClass) -> Fraction:
    D1._same(D2)
    D1._same(D3)
    ctx = D1.context
    return (
        D1.alpha * D2.alpha * D3.alpha * ctx.G_cubed
        + D1.alpha * D2.alpha * D3.beta
        + D1.alpha * D2.beta * D3.alpha
        + D1.beta * D2.alpha * D3.alpha
    )


@dataclass(frozen=True)
class BundleInvariants:
    g: int
    b: int
    a: int
    H_cubed: Fraction
    k_degenerate: Fraction
    K_S_squared: Fraction
    c2_dot_H: Fraction
    chi_H: Fraction
    # chi(H) - 1; equals h^0(H) - 1 only when h^i(H) = 0 for i > 0
    n_expected: Fraction


def riemann_roch_chi(ctx: BundleContext, H: DivisorClass) -> Fraction:
    """chi(H) on a threefold from the Hirzebruch-Riemann-Roch formula."""
    K = ctx.canonical()
    return (
        Fraction(1, 12) * (
            2 * triple_product(H, H, H)
            - 3 * triple_product(K, H, H)
            + triple_product(K, K, H)
            + ctx.c2_dot(H)
        )
        + ctx.chi_O()
    )


def invariants(ctx: BundleContext, a: int) -> BundleInvariants:
    """Closed-form invariants of (X, aV + 2G), each re-derived in the ring."""
    g, b = ctx.g, ctx.b
    H_cubed = Fraction(12 * a + 8 * b + 16 * (1 - g))
    k = Fraction(4 * (1 - g) + 3 * a + 2 * b)
    K_S_squared = Fraction(4 * (1 - g) - 3 * a - 2 * b)
    c2H = Fraction(16 * (1 - g) + 2 * b + 3 * a)
    chi = Fraction(14 * (1 - g) + 6 * a + 4 * b)

    H = ctx.polarization(a)
    KH = ctx.canonical() + H
    checks = {
        "H^3": (H_cubed, triple_product(H, H, H)),
        "K_S^2": (K_S_squared, triple_product(KH, KH, H)),
        "k": (k, 8 * (1 - g) - triple_product(KH, KH, H)),
        "H^3 = 4k": (H_cubed, 4 * k),
        "c2.H": (c2H, ctx.c2_dot(H)),
        "chi(H)": (chi, riemann_roch_chi(ctx, H)),
    }
    for name, (closed, ring) in checks.items():
        if closed != ring:
            raise FormulaInconsistency(
                f"formula inconsistency in {name}: {closed} != {ring} at g={g}, b={b}, a={a}")

    return BundleInvariants(g, b, a, H_cubed, k, K_S_squared, c2H, chi, chi - 1)


def check_identity_chi(ctx: BundleContext, a: int) -> bool:
    inv = invariants(ctx, a)
    return inv.H_cubed == 2 * inv.chi_H - 12 * (1 - ctx.g)


@dataclass(frozen=True)
class VeroneseBoundReport:
    d: Fraction
    n: Fraction
    bound_d: Fraction  # 2n - 10
    bound_d_ok: bool
    d_equality: bool
    k: Fraction
    k_lower_bound: Fraction  # (n - 5) / 2
    k_ok: bool
    k_equality: bool


def check_veronese_bounds(d: Number, n: Number, k: Optional[Number] = None) -> VeroneseBoundReport:
    """Test d >= 2n - 10 and k >= (n - 5)/2 for a Veronese fibration.

    ``k`` is the number of two-line fibers of a hyperplane section; when
    omitted it is taken to be d/4, its value on a smooth P^2-bundle.
    """
    d, n = Fraction(d), Fraction(n)
    if d <= 0:
        raise ValueError("H not big")
    if n < 0:
        raise ValueError("n must be non-negative")
    k = d / 4 if k is None else Fraction(k)
    bound_d = 2 * n - 10
    k_low = (n - 5) / 2
    return VeroneseBoundReport(
        d=d, n=n, bound_d=bound_d, bound_d_ok=d >= bound_d, d_equality=d == bound_d,
        k=k, k_lower_bound=k_low, k_ok=k >= k_low, k_equality=k == k_low,
    )
