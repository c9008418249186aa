"""Exact scalars, univariate polynomials and binary forms over Q.

Univariate polynomials are plain tuples of :class:`~fractions.Fraction`,
lowest degree first, with no trailing zeros (the zero polynomial is ``()``).
Binary forms keep their nominal degree even when every coefficient vanishes,
so that matrices of forms stay homogeneous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]
UniPoly = tuple  # tuple[Fraction, ...], low degree first


# ---------------------------------------------------------------------------
# univariate polynomials


def as_poly(coeffs: Iterable[Number]) -> UniPoly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_degree(f: UniPoly) -> int:
    """Degree of ``f``; the zero polynomial has degree -1."""
    return len(f) - 1


def poly_mul(f: Sequence[Number], g: Sequence[Number]) -> UniPoly:
    f, g = as_poly(f), as_poly(g)
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return as_poly(out)


def poly_divmod(f: Sequence[Number], g: Sequence[Number]) -> tuple[UniPoly, UniPoly]:
    f, g = as_poly(f), as_poly(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    quot = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    lead = g[-1]
    for shift in range(len(f) - len(g), -1, -1):
        c = rem[shift + len(g) - 1] / lead
        quot[shift] = c
        if c:
            for j, b in enumerate(g):
                rem[shift + j] -= c * b
    return as_poly(quot), as_poly(rem[: len(g) - 1])


def poly_derivative(f: Sequence[Number]) -> UniPoly:
    f = as_poly(f)
    return as_poly(i * c for i, c in enumerate(f) if i)


def monic(f: Sequence[Number]) -> UniPoly:
    f = as_poly(f)
    if not f:
        return f
    return tuple(c / f[-1] for c in f)


def poly_gcd(f: Sequence[Number], g: Sequence[Number]) -> UniPoly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    f, g = as_poly(f), as_poly(g)
    if not f and not g:
        raise ValueError("gcd undefined")
    while g:
        # keep the remainder sequence monic so coefficient heights stay small
        f, g = g, monic(poly_divmod(f, g)[1])
    return monic(f)


def poly_eval(f: Sequence[Number], t: Number) -> Fraction:
    acc = Fraction(0)
    for c in reversed(as_poly(f)):
        acc = acc * t + c
    return acc


# ---------------------------------------------------------------------------
# binary forms


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous polynomial ``sum_i c_i * y0**(N-i) * y1**i`` over Q."""

    coefficients: tuple

    def __init__(self, coefficients: Iterable[Number]):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a binary form needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, degree: int) -> BinaryForm:
        return cls([0] * (degree + 1))

    @classmethod
    def monomial(cls, e0: int, e1: int, coeff: Number = 1) -> BinaryForm:
        """``coeff * y0**e0 * y1**e1``."""
        coeffs = [0] * (e0 + e1 + 1)
        coeffs[e1] = coeff
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __call__(self, y0: Number, y1: Number) -> Fraction:
        n = self.degree
        return sum(
            (c * Fraction(y0) ** (n - i) * Fraction(y1) ** i
             for i, c in enumerate(self.coefficients) if c),
            Fraction(0),
        )

    def _check_degree(self, other: BinaryForm) -> None:
        if other.degree != self.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: BinaryForm) -> BinaryForm:
        self._check_degree(other)
        return BinaryForm(a + b for a, b in zip(self.coefficients, other.coefficients))

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        self._check_degree(other)
        return BinaryForm(a - b for a, b in zip(self.coefficients, other.coefficients))

    def __neg__(self) -> BinaryForm:
        return BinaryForm(-c for c in self.coefficients)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coefficients):
                if a == 0:
                    continue
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return BinaryForm(out)
        if isinstance(other, (int, Fraction)):
            return BinaryForm(c * other for c in self.coefficients)
        return NotImplemented

    __rmul__ = __mul__

    def dehomogenize(self) -> UniPoly:
        """``F(1, t)`` as a univariate polynomial in ``t``."""
        return as_poly(self.coefficients)

    def divisible_by_y0(self) -> bool:
        return self.coefficients[-1] == 0

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        n = self.degree
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("y0", n - i), ("y1", i)) if e
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def distinct_projective_roots(form: BinaryForm) -> tuple[int, bool]:
    """Count distinct zeros of ``form`` on P^1 over C.

    Works in the chart ``y0 = 1``; the point ``[0:1]`` is a zero exactly when
    ``y0`` divides the form. Returns ``(count, squarefree)``.
    """
    if form.is_zero:
        raise ValueError("root count undefined")
    f = form.dehomogenize()
    g = poly_gcd(f, poly_derivative(f))
    reduced, rem = poly_divmod(f, g)
    assert not rem
    count = poly_degree(reduced) + (1 if form.divisible_by_y0() else 0)
    return count, count == form.degree


# ---------------------------------------------------------------------------
# symmetric 3x3 matrices of binary forms

_UPPER = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


@dataclass(frozen=True)
class SymMatrix3:
    """Symmetric 3x3 matrix of binary forms, stored as its upper triangle.

    ``entries`` is ordered (0,0), (0,1), (0,2), (1,1), (1,2), (2,2).
    """

    entries: tuple

    def __post_init__(self):
        if len(self.entries) != 6:
            raise ValueError("expected 6 upper-triangle entries")
        if len({e.degree for e in self.entries}) != 1:
            raise ValueError("non-uniform matrix")
        object.__setattr__(self, "entries", tuple(self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[BinaryForm]]) -> SymMatrix3:
        for i, j in _UPPER:
            if rows[i][j] != rows[j][i]:
                raise ValueError("matrix is not symmetric")
        return cls(tuple(rows[i][j] for i, j in _UPPER))

    @property
    def degree(self) -> int:
        return self.entries[0].degree

    def __getitem__(self, ij: tuple[int, int]) -> BinaryForm:
        i, j = sorted(ij)
        return self.entries[_UPPER.index((i, j))]

    def evaluate(self, y0: Number, y1: Number) -> list[list[Fraction]]:
        return [[self[i, j](y0, y1) for j in range(3)] for i in range(3)]


def det3(m: SymMatrix3) -> BinaryForm:
    """Cofactor-expansion determinant; a form of degree ``3 * m.degree``."""
    if len({e.degree for e in m.entries}) != 1:
        raise ValueError("non-uniform matrix")
    a, b, c = m[0, 0], m[0, 1], m[0, 2]
    d, e, f = m[1, 1], m[1, 2], m[2, 2]
    return a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c)
