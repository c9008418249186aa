"""Numerical criteria for a polarized variety to be uniruled of H-degree one.

Given d = H^dim and n = h^0(H) - 1 together with what is known about X and H,
every applicable criterion is evaluated in a fixed order:

    T1   dim 3:  d < 2n - 10, (d, n) != (27, 19)
    T1x  dim 3:  d < 2n - 10, (d, n) == (27, 19)  -> exceptional P^3, O(3)
    C12  dim>=4: d < 2(n - dim) - 4
    EB   dim 3:  n >= 4, d < (4n - 4)/3, minus the listed exceptional pairs
    HB   dim 3, X smooth and H very ample: bounds from ruling by planes/quadrics

T1, C12 and EB need H globally generated and big.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .algebra import Number

EXCEPTIONAL_PAIR = (27, 19)


class Outcome(str, enum.Enum):
    DEGREE_ONE = "DegreeOne"
    EXCEPTIONAL_P3_CUBIC = "ExceptionalP3Cubic"
    BIG_UNIRULED_SYSTEM_ONLY = "BigUniruledSystemOnly"
    NO_CONCLUSION = "NoConclusion"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Flags:
    globally_generated: bool = False
    big: bool = False
    smooth: bool = False
    very_ample: bool = False
    terminal_q_factorial: bool = False

    def any(self) -> bool:
        return any((self.globally_generated, self.big, self.smooth,
                    self.very_ample, self.terminal_q_factorial))


@dataclass(frozen=True)
class PolarizedPair:
    dim: int
    d: int
    n: int
    flags: Flags = field(default_factory=Flags)

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"dimension must be at least 2, got {self.dim}")
        if self.d < 1:
            raise ValueError(f"degree must be positive, got {self.d}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")


@dataclass(frozen=True)
class RuleCheck:
    """One criterion evaluated on a pair.

    ``inequality`` is the main (d-monotone) inequality alone; ``fired`` also
    accounts for the excluded (d, n) pairs.
    """

    rule: str
    inequality: bool
    fired: bool
    text: str


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    fired_rules: tuple
    clifford_bound: Optional[Fraction]
    checks: tuple = ()
    note: str = ""

    @property
    def fired_ids(self) -> tuple:
        return tuple(r.rule for r in self.fired_rules)


def evaluate_rules(p: PolarizedPair) -> list:
    """Every criterion whose hypotheses hold for ``p``, in the fixed order."""
    d, n, k, fl = Fraction(p.d), Fraction(p.n), p.dim, p.flags
    gg_big = fl.globally_generated and fl.big
    out = []

    if k == 3 and gg_big:
        bound = 2 * n - 10
        ineq = d < bound
        exceptional = (p.d, p.n) == EXCEPTIONAL_PAIR
        out.append(RuleCheck(
            "T1", ineq, ineq and not exceptional,
            f"d < 2n-10: {d} < {bound} is {ineq}; (d,n) != (27,19) is {not exceptional}"))
        out.append(RuleCheck(
            "T1x", ineq, ineq and exceptional,
            f"d < 2n-10: {d} < {bound} is {ineq}; (d,n) == (27,19) is {exceptional}"))

    if k >= 4 and gg_big:
        bound = 2 * (n - k) - 4
        ineq = d < bound
        out.append(RuleCheck("C12", ineq, ineq, f"d < 2(n-dim)-4: {d} < {bound} is {ineq}"))

    if k == 3 and gg_big:
        bound = Fraction(4, 3) * n - Fraction(4, 3)
        ineq = n >= 4 and d < bound
        excluded = []
        if d == n - 1 and n <= 9:
            excluded.append("d = n-1, n <= 9")
        if d == n - 2 and n <= 6:
            excluded.append("d = n-2, n <= 6")
        if not fl.terminal_q_factorial and d == n and 5 <= n <= 8:
            excluded.append("d = n, 5 <= n <= 8")
        text = f"n >= 4 and d < 4n/3-4/3: {d} < {bound} is {ineq}"
        if excluded:
            text += "; excluded: " + ", ".join(excluded)
        out.append(RuleCheck("EB", ineq, ineq and not excluded, text))

    if k == 3 and fl.smooth and fl.very_ample:
        if n >= 12:
            bound = Fraction(3, 2) * (n - 4)
            ineq = d < bound
            text = f"n >= 12 and d < 3(n-4)/2: {d} < {bound} is {ineq}"
        elif 7 <= n <= 11:
            bound = Fraction(4, 3) * (n - 3)
            ineq = d < bound
            text = f"7 <= n <= 11 and d < 4(n-3)/3: {d} < {bound} is {ineq}"
        else:
            ineq = False
            text = f"n = {p.n} outside the range n >= 7"
        out.append(RuleCheck("HB", ineq, ineq, text))

    return out


def classify(p: PolarizedPair) -> Verdict:
    if not p.flags.any():
        raise ValueError("no applicable hypotheses")
    if p.dim < 3:
        raise ValueError("surface case out of scope")

    checks = evaluate_rules(p)
    fired = tuple(c for c in checks if c.fired)
    degree_one = tuple(c for c in fired if c.rule != "T1x")

    clifford_bound = None
    cliff = None
    if p.dim == 3 and p.d < 2 * p.n - 4:
        clifford_bound = Fraction(p.d - 2 * p.n + 2)
        cliff = RuleCheck(
            "CC", True, True,
            f"d < 2n-4: {p.d} < {2 * p.n - 4}; D.K_S <= d-2n+2 = {clifford_bound}")

    note = ""
    if degree_one:
        outcome = Outcome.DEGREE_ONE
        fired = degree_one
        if p.flags.very_ample:
            note = "H is very ample, so X is uniruled by lines in the embedding given by |H|"
    elif fired:
        outcome = Outcome.EXCEPTIONAL_P3_CUBIC
        note = ("either uniruled of H-degree one or a possible exceptional "
                "#-minimal model (P^3, O(3))")
    elif cliff is not None:
        outcome = Outcome.BIG_UNIRULED_SYSTEM_ONLY
        fired = (cliff,)
        note = "big uniruled system; no degree-one criterion applies"
    else:
        outcome = Outcome.NO_CONCLUSION
    return Verdict(outcome, fired, clifford_bound, tuple(checks), note)


def delta_genus(dim: Number, d: Number, n: Number) -> Fraction:
    return Fraction(d) + dim - Fraction(n) - 1


class SurfaceInequality(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    holds: bool


def sharp_inequality_check(rho: Number, D_sq: Number, D_dot_K: Number,
                           K_sq: Number, l: int) -> SurfaceInequality:
    """(D + c K_S)^2 >= -l c^2 with c = rho/(1 - rho).

    ``l`` is the number of curves the section surface loses on the way to its
    minimal model.
    """
    rho = Fraction(rho)
    if not Fraction(1, 3) <= rho < 1:
        raise ValueError("hypothesis violated: need 1/3 <= rho < 1")
    if l < 0:
        raise ValueError("l must be non-negative")
    c = rho / (1 - rho)
    lhs = Fraction(D_sq) + 2 * c * Fraction(D_dot_K) + c * c * Fraction(K_sq)
    rhs = -l * c * c
    return SurfaceInequality(lhs, rhs, lhs >= rhs)
