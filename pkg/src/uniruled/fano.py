"""Polarized Q-Fano threefolds (T, H) with K_T ~ -(1/rho) H.

A general S in |H| is a smooth del Pezzo surface with H|S = rho/(rho-1) K_S,
so d = H^3 and n = h^0(H) - 1 follow from rho and K_S^2 alone.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, replace
from fractions import Fraction
from os import PathLike
from typing import Iterable, Optional, Sequence

from .algebra import Number

CSV_COLUMNS = ("label", "ambient", "section", "rho_num", "rho_den", "K2", "d", "n")


@dataclass(frozen=True)
class FanoRow:
    label: str
    ambient: str
    section: str
    rho: Fraction
    ratio: Fraction  # -rho/(rho - 1)
    K_squared: int
    d: int
    n: int


def _row(label, ambient, section, rho, ratio, K2, d, n) -> FanoRow:
    return FanoRow(label, ambient, section, Fraction(rho), Fraction(ratio), K2, d, n)


TABLE: tuple = (
    _row("a", "P(1,1,2,3)", "H6 ⊂ X", "6/7", 6, 1, 36, 22),
    _row("b", "X6 ⊂ P(1,1,2,3,3)", "X6 ∩ {x4=0}", "3/4", 3, 1, 9, 7),
    _row("c", "X6 ⊂ P(1,1,2,3,4)", "X6 ∩ {x4=0}", "4/5", 4, 1, 16, 11),
    _row("d", "X6 ⊂ P(1,1,2,3,5)", "X6 ∩ {x4=0}", "5/6", 5, 1, 25, 16),
    _row("e", "X6 ⊂ P(1,1,2,2,3)", "X6 ∩ {x3=0}", "2/3", 2, 1, 4, 4),
    _row("f", "X6 ⊂ P(1,1,1,2,3)", "X6 ∩ {x0=0}", "1/2", 1, 1, 1, 2),
    _row("g", "P(1,1,1,2)", "H4 ⊂ X", "4/5", 4, 2, 32, 21),
    _row("h", "X4 ⊂ P(1,1,1,2,2)", "X4 ∩ {x4=0}", "2/3", 2, 2, 8, 7),
    _row("i", "X4 ⊂ P(1,1,1,2,3)", "X4 ∩ {x4=0}", "3/4", 3, 2, 18, 13),
    _row("j", "X4 ⊂ P(1,1,1,1,2)", "X4 ∩ {x0=0}", "1/2", 1, 2, 2, 3),
    _row("k", "P^3", "H3 ⊂ X", "3/4", 3, 3, 27, 19),
    _row("l", "X3 ⊂ P(1,1,1,1,2)", "X3 ∩ {x4=0}", "2/3", 2, 3, 12, 10),
    _row("m", "X3 ⊂ P^4", "X3 ∩ {x0=0}", "1/2", 1, 3, 3, 4),
    _row("n", "X2 ⊂ P^4", "H2,2 ⊂ X2", "2/3", 2, 4, 16, 13),
    _row("o", "X2,2 ⊂ P^5", "X2,2 ∩ {x0=0}", "1/2", 1, 4, 4, 5),
    _row("p", "P^6 ∩ G(1,4)", "X ∩ {x0=0}", "1/2", 1, 5, 5, 6),
    _row("q", "X2 ⊂ P^4", "X2 ∩ {x0=0} ≅ P^1 × P^1", "1/3", "1/2", 8, 2, 4),
    _row("r", "P^3", "P^1 × P^1 ≅ H2 ⊂ X", "1/2", 1, 8, 8, 9),
    _row("s", "P^3", "{x0=0} ≅ P^2 ⊂ X", "1/4", "1/3", 9, 1, 3),
    _row("t", "P(1,1,1,2)", "{x3=0} ≅ P^2 ⊂ X", "2/5", "2/3", 9, 4, 6),
)


def _check_rho(rho: Fraction) -> Fraction:
    rho = Fraction(rho)
    if not 0 < rho < 1:
        raise ValueError("index out of range")
    return rho


def derive_d_n(rho: Number, K_squared: int) -> tuple[Fraction, Fraction]:
    rho = _check_rho(rho)
    if K_squared <= 0:
        raise ValueError("K^2 of a del Pezzo surface is positive")
    d = (rho / (rho - 1)) ** 2 * K_squared
    n = rho * K_squared / (2 * (rho - 1) ** 2) + 1
    return d, n


def corner_ledger(rho: Number, K_sharp_squared: int, mu_sum: int) -> Fraction:
    """d - 2n + 2 for a pair whose minimal model is a Q-Fano of index data rho.

    ``mu_sum`` counts the blown-up points where the section surface meets H
    with multiplicity one.
    """
    rho = _check_rho(rho)
    if mu_sum < 0:
        raise ValueError("mu_sum must be non-negative")
    return rho / (rho - 1) * K_sharp_squared + mu_sum


def get_row(label: str, rows: Optional[Sequence[FanoRow]] = None) -> FanoRow:
    for row in TABLE if rows is None else rows:
        if row.label == label:
            return row
    raise KeyError(f"no row labelled {label!r}")


@dataclass(frozen=True)
class RowMismatch:
    label: str
    field: str
    stored: Fraction
    derived: Fraction


@dataclass(frozen=True)
class TableReport:
    checked: int
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def verified(self) -> int:
        return self.checked - len({m.label for m in self.mismatches})


def verify_rows(rows: Iterable[FanoRow]) -> TableReport:
    checked = 0
    bad = []
    for row in rows:
        checked += 1
        d, n = derive_d_n(row.rho, row.K_squared)
        ratio = -row.rho / (row.rho - 1)
        for field, stored, derived in (("ratio", row.ratio, ratio), ("d", row.d, d), ("n", row.n, n)):
            if stored != derived:
                bad.append(RowMismatch(row.label, field, Fraction(stored), derived))
    return TableReport(checked, tuple(bad))


def verify_table(rows: Optional[Sequence[FanoRow]] = None) -> TableReport:
    return verify_rows(TABLE if rows is None else rows)


def tampered(label: str, **changes) -> tuple:
    """Copy of the table with one row altered, for negative controls."""
    return tuple(replace(r, **changes) if r.label == label else r for r in TABLE)


def write_csv(path: "str | PathLike[str]", rows: Optional[Sequence[FanoRow]] = None) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in TABLE if rows is None else rows:
            writer.writerow([r.label, r.ambient, r.section, r.rho.numerator,
                             r.rho.denominator, r.K_squared, r.d, r.n])


def read_csv(path: "str | PathLike[str]") -> list:
    """Inverse of :func:`write_csv`; the ratio column is recomputed from rho."""
    out = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            raise ValueError(f"unexpected CSV header {reader.fieldnames}")
        for rec in reader:
            rho = Fraction(int(rec["rho_num"]), int(rec["rho_den"]))
            out.append(FanoRow(rec["label"], rec["ambient"], rec["section"], rho,
                               -rho / (rho - 1), int(rec["K2"]), int(rec["d"]), int(rec["n"])))
    return out
