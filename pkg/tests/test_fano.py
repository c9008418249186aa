from fractions import Fraction

import pytest

from uniruled import fano
from uniruled.fano import corner_ledger, derive_d_n, get_row, tampered, verify_table


@pytest.mark.parametrize("rho, K2, expected", [
    (Fraction(3, 4), 3, (27, 19)),
    (Fraction(6, 7), 1, (36, 22)),
    (Fraction(1, 3), 8, (2, 4)),
])
def test_derive_d_n(rho, K2, expected):
    assert derive_d_n(rho, K2) == expected


@pytest.mark.parametrize("rho", [0, 1, Fraction(3, 2), Fraction(-1, 2)])
def test_derive_rejects_rho(rho):
    with pytest.raises(ValueError, match="index out of range"):
        derive_d_n(rho, 3)


def test_table_has_twenty_rows():
    assert [r.label for r in fano.TABLE] == list("abcdefghijklmnopqrst")


@pytest.mark.parametrize("row", fano.TABLE, ids=lambda r: r.label)
def test_every_row(row):
    assert derive_d_n(row.rho, row.K_squared) == (row.d, row.n)
    assert row.ratio == -row.rho / (row.rho - 1)
    assert corner_ledger(row.rho, row.K_squared, 0) == row.d - 2 * row.n + 2


def test_verify_table():
    report = verify_table()
    assert report.ok and report.checked == 20 and report.verified == 20


def test_single_row_g():
    r = get_row("g")
    assert (r.rho, r.K_squared, r.d, r.n) == (Fraction(4, 5), 2, 32, 21)
    assert fano.verify_rows([r]).ok


def test_tampered_row_detected():
    report = verify_table(tampered("g", d=33))
    assert not report.ok
    assert [(m.label, m.field, m.stored, m.derived) for m in report.mismatches] == [("g", "d", 33, 32)]
    assert report.verified == 19


@pytest.mark.parametrize("rho, K2, mu, expected", [
    (Fraction(1, 2), 8, 0, -8),   # row (r): d - 2n = mu - 10
    (Fraction(2, 5), 9, 0, -6),   # row (t): d - 2n = mu - 8
    (Fraction(3, 4), 3, 0, -9),   # row (k): 27 - 38 + 2
    (Fraction(1, 2), 8, 3, -5),
])
def test_corner_ledger(rho, K2, mu, expected):
    assert corner_ledger(rho, K2, mu) == expected


def test_corner_ledger_errors():
    with pytest.raises(ValueError):
        corner_ledger(Fraction(5, 4), 3, 0)
    with pytest.raises(ValueError):
        corner_ledger(Fraction(1, 2), 8, -1)


def test_csv_round_trip(tmp_path):
    path = tmp_path / "table.csv"
    fano.write_csv(path)
    header = path.read_text(encoding="utf-8").splitlines()[0]
    assert header == "label,ambient,section,rho_num,rho_den,K2,d,n"
    assert tuple(fano.read_csv(path)) == fano.TABLE


def test_unknown_row():
    with pytest.raises(KeyError):
        get_row("z")
