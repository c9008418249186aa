"""Acceptance criteria 1-9; each prints one PASS/FAIL line (run with -s to see them)."""

import time

import pytest
import sympy

from uniruled import acceptance, fano
from uniruled.cli import main


@pytest.mark.parametrize("number", [n for n, *_ in acceptance.CHECKS])
def test_criterion(number):
    result = acceptance.run_check(number)
    print(result.line())
    assert result.passed, result.detail


def test_c2_splitting_oracle_against_sympy():
    # c(T) of P^2 x P^1 computed again with sympy in Q[h, f]/(h^3, f^2)
    h, f, a = sympy.symbols("h f a")
    c = sympy.expand((1 + h) ** 3 * (1 + f) ** 2)
    c2 = sum(term for term in c.as_ordered_terms() if sympy.Poly(term, h, f).total_degree() == 2)
    prod = sympy.Poly(sympy.expand(c2 * (2 * h + a * f)), h, f)
    assert sympy.expand(prod.coeff_monomial(h ** 2 * f)) == 3 * a + 12
    for k in range(-3, 8):
        assert acceptance.splitting_c2_dot_H(k) == 3 * k + 12


def test_criterion_9_selftest(capsys):
    start = time.perf_counter()
    code = main(["selftest"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    ok = code == 0 and elapsed < 10.0 and out.count("[PASS]") == 8
    print(f"[{'PASS' if ok else 'FAIL'}] 9. selftest end-to-end: exit {code} in {elapsed:.2f} s")
    assert ok, out


def test_selftest_detects_corrupted_table(monkeypatch, capsys):
    monkeypatch.setattr(fano, "TABLE", fano.tampered("k", n=20))
    assert main(["selftest"]) == 2
    out = capsys.readouterr().out
    assert "[FAIL] 1." in out and "[FAIL] 8." in out
