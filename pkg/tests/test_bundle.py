from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uniruled.bundle import (
    BundleContext, DivisorClass, check_identity_chi, check_veronese_bounds,
    invariants, triple_product,
)

P2xP1 = BundleContext(0, -2)
GRID = list(product(range(5), range(-8, 9), range(-8, 9)))


def test_G_cubed():
    assert BundleContext(0, -2).G_cubed == 0
    assert BundleContext(3, 5).G_cubed == 2 * (1 - 3) + 5


def test_basic_products():
    G, V = P2xP1.G, P2xP1.V
    assert triple_product(G, G, V) == 1
    assert triple_product(V, V, V) == 0
    assert triple_product(G, V, V) == 0


def test_sharp_polarisation_cubed():
    H = 2 * P2xP1.G + 2 * P2xP1.V
    assert triple_product(H, H, H) == 24


def test_context_mismatch():
    with pytest.raises(ValueError):
        triple_product(P2xP1.G, P2xP1.G, BundleContext(1, 0).V)
    with pytest.raises(ValueError):
        P2xP1.G + BundleContext(1, 0).V


def test_negative_genus_rejected():
    with pytest.raises(ValueError):
        BundleContext(-1, 0)


def test_invariants_sharp_a1():
    inv = invariants(P2xP1, 1)
    assert (inv.H_cubed, inv.k_degenerate, inv.chi_H, inv.n_expected) == (12, 3, 12, 11)


def test_invariants_a0_not_big():
    assert invariants(P2xP1, 0).H_cubed == 0


def test_invariants_genus_one():
    # closed forms at g=1, b=0, a=2: 24+0+0, 0+6+0, 0+12+0, 0+0+6
    inv = invariants(BundleContext(1, 0), 2)
    assert (inv.H_cubed, inv.k_degenerate, inv.chi_H, inv.c2_dot_H) == (24, 6, 12, 6)


@pytest.mark.parametrize("g, b, a", [(0, -2, 3), (0, 0, 0), (2, 7, -4)])
def test_identity_chi_examples(g, b, a):
    assert check_identity_chi(BundleContext(g, b), a)


def test_identity_chi_random_run():
    import random
    rng = random.Random(7)
    for _ in range(100):
        g, b, a = rng.randint(0, 5), rng.randint(-10, 10), rng.randint(-10, 10)
        assert check_identity_chi(BundleContext(g, b), a)


def test_grid_relations():
    for g, b, a in GRID:
        inv = invariants(BundleContext(g, b), a)
        assert inv.H_cubed == 4 * inv.k_degenerate
        assert inv.k_degenerate + inv.K_S_squared == 8 * (1 - g)
        assert inv.n_expected == inv.chi_H - 1


coeffs = st.fractions(min_value=-10, max_value=10, max_denominator=7)
contexts = st.builds(BundleContext, st.integers(0, 4), st.integers(-8, 8))


@given(contexts, st.lists(st.tuples(coeffs, coeffs), min_size=4, max_size=4), coeffs)
def test_triple_product_symmetric_and_linear(ctx, ab, c):
    D1, D2, D3, D4 = (DivisorClass(a, b, ctx) for a, b in ab)
    t = triple_product(D1, D2, D3)
    assert t == triple_product(D2, D1, D3) == triple_product(D3, D2, D1) == triple_product(D1, D3, D2)
    assert triple_product(c * D1 + D4, D2, D3) == c * t + triple_product(D4, D2, D3)


def test_veronese_bounds_sharp():
    a = 4
    r = check_veronese_bounds(12 * a, 6 * a + 5)
    assert r.bound_d_ok and r.d_equality
    assert r.k == 3 * a and r.k_ok and r.k_equality


def test_veronese_bounds_exceptional_pair():
    r = check_veronese_bounds(27, 19)
    assert not r.bound_d_ok and not r.d_equality
    assert r.k_lower_bound == 7


def test_veronese_bounds_boundary_and_explicit_k():
    r = check_veronese_bounds(20, 15, k=6)
    assert r.bound_d_ok and r.d_equality
    assert r.k_lower_bound == 5 and r.k_ok and not r.k_equality


def test_veronese_bounds_not_big():
    with pytest.raises(ValueError, match="H not big"):
        check_veronese_bounds(0, 4)
    with pytest.raises(ValueError, match="H not big"):
        check_veronese_bounds(Fraction(-1, 2), 4)
