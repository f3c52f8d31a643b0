from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from waringrank import (
    BinaryForm,
    CoordinateChange,
    DomainError,
    Role,
    apolar_apply,
    change_coords,
    falling_factorial,
    is_square_free,
)
from waringrank.forms import product_of_linear
from waringrank import upoly

import oracles
from conftest import forms, random_change, random_form

P, D = Role.PRIMAL, Role.DUAL


def mono(i, j, c=1, role=P):
    return BinaryForm.monomial(i, j, c, role)


def test_apolar_apply_direct_derivative():
    assert apolar_apply(mono(1, 0, role=D), mono(2, 0)) == BinaryForm.monomial(1, 0, 2)


@pytest.mark.parametrize("r,s,alpha", [(1, 3, 2), (0, 2, 1), (2, 6, 3), (0, 1, 1)])
def test_high_x_power_annihilates_binomial(r, s, alpha):
    F = BinaryForm.from_terms({(r, s + alpha): Fraction(3, 7), (r + alpha, s): -5})
    g = mono(r + alpha + 1, 0, role=D)
    assert apolar_apply(g, F).is_zero()


def test_laplacian_kills_hyperbola():
    g = mono(2, 0, role=D) + mono(0, 2, role=D)
    F = mono(2, 0) - mono(0, 2)
    out = apolar_apply(g, F)
    assert out.degree == 0 and out.is_zero()


def test_apolar_apply_rejects_bad_input():
    with pytest.raises(DomainError):
        apolar_apply(mono(3, 0, role=D), mono(2, 0))
    with pytest.raises(DomainError):
        apolar_apply(mono(1, 0), mono(2, 0))


@pytest.mark.parametrize("m,n,expected", [(5, 2, 20), (2, 3, 0), (4, 0, 1), (0, 0, 1), (3, -1, 0)])
def test_falling_factorial(m, n, expected):
    assert falling_factorial(m, n) == expected


def test_square_free_examples():
    assert not is_square_free(mono(5, 0, role=D))
    # X^(s+alpha+1) + (-1)^(q+1) Y^(s+alpha+1) for a few exponents and both signs
    for n in (2, 5, 8):
        for sign in (1, -1):
            assert is_square_free(mono(n, 0, role=D) + mono(0, n, sign, role=D))
    xy_xmy = product_of_linear([(1, 0), (0, 1), (1, -1)], D)
    assert is_square_free(xy_xmy)


def test_square_free_multiplicity_of_y():
    assert is_square_free(mono(1, 1, role=D))
    assert not is_square_free(mono(1, 2, role=D))
    assert not is_square_free(product_of_linear([(1, 1), (0, 1), (0, 2)], D))


def test_square_free_rejects_degenerate():
    with pytest.raises(DomainError):
        is_square_free(BinaryForm.zero(3, D))
    with pytest.raises(DomainError):
        is_square_free(BinaryForm(0, (2,), D))


def test_change_coords_examples():
    F = mono(2, 0)
    assert change_coords(F, CoordinateChange.identity()) == F
    shear = CoordinateChange(1, 1, 0, 1)
    assert change_coords(F, shear) == BinaryForm.from_coeffs([1, 2, 1])
    swap = CoordinateChange(0, 1, 1, 0)
    assert change_coords(mono(2, 3), swap) == mono(3, 2)


def test_singular_change_rejected():
    with pytest.raises(DomainError):
        CoordinateChange(1, 2, 2, 4)


@pytest.mark.parametrize("p,q,expected", [
    ([-1, 0, 1], [-1, 1], [-1, 1]),
    ([0, 0, 0, 1], [0, 0, 1], [0, 0, 1]),
    ([1, 0, 1], [-1, 0, 1], [1]),
])
def test_gcd_examples(p, q, expected):
    assert upoly.gcd(p, q) == [Fraction(c) for c in expected]


def test_gcd_of_zeros_is_an_error():
    with pytest.raises(DomainError):
        upoly.gcd([], [0])


@settings(max_examples=60, deadline=None)
@given(st.data(), st.integers(1, 7), st.fractions(-5, 5, max_denominator=6))
def test_apolar_apply_is_bilinear(data, d, c):
    F1 = data.draw(forms(min_degree=d, max_degree=d))
    F2 = data.draw(forms(min_degree=d, max_degree=d))
    k = data.draw(st.integers(0, d))
    g1 = data.draw(forms(min_degree=k, max_degree=k, role=D))
    g2 = data.draw(forms(min_degree=k, max_degree=k, role=D))
    assert apolar_apply(g1, F1 + F2.scale(c)) == apolar_apply(g1, F1) + apolar_apply(g1, F2).scale(c)
    assert apolar_apply(g1 + g2.scale(c), F1) == apolar_apply(g1, F1) + apolar_apply(g2, F1).scale(c)


@settings(max_examples=60, deadline=None)
@given(forms(min_degree=4, max_degree=9), forms(min_degree=0, max_degree=2, role=D),
       forms(min_degree=0, max_degree=2, role=D))
def test_apolar_apply_composes(F, g, h):
    assert apolar_apply(g * h, F) == apolar_apply(g, apolar_apply(h, F))


@settings(max_examples=40, deadline=None)
@given(forms(min_degree=0, max_degree=6, nonzero=False), forms(min_degree=0, max_degree=3, role=D, nonzero=False))
def test_apolar_apply_matches_sympy_differentiation(F, g):
    if g.degree > F.degree:
        return
    assert apolar_apply(g, F) == oracles.apply_by_differentiation(g, F)


def test_change_coords_round_trip(rng):
    for _ in range(30):
        F = random_form(rng, 1, 10)
        M = random_change(rng)
        assert change_coords(change_coords(F, M), M.inverse()) == F


def test_change_coords_matches_sympy(rng):
    for _ in range(10):
        F = random_form(rng, 1, 7)
        M = random_change(rng)
        expr = oracles.to_sympy(F).subs(
            {oracles.x: M.m00 * oracles.x + M.m01 * oracles.y, oracles.y: M.m10 * oracles.x + M.m11 * oracles.y},
            simultaneous=True,
        )
        assert change_coords(F, M) == oracles.from_sympy(expr, F.degree)


def test_square_free_products_of_distinct_lines(rng):
    for _ in range(40):
        k = rng.randint(1, 8)
        points = set()
        while len(points) < k:
            a, b = rng.randint(-6, 6), rng.randint(-6, 6)
            if (a, b) == (0, 0):
                continue
            # reduce to a canonical representative of the projective point
            f = Fraction(a, b) if b else None
            points.add(f)
        lines = [(1, 0) if f is None else (f, 1) for f in points]
        g = product_of_linear(lines, D)
        assert is_square_free(g)
        assert not is_square_free(g * BinaryForm.linear(*lines[rng.randrange(k)], D))


@settings(max_examples=60, deadline=None)
@given(forms(min_degree=1, max_degree=7, role=D))
def test_square_free_matches_sympy_factorization(g):
    assert is_square_free(g) == oracles.is_square_free(g)


def test_form_arithmetic_role_checks():
    with pytest.raises(DomainError):
        mono(1, 0) + mono(1, 0, role=D)
    with pytest.raises(DomainError):
        BinaryForm(2, (1, 2))


def test_normalized_is_primitive_with_positive_leading():
    g = BinaryForm(2, (Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 6)), D).normalized()
    assert g.coeffs == (3, -2, 1)
