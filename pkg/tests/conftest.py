import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from waringrank import BinaryForm, CoordinateChange, Role


def random_rational(rng: random.Random, size: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        c = Fraction(rng.randint(-size, size), rng.randint(1, 4))
        if c or not nonzero:
            return c


def random_form(rng: random.Random, dmin: int, dmax: int, sparsity: float = 0.0) -> BinaryForm:
    """Random nonzero primal form; ``sparsity`` is the chance each coefficient is zeroed."""
    d = rng.randint(dmin, dmax)
    while True:
        coeffs = [Fraction(0) if rng.random() < sparsity else random_rational(rng) for _ in range(d + 1)]
        if any(coeffs):
            return BinaryForm.from_coeffs(coeffs)


def random_change(rng: random.Random) -> CoordinateChange:
    while True:
        entries = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4)]
        if entries[0] * entries[3] != entries[1] * entries[2]:
            return CoordinateChange(*entries)


@pytest.fixture
def rng():
    return random.Random(20260101)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def forms(draw, min_degree=1, max_degree=8, role=Role.PRIMAL, nonzero=True):
    d = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(rationals, min_size=d + 1, max_size=d + 1))
    if nonzero and not any(coeffs):
        coeffs[draw(st.integers(0, d))] = Fraction(1)
    return BinaryForm(d, tuple(coeffs), role)
