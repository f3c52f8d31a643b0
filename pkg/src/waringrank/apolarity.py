"""Catalecticant matrices, the apolar ideal of a binary form and its Hilbert function.

For a binary form ``F`` of degree ``d`` the ideal of dual forms annihilating
``F`` is generated by two forms whose degrees add up to ``d + 2``.  The
Hilbert function of the quotient is then ``min(i + 1, d1, d - i + 1)``, so
the smaller generator degree is the rank of the middle catalecticant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

from . import linalg
from .errors import DomainError
from .forms import BinaryForm, Role, falling_factorial
from .linalg import ExactMatrix


@dataclass(frozen=True)
class ApolarPair:
    g1: BinaryForm
    g2: BinaryForm

    @property
    def d1(self) -> int:
        return self.g1.degree

    @property
    def d2(self) -> int:
        return self.g2.degree


@dataclass(frozen=True)
class HilbertFunctionTable:
    degree: int
    values: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.values[i]


def _require_nonzero(F: BinaryForm) -> None:
    if F.role is not Role.PRIMAL:
        raise DomainError("expected a primal form")
    if F.is_zero():
        raise DomainError("the zero form has no apolar ideal of interest")


def catalecticant(F: BinaryForm, i: int) -> ExactMatrix:
    """Matrix of ``g -> g o F`` on dual forms of degree ``i``.

    Column ``j`` holds the coefficients of ``X^j Y^(i-j) o F``; row ``m`` the
    coefficient of ``x^m y^(d-i-m)`` in the result.
    """
    d = F.degree
    if not 0 <= i <= d:
        raise DomainError(f"catalecticant degree {i} outside 0..{d}")
    rows = []
    for m in range(d - i + 1):
        row = []
        for j in range(i + 1):
            k = m + j
            row.append(F.coeffs[k] * falling_factorial(k, j) * falling_factorial(d - k, i - j))
        rows.append(row)
    return ExactMatrix.from_rows(rows, cols=i + 1)


def _hankel(F: BinaryForm, i: int) -> list[list[int]]:
    """Integer Hankel matrix with the same kernel and rank as ``catalecticant(F, i)``.

    Row ``m`` of the catalecticant is ``h[m + j] / (m! (d-i-m)!)`` with
    ``h[k] = c[k] k! (d-k)!``; dropping the row scale and clearing the common
    denominator of the coefficients gives integers.
    """
    d = F.degree
    den = lcm(*(c.denominator for c in F.coeffs))
    h = [int(c * den) * factorial(k) * factorial(d - k) for k, c in enumerate(F.coeffs)]
    return [h[m:m + i + 1] for m in range(max(d - i + 1, 0))]


def kernel_at(F: BinaryForm, i: int) -> list[list[Fraction]]:
    """Basis of the degree-``i`` piece of the apolar ideal (any ``i >= 0``)."""
    return linalg.kernel(_hankel(F, i), i + 1)


def hilbert_function(F: BinaryForm) -> HilbertFunctionTable:
    _require_nonzero(F)
    d = F.degree
    return HilbertFunctionTable(d, tuple(linalg.rank(_hankel(F, i), i + 1) for i in range(d + 1)))


def _initial_degree(F: BinaryForm) -> int:
    d = F.degree
    return linalg.rank(_hankel(F, d // 2), d // 2 + 1)


def _dual(v, degree: int) -> BinaryForm:
    return BinaryForm(degree, tuple(v), Role.DUAL)


def min_apolar_form(F: BinaryForm) -> tuple[int, BinaryForm]:
    """Initial degree of the apolar ideal and a normalized form of that degree in it.

    If the kernel is two-dimensional (equal generator degrees) the first row of
    its reduced echelon basis is returned, i.e. the vector whose entry at the
    higher pivot index is zero.
    """
    _require_nonzero(F)
    d1 = _initial_degree(F)
    basis = kernel_at(F, d1)
    if len(basis) > 1:
        basis, _ = linalg.rref(basis, d1 + 1)
    return d1, _dual(basis[0], d1).normalized()


def _multiples(g: BinaryForm, n: int) -> list[list[Fraction]]:
    """Coefficient vectors of ``g * X^k Y^(n-k)`` for k = 0..n."""
    width = g.degree + n + 1
    out = []
    for k in range(n + 1):
        v = [Fraction(0)] * width
        for i, c in enumerate(g.coeffs):
            v[i + k] = c
        out.append(v)
    return out


def complement_generator(g1: BinaryForm, candidates: list, degree: int) -> BinaryForm:
    """First candidate not in ``g1 * T_(degree - d1)``, reduced modulo that subspace."""
    ech, piv = linalg.rref(_multiples(g1, degree - g1.degree), degree + 1)
    for v in candidates:
        rest = linalg.reduce_against(v, ech, piv)
        if any(rest):
            return _dual(rest, degree).normalized()
    raise DomainError("no generator found outside the multiples of g1")


def apolar_generators(F: BinaryForm) -> ApolarPair:
    """The two generators ``(g1, g2)`` of the apolar ideal, ``deg g1 <= deg g2``."""
    _require_nonzero(F)
    d = F.degree
    if d < 1:
        raise DomainError("apolar generators need degree >= 1")
    d1 = _initial_degree(F)
    d2 = d + 2 - d1
    basis = kernel_at(F, d1)
    if d1 == d2:
        assert len(basis) == 2, "equal generator degrees force a 2-dimensional kernel"
        ech, _ = linalg.rref(basis, d1 + 1)
        return ApolarPair(_dual(ech[0], d1).normalized(), _dual(ech[1], d2).normalized())
    assert len(basis) == 1
    g1 = _dual(basis[0], d1).normalized()
    g2 = complement_generator(g1, kernel_at(F, d2), d2)
    return ApolarPair(g1, g2)
