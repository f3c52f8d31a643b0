"""Exact binary forms, the apolar (differentiation) action and coordinate changes.

Coefficients are stored densely: ``coeffs[i]`` is the coefficient of
``x**i * y**(d - i)`` (or ``X**i * Y**(d - i)`` for a dual form).  All
arithmetic is over :class:`~fractions.Fraction`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd as igcd
from typing import Iterable, Mapping, Sequence

from . import upoly
from .errors import DomainError


class Role(str, enum.Enum):
    PRIMAL = "primal"   # forms in x, y
    DUAL = "dual"       # differential operators in X, Y

    @property
    def variables(self) -> tuple[str, str]:
        return ("x", "y") if self is Role.PRIMAL else ("X", "Y")


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple[Fraction, ...]
    role: Role = Role.PRIMAL

    def __post_init__(self):
        if self.degree < 0:
            raise DomainError(f"negative degree {self.degree}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.degree + 1:
            raise DomainError(
                f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "role", Role(self.role))

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, role: Role = Role.PRIMAL) -> "BinaryForm":
        return cls(len(coeffs) - 1, tuple(coeffs), role)

    @classmethod
    def zero(cls, degree: int, role: Role = Role.PRIMAL) -> "BinaryForm":
        return cls(degree, (0,) * (degree + 1), role)

    @classmethod
    def monomial(cls, x_exp: int, y_exp: int, coeff=1, role: Role = Role.PRIMAL) -> "BinaryForm":
        d = x_exp + y_exp
        coeffs = [0] * (d + 1)
        coeffs[x_exp] = coeff
        return cls(d, tuple(coeffs), role)

    @classmethod
    def from_terms(cls, terms: Mapping[tuple[int, int], object], role: Role = Role.PRIMAL) -> "BinaryForm":
        """Build from ``{(x_exp, y_exp): coeff}``; all exponent pairs must share a degree."""
        degrees = {i + j for i, j in terms}
        if len(degrees) != 1:
            raise DomainError("terms are not homogeneous")
        d = degrees.pop()
        coeffs = [Fraction(0)] * (d + 1)
        for (i, _), c in terms.items():
            coeffs[i] += Fraction(c)
        return cls(d, tuple(coeffs), role)

    @classmethod
    def linear(cls, a, b, role: Role = Role.PRIMAL) -> "BinaryForm":
        """The linear form ``a*x + b*y``."""
        return cls(1, (b, a), role)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        """x-exponents (indices) carrying a nonzero coefficient."""
        return [i for i, c in enumerate(self.coeffs) if c]

    def terms(self) -> dict[tuple[int, int], Fraction]:
        d = self.degree
        return {(i, d - i): c for i, c in enumerate(self.coeffs) if c}

    def dehomogenize(self) -> upoly.Poly:
        """``F(u, 1)`` as an ascending univariate coefficient list."""
        return upoly.strip(self.coeffs)

    def __call__(self, a, b):
        d = self.degree
        return sum(c * a**i * b ** (d - i) for i, c in enumerate(self.coeffs) if c)

    def __str__(self) -> str:
        from .parser import render

        return render(self)

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "BinaryForm") -> None:
        if not isinstance(other, BinaryForm):
            raise TypeError(f"expected BinaryForm, got {type(other).__name__}")
        if other.role is not self.role:
            raise DomainError(f"cannot combine {self.role.value} and {other.role.value} forms")

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        self._check_compatible(other)
        if other.degree != self.degree:
            raise DomainError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.role)

    def __neg__(self) -> "BinaryForm":
        return self.scale(-1)

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __mul__(self, other) -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        self._check_compatible(other)
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return BinaryForm(self.degree + other.degree, tuple(out), self.role)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BinaryForm":
        result = BinaryForm(0, (1,), self.role)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> "BinaryForm":
        c = Fraction(c)
        return BinaryForm(self.degree, tuple(c * a for a in self.coeffs), self.role)

    def swap_variables(self) -> "BinaryForm":
        """The form with x and y exchanged."""
        return BinaryForm(self.degree, tuple(reversed(self.coeffs)), self.role)

    def normalized(self) -> "BinaryForm":
        """Primitive integer coefficients, positive coefficient at the highest x-power."""
        if self.is_zero():
            raise DomainError("cannot normalize the zero form")
        den = reduce(lambda a, b: a * b // igcd(a, b), (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        content = reduce(igcd, (abs(c) for c in ints if c))
        if ints[max(self.support())] < 0:
            content = -content
        return BinaryForm(self.degree, tuple(Fraction(c // content) for c in ints), self.role)


def falling_factorial(m: int, n: int) -> int:
    """``m!/(m-n)!`` when ``m >= n >= 0``, else 0."""
    if not (m >= n >= 0):
        return 0
    out = 1
    for k in range(m - n + 1, m + 1):
        out *= k
    return out


def apolar_apply(g: BinaryForm, F: BinaryForm) -> BinaryForm:
    """``g(d/dx, d/dy) F`` for a dual form ``g`` and a primal form ``F``."""
    if g.role is not Role.DUAL or F.role is not Role.PRIMAL:
        raise DomainError("apolar_apply expects a dual operator and a primal form")
    dg, d = g.degree, F.degree
    if dg > d:
        raise DomainError(f"operator degree {dg} exceeds form degree {d}")
    out = [Fraction(0)] * (d - dg + 1)
    for j, gj in enumerate(g.coeffs):
        if not gj:
            continue
        # X^j Y^(dg-j) o x^k y^(d-k) = (k)_j (d-k)_(dg-j) x^(k-j) y^(d-k-dg+j)
        for k in range(j, j + d - dg + 1):
            ck = F.coeffs[k]
            if ck:
                out[k - j] += gj * ck * falling_factorial(k, j) * falling_factorial(d - k, dg - j)
    return BinaryForm(d - dg, tuple(out), Role.PRIMAL)


def is_square_free(g: BinaryForm) -> bool:
    """True iff ``g`` has no repeated linear factor over the complex numbers."""
    if g.is_zero():
        raise DomainError("square-freeness of the zero form")
    if g.degree < 1:
        raise DomainError("square-freeness needs degree >= 1")
    p = g.dehomogenize()
    # y (resp. Y) divides g once per vanishing top coefficient
    if g.degree - upoly.degree(p) > 1:
        return False
    return upoly.degree(upoly.gcd(p, upoly.derivative(p))) == 0


@dataclass(frozen=True)
class CoordinateChange:
    """Substitution ``(x, y) -> (m00*x + m01*y, m10*x + m11*y)``."""

    m00: Fraction
    m01: Fraction
    m10: Fraction
    m11: Fraction

    def __post_init__(self):
        for name in ("m00", "m01", "m10", "m11"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.determinant == 0:
            raise DomainError("singular coordinate change")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "CoordinateChange":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "CoordinateChange":
        return cls(1, 0, 0, 1)

    @property
    def determinant(self) -> Fraction:
        return self.m00 * self.m11 - self.m01 * self.m10

    def inverse(self) -> "CoordinateChange":
        det = self.determinant
        return CoordinateChange(self.m11 / det, -self.m01 / det, -self.m10 / det, self.m00 / det)


def _linear_powers(a: Fraction, b: Fraction, n: int) -> list[list[Fraction]]:
    """Coefficient vectors of ``(a*x + b*y)**k`` for k = 0..n."""
    return [[comb(k, i) * a**i * b ** (k - i) for i in range(k + 1)] for k in range(n + 1)]


def change_coords(F: BinaryForm, M: CoordinateChange) -> BinaryForm:
    """Expand ``F(m00*x + m01*y, m10*x + m11*y)`` exactly."""
    if not isinstance(M, CoordinateChange):
        M = CoordinateChange.from_rows(M)
    d = F.degree
    xs = _linear_powers(M.m00, M.m01, d)
    ys = _linear_powers(M.m10, M.m11, d)
    out = [Fraction(0)] * (d + 1)
    for i, c in enumerate(F.coeffs):
        if not c:
            continue
        px, py = xs[i], ys[d - i]
        for u, pu in enumerate(px):
            if pu:
                for v, pv in enumerate(py):
                    out[u + v] += c * pu * pv
    return BinaryForm(d, tuple(out), F.role)


def product_of_linear(factors: Iterable[tuple], role: Role = Role.PRIMAL) -> BinaryForm:
    """Product of linear forms ``a*x + b*y`` given as ``(a, b)`` pairs."""
    out = BinaryForm(0, (1,), role)
    for a, b in factors:
        out = out * BinaryForm.linear(a, b, role)
    return out
