"""Real Waring rank: the cases that can be decided exactly, bounds otherwise.

Exact answers are given for d-th powers of a real linear form (rank 1),
for degree <= 2 (real and complex ranks agree) and for forms of degree
>= 3 splitting into real linear factors (rank d).  Everything else is
reported as the interval [complex rank, d].

Known values that need other tools are not computed here, e.g.
rk_R(x^3 + x y^2) = 2 and rk_R(l^k (x^2 + y^2)) = k + 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import upoly
from .apolarity import catalecticant, kernel_at
from .binomial import BinomialShape
from .errors import DomainError
from .forms import BinaryForm, Role
from .sylvester import waring_rank


class Kind(str, enum.Enum):
    EXACT = "exact"
    BOUNDS = "bounds"


class Reason(str, enum.Enum):
    DTH_POWER = "dth_power"
    SPLITS_OVER_R = "splits_over_R"
    LOW_DEGREE = "low_degree"
    BOUNDS_ONLY = "bounds_only"


@dataclass(frozen=True)
class RealRankReport:
    kind: Kind
    reason: Reason
    value: int | None = None
    lower: int | None = None
    upper: int | None = None

    def __post_init__(self):
        if self.kind is Kind.EXACT:
            assert self.value is not None and self.lower is None and self.upper is None
        else:
            assert self.value is None and self.lower is not None and self.lower <= self.upper


class SignClass(str, enum.Enum):
    ODD_ALPHA = "odd_alpha"
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class RealBinomialClass:
    sign_class: SignClass
    r: int
    s: int
    alpha: int

    def canonical_form(self) -> BinaryForm:
        """``x^r y^s (y^alpha + x^alpha)``, or with a minus sign for the ``minus`` class."""
        b = -1 if self.sign_class is SignClass.MINUS else 1
        return BinomialShape(self.r, self.s, self.alpha, 1, b).expand()


def sturm_sequence(p: Sequence) -> list[upoly.Poly]:
    """Sturm chain of ``p`` with each member replaced by its primitive part."""
    p = upoly.primitive(p)
    chain = [p, upoly.primitive(upoly.derivative(p))]
    while chain[-1]:
        chain.append(upoly.primitive([-c for c in upoly.rem(chain[-2], chain[-1])]))
    return chain[:-1]


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Sequence) -> int:
    """Number of distinct real roots of a nonzero rational polynomial."""
    p = upoly.strip(p)
    if not p:
        raise DomainError("the zero polynomial has infinitely many roots")
    if len(p) == 1:
        return 0
    chain = sturm_sequence(p)
    at_plus = [1 if q[-1] > 0 else -1 for q in chain]
    at_minus = [s * (-1) ** (len(q) - 1) for s, q in zip(at_plus, chain)]
    return _variations(at_minus) - _variations(at_plus)


def splits_over_reals(F: BinaryForm) -> bool:
    """True iff ``F`` is a product of real linear forms."""
    if F.is_zero():
        raise DomainError("the zero form")
    sqf = upoly.squarefree_part(F.dehomogenize())
    return count_real_roots(sqf) == upoly.degree(sqf)


def _real_power_base(F: BinaryForm) -> tuple[Fraction, Fraction] | None:
    """``(a, b)`` with ``F = c (a x + b y)^d`` if F is a power of a linear form."""
    d = F.degree
    if d == 0 or catalecticant(F, d - 1).rank() != 1:
        return None
    # F is a power; its degree-1 apolar form b X - a Y has rational, hence real, coefficients
    (v,) = kernel_at(F, 1)
    return v[0], -v[1]


def real_rank(F: BinaryForm) -> RealRankReport:
    if F.role is not Role.PRIMAL:
        raise DomainError("real_rank expects a primal form")
    if F.is_zero():
        raise DomainError("the zero form has no real rank")
    d = F.degree
    if d < 1:
        raise DomainError("real rank needs degree >= 1")
    if _real_power_base(F) is not None:
        return RealRankReport(Kind.EXACT, Reason.DTH_POWER, value=1)
    rank = waring_rank(F).rank
    if d <= 2:
        return RealRankReport(Kind.EXACT, Reason.LOW_DEGREE, value=rank)
    if splits_over_reals(F):
        return RealRankReport(Kind.EXACT, Reason.SPLITS_OVER_R, value=d)
    return RealRankReport(Kind.BOUNDS, Reason.BOUNDS_ONLY, lower=rank, upper=d)


def real_binomial_class(shape: BinomialShape) -> RealBinomialClass:
    """Real-coordinate class of ``x^r y^s (a y^alpha + b x^alpha)``."""
    if shape.alpha % 2:
        cls = SignClass.ODD_ALPHA
    else:
        cls = SignClass.PLUS if shape.a * shape.b > 0 else SignClass.MINUS
    return RealBinomialClass(cls, shape.r, shape.s, shape.alpha)
