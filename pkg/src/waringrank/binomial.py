"""Closed-form Waring rank of binary binomials and monomials.

A binomial is written ``a x^r y^(s+alpha) + b x^(r+alpha) y^s`` with
``r <= s`` (after exchanging x and y if needed).  Its rank depends only on
``(r, s, alpha)`` through ``delta = r + alpha - s`` and the remainder ``j``
of ``r`` modulo ``alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, NotABinomial
from .forms import BinaryForm
from .sylvester import Method, RankCertificate


@dataclass(frozen=True)
class BinomialShape:
    r: int
    s: int
    alpha: int
    a: Fraction = Fraction(1)
    b: Fraction = Fraction(1)
    swapped: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not 0 <= self.r <= self.s:
            raise DomainError(f"binomial shape needs 0 <= r <= s, got r={self.r}, s={self.s}")
        if self.alpha < 1:
            raise DomainError(f"binomial shape needs alpha >= 1, got {self.alpha}")
        if self.a == 0 or self.b == 0:
            raise DomainError("binomial coefficients must be nonzero")

    @classmethod
    def from_exponents(cls, r: int, s: int, alpha: int, a=1, b=1) -> "BinomialShape":
        """Shape of ``x^r y^s (a y^alpha + b x^alpha)`` for any ``r, s >= 0``."""
        if r < 0 or s < 0:
            raise DomainError("exponents must be nonnegative")
        if r <= s:
            return cls(r, s, alpha, a, b, False)
        return cls(s, r, alpha, b, a, True)

    @property
    def degree(self) -> int:
        return self.r + self.s + self.alpha

    @property
    def delta(self) -> int:
        return self.r + self.alpha - self.s

    @property
    def q(self) -> int:
        return self.r // self.alpha

    @property
    def j(self) -> int:
        return self.r % self.alpha

    def expand(self) -> BinaryForm:
        """The binomial as a form, with the original variable order restored."""
        F = BinaryForm.from_terms({
            (self.r, self.s + self.alpha): self.a,
            (self.r + self.alpha, self.s): self.b,
        })
        return F.swap_variables() if self.swapped else F


def normalize_binomial(F: BinaryForm) -> BinomialShape:
    support = F.support()
    if len(support) != 2:
        raise NotABinomial(f"expected exactly two monomials, found {len(support)}")
    lo, hi = support
    d = F.degree
    r, alpha, s = lo, hi - lo, d - hi
    a, b = F.coeffs[lo], F.coeffs[hi]
    if r <= s:
        return BinomialShape(r, s, alpha, a, b, False)
    # exchanging x and y turns x^lo y^(d-lo) into x^(d-lo) y^lo
    return BinomialShape(s, r, alpha, b, a, True)


def table_row(r: int, s: int, alpha: int) -> str:
    """Name of the rank-table row that applies to ``(r, s, alpha)``."""
    delta = r + alpha - s
    j = r % alpha
    if delta <= 0:
        return "delta<=0"
    matches = [
        name for name, cond in (
            ("j=0,r=s,alpha>1", j == 0 and r == s and alpha > 1),
            ("j=delta", j == delta),
            ("j>delta", j > delta),
        ) if cond
    ]
    assert len(matches) <= 1, f"overlapping rank-table rows {matches} for {(r, s, alpha)}"
    return matches[0] if matches else "otherwise"


def rank_from_table(r: int, s: int, alpha: int) -> int:
    row = table_row(r, s, alpha)
    j = r % alpha
    return {
        "delta<=0": s + 1,
        "j=0,r=s,alpha>1": s + 2,
        "j=delta": s + 1,
        "j>delta": r + alpha + 1,
        "otherwise": r + alpha - j,
    }[row]


def binomial_rank(shape: BinomialShape) -> RankCertificate:
    rank = rank_from_table(shape.r, shape.s, shape.alpha)
    return RankCertificate(shape.degree, rank, Method.CLOSED_FORM_BINOMIAL)


def monomial_rank(a_exp: int, b_exp: int) -> RankCertificate:
    """Rank of ``x^a_exp y^b_exp``."""
    if a_exp < 0 or b_exp < 0:
        raise DomainError("exponents must be nonnegative")
    if a_exp + b_exp < 1:
        raise DomainError("the constant monomial has no Waring rank")
    lo, hi = sorted((a_exp, b_exp))
    rank = 1 if lo == 0 else hi + 1
    return RankCertificate(a_exp + b_exp, rank, Method.MONOMIAL)
