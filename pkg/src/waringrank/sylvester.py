"""Waring rank of binary forms by Sylvester's algorithm."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .apolarity import ApolarPair, apolar_generators, complement_generator
from .errors import DomainError
from .forms import BinaryForm, Role, is_square_free


class Method(str, enum.Enum):
    SYLVESTER = "sylvester"
    CLOSED_FORM_BINOMIAL = "closed_form_binomial"
    MONOMIAL = "monomial"


@dataclass(frozen=True)
class RankCertificate:
    degree: int
    rank: int
    method: Method
    witness: ApolarPair | None = None
    g1_square_free: bool | None = None

    def __post_init__(self):
        if not 1 <= self.rank <= max(self.degree, 1):
            raise ValueError(f"rank {self.rank} out of range for degree {self.degree}")
        if self.witness is not None and self.g1_square_free is not None:
            d1 = self.witness.d1
            expected = d1 if self.g1_square_free else self.degree + 2 - d1
            if expected != self.rank:
                raise ValueError("certificate rank disagrees with its witness")


def _linear_witness(F: BinaryForm) -> ApolarPair:
    # F = a x + b y is killed by b X - a Y and by every quadric
    b, a = F.coeffs
    g1 = BinaryForm(1, (-a, b), Role.DUAL).normalized()
    quadrics = [[1 if k == i else 0 for k in range(3)] for i in range(3)]
    return ApolarPair(g1, complement_generator(g1, quadrics, 2))


def waring_rank(F: BinaryForm) -> RankCertificate:
    """Rank over the complex numbers from the apolar generators of ``F``."""
    if F.role is not Role.PRIMAL:
        raise DomainError("waring_rank expects a primal form")
    if F.is_zero():
        raise DomainError("the zero form has no Waring rank")
    d = F.degree
    if d == 0:
        raise DomainError("Waring rank is undefined for degree 0")
    if d == 1:
        return RankCertificate(1, 1, Method.SYLVESTER, _linear_witness(F), True)
    pair = apolar_generators(F)
    square_free = is_square_free(pair.g1)
    d1 = pair.d1
    if d1 == pair.d2:
        # both branches agree, so the choice of g1 inside the pencil is irrelevant
        assert d1 == d + 2 - d1
    rank = d1 if square_free else d + 2 - d1
    return RankCertificate(d, rank, Method.SYLVESTER, pair, square_free)


def generic_rank(d: int) -> int:
    """Rank of a general binary form of degree ``d``: ceil((d + 1) / 2)."""
    if d < 1:
        raise DomainError("generic rank needs degree >= 1")
    return (d + 2) // 2
