"""Dense univariate polynomials over the rationals.

A polynomial is a list of :class:`~fractions.Fraction` in ascending order,
``p[i]`` being the coefficient of ``u**i``.  The zero polynomial is ``[]``;
every function here returns stripped lists (no trailing zeros).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from typing import Iterable, List, Sequence

from .errors import DomainError

Poly = List[Fraction]


def strip(p: Iterable) -> Poly:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Sequence) -> int:
    """Degree of ``p``; -1 for the zero polynomial."""
    return len(strip(p)) - 1


def derivative(p: Sequence) -> Poly:
    return strip(i * c for i, c in enumerate(p) if i > 0)


def monic(p: Sequence) -> Poly:
    p = strip(p)
    if not p:
        return p
    lc = p[-1]
    return [c / lc for c in p]


def divmod_poly(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    """Quotient and remainder of ``p`` by ``q``."""
    p, q = strip(p), strip(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = len(q) - 1
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    lc = q[-1]
    while len(rem) - 1 >= dq and rem:
        shift = len(rem) - 1 - dq
        c = rem[-1] / lc
        quot[shift] = c
        for i, qc in enumerate(q):
            rem[shift + i] -= c * qc
        rem = strip(rem)
    return strip(quot), rem


def rem(p: Sequence, q: Sequence) -> Poly:
    return divmod_poly(p, q)[1]


def gcd(p: Sequence, q: Sequence) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    p, q = strip(p), strip(q)
    if not p and not q:
        raise DomainError("gcd of two zero polynomials is undefined")
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def primitive(p: Sequence) -> Poly:
    """Positive rational multiple of ``p`` with coprime integer coefficients.

    The scale factor is positive, so signs (and Sturm sign variations) are kept.
    """
    p = strip(p)
    if not p:
        return p
    den = reduce(lambda a, b: a * b // igcd(a, b), (c.denominator for c in p), 1)
    ints = [int(c * den) for c in p]
    content = reduce(igcd, (abs(c) for c in ints))
    return [Fraction(c // content) for c in ints]


def squarefree_part(p: Sequence) -> Poly:
    """``p / gcd(p, p')`` made monic: same roots, each with multiplicity one."""
    p = strip(p)
    if not p:
        raise DomainError("square-free part of the zero polynomial")
    if len(p) == 1:
        return [Fraction(1)]
    quot, r = divmod_poly(p, gcd(p, derivative(p)))
    assert not r
    return monic(quot)


def evaluate(p: Sequence, u):
    acc = 0
    for c in reversed(p):
        acc = acc * u + c
    return acc
