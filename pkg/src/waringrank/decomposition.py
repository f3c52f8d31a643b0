"""Explicit Waring decompositions ``F = sum c_i (a_i x + b_i y)^d``.

A square-free apolar form ``h`` of degree ``rank`` is found exactly; its
projective roots ``[a_i : b_i]`` give the linear forms and the scalars come
from a least-squares solve at the requested binary precision.  Numerics use a
private :class:`mpmath.MPContext` per call, so no global precision is touched.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

import mpmath

from .apolarity import apolar_generators
from .errors import ConvergenceError, DomainError, SearchFailed
from .forms import BinaryForm, Role, apolar_apply, is_square_free
from .sylvester import waring_rank

DEFAULT_PRECISION = 128
DEFAULT_SEED = 0
DEFAULT_BUDGET = 64


@dataclass(frozen=True)
class WaringDecomposition:
    terms: tuple[tuple[mpmath.mpc, tuple[mpmath.mpc, mpmath.mpc]], ...]
    precision_bits: int
    residual: mpmath.mpf
    annihilator: BinaryForm

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def points(self) -> list[tuple[mpmath.mpc, mpmath.mpc]]:
        return [p for _, p in self.terms]


def _random_dual(rng: random.Random, degree: int, spread: int) -> BinaryForm:
    return BinaryForm(degree, tuple(rng.randint(-spread, spread) for _ in range(degree + 1)), Role.DUAL)


def squarefree_annihilator(F: BinaryForm, rank: int, seed: int = DEFAULT_SEED,
                           budget: int = DEFAULT_BUDGET) -> BinaryForm:
    """A square-free dual form of degree ``rank`` killing ``F``.

    Either ``g1`` itself or ``g2 + m g1`` for a random ``m`` of degree
    ``d2 - d1`` with small integer coefficients.
    """
    if F.degree == 1:
        b, a = F.coeffs
        return BinaryForm(1, (-a, b), Role.DUAL).normalized()
    pair = apolar_generators(F)
    g1, g2 = pair.g1, pair.g2
    if rank == pair.d1 and is_square_free(g1):
        return g1
    if rank != pair.d2:
        raise DomainError(f"rank {rank} matches neither generator degree {pair.d1}, {pair.d2}")
    rng = random.Random(seed)
    shift = pair.d2 - pair.d1
    for attempt in range(budget):
        m = _random_dual(rng, shift, 2 + attempt // 8)
        h = g2 + m * g1
        if not h.is_zero() and is_square_free(h):
            return h.normalized()
    raise SearchFailed(f"no square-free element of the pencil after {budget} samples")


def _normalize_point(ctx, a, b) -> tuple:
    """Scale ``[a : b]`` so the larger entry becomes exactly 1."""
    if abs(a) >= abs(b):
        return ctx.mpc(1), ctx.mpc(b / a)
    return ctx.mpc(a / b), ctx.mpc(1)


def _newton_polish(ctx, coeffs, root, steps: int = 8):
    # coeffs ascending; a couple of steps double the correct bits each time
    for _ in range(steps):
        val = ctx.polyval(coeffs[::-1], root, derivative=True)
        p, dp = val
        if dp == 0 or p == 0:
            break
        step = p / dp
        root -= step
        if abs(step) <= ctx.eps * abs(root):
            break
    return root


def projective_roots(h: BinaryForm, precision_bits: int = DEFAULT_PRECISION) -> list[tuple]:
    """The ``deg h`` points ``[a : b]`` with ``h(a, b) = 0``, as ``(mpc, mpc)`` pairs."""
    if h.role is not Role.DUAL:
        raise DomainError("projective_roots expects a dual form")
    if h.degree < 1:
        raise DomainError("projective_roots needs degree >= 1")
    if not is_square_free(h):
        raise DomainError("projective_roots needs a square-free form")
    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    points = []
    p = h.dehomogenize()
    if h.coeffs[-1] == 0:
        points.append((ctx.mpc(1), ctx.mpc(0)))
    if len(p) > 1:
        coeffs = [ctx.mpf(c.numerator) / c.denominator for c in p]
        guard = max(32, precision_bits // 4)
        try:
            roots = ctx.polyroots(coeffs[::-1], maxsteps=200 + 20 * len(p), extraprec=guard)
        except ctx.NoConvergence as exc:
            raise ConvergenceError(f"root finder did not converge: {exc}") from exc
        for u in roots:
            u = _newton_polish(ctx, coeffs, ctx.mpc(u))
            points.append(_normalize_point(ctx, u, ctx.mpc(1)))
    norm = max(abs(c) for c in h.coeffs)
    tol = ctx.ldexp(ctx.mpf(1), -(precision_bits // 2)) * (ctx.mpf(norm.numerator) / norm.denominator)
    for a, b in points:
        val = ctx.fsum(ctx.mpf(c.numerator) / c.denominator * a**i * b ** (h.degree - i)
                       for i, c in enumerate(h.coeffs) if c)
        if abs(val) > tol:
            raise ConvergenceError(f"root [{a} : {b}] has residual {ctx.nstr(abs(val), 5)}")
    points.sort(key=lambda pt: (float(ctx.re(pt[0])), float(ctx.im(pt[0])),
                                float(ctx.re(pt[1])), float(ctx.im(pt[1]))))
    return points


def _lstsq(ctx, A, b) -> list:
    """Complex least squares by Gram-Schmidt QR with one reorthogonalization pass.

    ``mpmath.qr_solve`` uses a transpose rather than a conjugate transpose and
    fails on complex Vandermonde systems.
    """
    rows, cols = A.rows, A.cols
    Q = [[ctx.mpc(A[i, k]) for i in range(rows)] for k in range(cols)]
    R = [[ctx.mpc(0)] * cols for _ in range(cols)]
    for k in range(cols):
        v = Q[k]
        for _ in range(2):
            for i in range(k):
                c = ctx.fsum(ctx.conj(qi) * vi for qi, vi in zip(Q[i], v))
                R[i][k] += c
                v = [vi - c * qi for vi, qi in zip(v, Q[i])]
        nrm = ctx.sqrt(ctx.fsum(abs(vi) ** 2 for vi in v))
        if nrm == 0:
            raise ConvergenceError("rank-deficient Vandermonde system")
        R[k][k] = ctx.mpc(nrm)
        Q[k] = [vi / nrm for vi in v]
    qb = [ctx.fsum(ctx.conj(qi) * bi for qi, bi in zip(Q[k], b)) for k in range(cols)]
    x = [ctx.mpc(0)] * cols
    for k in reversed(range(cols)):
        x[k] = (qb[k] - ctx.fsum(R[k][i] * x[i] for i in range(k + 1, cols))) / R[k][k]
    return x


def decompose(F: BinaryForm, precision_bits: int = DEFAULT_PRECISION, seed: int = DEFAULT_SEED,
              budget: int = DEFAULT_BUDGET) -> WaringDecomposition:
    """Minimal-length decomposition of ``F`` with relative residual <= 2^(-p/2)."""
    rank = waring_rank(F).rank
    h = squarefree_annihilator(F, rank, seed=seed, budget=budget)
    if not apolar_apply(h, F).is_zero():
        raise AssertionError("annihilator does not kill F")
    points = projective_roots(h, precision_bits)
    if len(points) != rank:
        raise ConvergenceError(f"expected {rank} roots, got {len(points)}")

    ctx = mpmath.MPContext()
    ctx.prec = precision_bits
    d = F.degree
    target = [ctx.mpf(c.numerator) / c.denominator for c in F.coeffs]
    A = ctx.matrix(d + 1, rank)
    for t, (a, b) in enumerate(points):
        for i in range(d + 1):
            A[i, t] = comb(d, i) * a**i * b ** (d - i)
    scalars = _lstsq(ctx, A, target)

    err = max(abs(target[i] - ctx.fsum(scalars[t] * A[i, t] for t in range(rank))) for i in range(d + 1))
    residual = err / max(abs(c) for c in target)
    if residual > ctx.ldexp(ctx.mpf(1), -(precision_bits // 2)):
        raise ConvergenceError(f"residual {ctx.nstr(residual, 5)} above tolerance 2^-{precision_bits // 2}")
    terms = tuple((c, pt) for c, pt in zip(scalars, points))
    return WaringDecomposition(terms, precision_bits, residual, h)


def chordal_distance(p, q):
    """Chordal distance between points of the projective line."""
    (a1, b1), (a2, b2) = p, q
    ctx = a1.context
    num = abs(a1 * b2 - a2 * b1)
    return num / (ctx.sqrt(abs(a1) ** 2 + abs(b1) ** 2) * ctx.sqrt(abs(a2) ** 2 + abs(b2) ** 2))
