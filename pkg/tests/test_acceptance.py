"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from math import factorial
from pathlib import Path

import mpmath
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from waringrank import (  # noqa: E402
    BinaryForm,
    BinomialShape,
    apolar_apply,
    apolar_generators,
    binomial_rank,
    change_coords,
    decompose,
    generic_rank,
    hilbert_function,
    real_binomial_class,
    real_rank,
    splits_over_reals,
    waring_rank,
)
from waringrank.forms import product_of_linear  # noqa: E402
from waringrank.realrank import Kind, SignClass  # noqa: E402

from conftest import random_change, random_form, random_rational  # noqa: E402

GRID = 12
SEED = 314159


def report(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"
    capman = getattr(report, "capture", None)
    if capman is not None:
        with capman.global_and_fixture_disabled():
            print(line, flush=True)
    else:
        print(line, flush=True)
    return ok


@pytest.fixture(autouse=True)
def _uncaptured(request):
    report.capture = request.config.pluginmanager.getplugin("capturemanager")
    yield
    report.capture = None


def _grid_cells():
    rng = random.Random(SEED)
    for r in range(GRID + 1):
        for s in range(r, GRID + 1):
            for alpha in range(1, GRID + 1):
                pair = (random_rational(rng, 12, nonzero=True), random_rational(rng, 12, nonzero=True))
                yield r, s, alpha, pair


_grid_cache = {}


def grid_results():
    """(r, s, alpha) -> (closed form, Sylvester with (1,1), Sylvester with a random pair)."""
    if not _grid_cache:
        for r, s, alpha, (a, b) in _grid_cells():
            closed = binomial_rank(BinomialShape(r, s, alpha)).rank
            ones = waring_rank(BinomialShape(r, s, alpha).expand()).rank
            rand = waring_rank(BinomialShape(r, s, alpha, a, b).expand()).rank
            _grid_cache[(r, s, alpha)] = (closed, ones, rand, binomial_rank(BinomialShape(r, s, alpha, a, b)).rank)
    return _grid_cache


def criterion_1():
    t0 = time.perf_counter()
    res = grid_results()
    bad = [k for k, (c, o, w, c2) in res.items() if not c == o == w == c2]
    dt = time.perf_counter() - t0
    return not bad, f"{len(res)} cells x 2 coefficient pairs, {len(bad)} mismatches, {dt:.1f}s"


def example_forms():
    """Every explicit example form with its expected rank."""
    out = [(BinaryForm.linear(1, 1), 1), (BinaryForm.from_coeffs([1, 0, 1]), 2)]
    for r in range(0, 9):
        out.append((BinaryForm.from_terms({(r, r + 1): 1, (r + 1, r): 1}), r + 1))
    # this family needs s > 0; s = 0 is the two-power case x^alpha + y^alpha of rank 2
    for alpha in range(1, 11):
        for s in range(1, 11):
            a = Fraction(factorial(alpha) * factorial(s), factorial(s + alpha))
            F = BinaryForm.from_terms({(0, s + alpha): a, (alpha, s): 1})
            out.append((F, s + 1 if alpha <= s else alpha))
    out.append((BinaryForm.from_coeffs([1, 1, 1]), 2))
    out.append((BinaryForm.from_coeffs([1, 2, 1]), 1))
    for r in range(1, 7):
        for sign in (1, -1):
            out.append((BinaryForm.monomial(r, r) * BinaryForm.linear(1, sign), r + 1))
    for sign in (1, -1):
        out.append((BinaryForm.from_terms({(3, 0): 1, (1, 2): sign}), 2))
    return out


def criterion_2():
    cases = example_forms()
    bad = [(str(F), want, waring_rank(F).rank) for F, want in cases if waring_rank(F).rank != want]
    return not bad, f"{len(cases)} example values, mismatches: {bad or 'none'}"


def criterion_3():
    rng = random.Random(SEED + 3)
    n, failures = 110, []
    for k in range(n):
        F = random_form(rng, 2, 20, sparsity=rng.choice([0.0, 0.3, 0.7, 0.9]))
        d = F.degree
        pair = apolar_generators(F)
        hf = hilbert_function(F).values
        ok = (pair.d1 + pair.d2 == d + 2
              and apolar_apply(pair.g1, F).is_zero()
              and (pair.d2 > d or apolar_apply(pair.g2, F).is_zero())
              and all(hf[i] == hf[d - i] and hf[i] <= min(i + 1, d - i + 1) for i in range(d + 1)))
        if not ok:
            failures.append(k)
    return not failures, f"{n} random forms of degree 2-20, {len(failures)} failures"


def criterion_4():
    rng = random.Random(SEED + 4)
    bad = 0
    for _ in range(20):
        F = random_form(rng, 2, 15, sparsity=rng.choice([0.0, 0.6]))
        rank = waring_rank(F).rank
        for _ in range(5):
            bad += waring_rank(change_coords(F, random_change(rng))).rank != rank
        bad += waring_rank(F.scale(random_rational(rng, nonzero=True))).rank != rank
    return not bad, f"20 forms x (5 coordinate changes + 1 rescaling), {bad} rank changes"


def criterion_5():
    t0 = time.perf_counter()
    rng = random.Random(SEED + 5)
    forms = [F for F, _ in example_forms()] + [random_form(rng, 1, 15, sparsity=rng.choice([0.0, 0.5]))
                                               for _ in range(50)]
    tol = mpmath.mpf(2) ** -64
    worst128, min_gain, failures = mpmath.mpf(0), None, []
    for k, F in enumerate(forms):
        rank = waring_rank(F).rank
        lo = decompose(F, precision_bits=128)
        hi = decompose(F, precision_bits=256)
        worst128 = max(worst128, lo.residual)
        if len(lo) != rank or len(hi) != rank or lo.residual > tol:
            failures.append(k)
            continue
        if hi.residual == 0:
            continue
        if lo.residual == 0:
            # exact at 128 bits already; nothing left to gain
            continue
        gain = mpmath.log(lo.residual, 2) - mpmath.log(hi.residual, 2)
        min_gain = gain if min_gain is None else min(min_gain, gain)
        if gain < 32:
            failures.append(k)
    dt = time.perf_counter() - t0
    gain_text = "n/a" if min_gain is None else f"{float(min_gain):.1f}"
    return not failures, (f"{len(forms)} forms, worst residual@128 = 2^{float(mpmath.log(worst128, 2)):.1f}, "
                          f"min log2 gain at 256 bits = {gain_text}, {len(failures)} failures, {dt:.1f}s")


def criterion_6():
    rng = random.Random(SEED + 6)
    problems = []
    for r in range(1, 7):
        for sign in (1, -1):
            rep = real_rank(BinaryForm.monomial(r, r) * BinaryForm.linear(1, sign))
            if rep.kind is not Kind.EXACT or rep.value != 2 * r + 1:
                problems.append(("family", r, sign))

    def line():
        while True:
            a, b = random_rational(rng, 6), random_rational(rng, 6)
            if a or b:
                return a, b

    for k in range(50):
        lines = [line() for _ in range(rng.randint(1, 8))]
        if not splits_over_reals(product_of_linear(lines)):
            problems.append(("split", k))
    for k in range(50):
        lines = [line() for _ in range(rng.randint(0, 6))]
        t, c = random_rational(rng, 5), Fraction(rng.randint(1, 9), rng.randint(1, 4))
        quad = BinaryForm.from_coeffs([t * t + c, -2 * t, 1])  # (x - t y)^2 + c y^2
        G = product_of_linear(lines) * quad if lines else quad
        if splits_over_reals(G):
            problems.append(("quadratic", k))

    values = (1, -1, Fraction(3, 2), Fraction(-3, 2))
    cells = 0
    for alpha in range(1, 7):
        for a in values:
            for b in values:
                cells += 1
                want = SignClass.ODD_ALPHA if alpha % 2 else (SignClass.PLUS if a * b > 0 else SignClass.MINUS)
                if real_binomial_class(BinomialShape(1, 2, alpha, a, b)).sign_class is not want:
                    problems.append(("sign", alpha, a, b))
    return not problems, (f"12 family values, 50 split + 50 non-split products, {cells} sign cells; "
                          f"problems: {problems or 'none'}")


def criterion_7():
    res = grid_results()
    below = [k for k, v in res.items() if v[0] < generic_rank(sum(k))]
    above = [k for k, v in res.items() if v[0] > generic_rank(sum(k))]
    witness = binomial_rank(BinomialShape(2, 4, 3)).rank == 6 > generic_rank(9) == 5
    ok = bool(below) and bool(above) and witness and (2, 4, 3) in above
    return ok, f"{len(below)} cells below generic rank, {len(above)} above, (2,4,3): 6 > 5 = {witness}"


CRITERIA = [
    (1, "closed form = Sylvester on 0<=r<=s<=12, 1<=alpha<=12", criterion_1),
    (2, "example rank values", criterion_2),
    (3, "apolar ideal structure", criterion_3),
    (4, "rank invariance", criterion_4),
    (5, "numerical decomposition", criterion_5),
    (6, "real-rank facts", criterion_6),
    (7, "ranks on both sides of the generic rank", criterion_7),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check):
    ok, detail = check()
    assert report(number, title, ok, detail), detail


if __name__ == "__main__":
    results = [report(n, title, *check()) for n, title, check in CRITERIA]
    sys.exit(0 if all(results) else 1)
