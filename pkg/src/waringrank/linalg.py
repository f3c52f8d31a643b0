"""Exact rational matrices: reduced row echelon form, rank and kernel."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

Vector = List[Fraction]


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("matrix entries do not match the stated shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        entries = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    def column(self, j: int) -> Vector:
        return [r[j] for r in self.entries]

    def rank(self) -> int:
        return rank(self.entries, self.cols)

    def kernel(self) -> list[Vector]:
        return kernel(self.entries, self.cols)


def rref(rows: Sequence[Sequence], cols: int) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form and pivot columns.

    Columns are scanned left to right; the result is unique, so any nonzero
    pivot choice gives the same output.  Zero entries are skipped, which keeps
    the sparse catalecticants of binomials cheap.
    """
    m = [[Fraction(v) for v in r] for r in rows if any(r)]
    pivots: list[int] = []
    top = 0
    for c in range(cols):
        if top == len(m):
            break
        src = next((i for i in range(top, len(m)) if m[i][c]), None)
        if src is None:
            continue
        m[top], m[src] = m[src], m[top]
        prow = m[top]
        inv = 1 / prow[c]
        nz = [k for k in range(c, cols) if prow[k]]
        for k in nz:
            prow[k] *= inv
        for i, row in enumerate(m):
            if i != top and row[c]:
                f = row[c]
                for k in nz:
                    row[k] -= f * prow[k]
        pivots.append(c)
        top += 1
    return m[:top], pivots


def rank(rows: Sequence[Sequence], cols: int) -> int:
    return len(rref(rows, cols)[1])


def kernel(rows: Sequence[Sequence], cols: int) -> list[Vector]:
    """Basis of the right null space, one vector per free column in order."""
    r, pivots = rref(rows, cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(r, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def reduce_against(v: Sequence, echelon: Sequence[Sequence], pivots: Sequence[int]) -> Vector:
    """Remainder of ``v`` after clearing every pivot column of a reduced echelon basis."""
    out = [Fraction(c) for c in v]
    for row, p in zip(echelon, pivots):
        f = out[p]
        if f:
            for k, rk in enumerate(row):
                if rk:
                    out[k] -= f * rk
    return out
