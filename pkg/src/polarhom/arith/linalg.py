"""Exact Gaussian elimination over any field (Fraction or number-field entries)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def _copy(rows: Sequence[Sequence]) -> Matrix:
    return [list(r) for r in rows]


def det(rows: Sequence[Sequence]):
    a = _copy(rows)
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    acc = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0) * a[0][0]
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        acc = acc * p
        inv = 1 / p
        for r in range(col + 1, n):
            f = a[r][col]
            if f != 0:
                f = f * inv
                row_r, row_c = a[r], a[col]
                for c in range(col, n):
                    row_r[c] = row_r[c] - f * row_c[c]
    return acc * sign


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = _copy(rows)
    if not a:
        return [], []
    ncols = len(a[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of {v : rows·v = 0}; free variables set to unit vectors in order."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list | None:
    """One solution of rows·v = rhs (free variables zero), or None."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    v = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        v[pc] = red[i][ncols]
    return v


def transpose(rows: Sequence[Sequence]) -> Matrix:
    return [list(c) for c in zip(*rows)] if rows else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]
