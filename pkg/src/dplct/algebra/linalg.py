"""Exact Gaussian elimination over Q or an extension ring."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _exact(rows) -> list[list]:
    return [[Fraction(v) if type(v) is int else v for v in r] for r in rows]


def _one_like(c):
    return c ** 0 if not isinstance(c, int) else Fraction(1)


def determinant(rows: Sequence[Sequence]):
    m = _exact(rows)
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    det = _one_like(m[0][0])
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return det * 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        inv = 1 / p
        for r in range(col + 1, n):
            f = m[r][col]
            if f:
                f = f * inv
                row, prow = m[r], m[col]
                for c in range(col, n):
                    row[c] = row[c] - f * prow[c]
    return det


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = _exact(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence]) -> list[list]:
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        return []
    ncols = len(rows[0])
    ech, pivots = row_echelon(rows)
    one = _one_like(rows[0][0])
    zero = one * 0
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [zero] * ncols
        v[free] = one
        for i, pc in enumerate(pivots):
            v[pc] = -ech[i][free]
        basis.append(v)
    return basis


def cross(u: Sequence, v: Sequence) -> list:
    return [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
