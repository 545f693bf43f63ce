"""Exact linear algebra over the rationals, enough for ranks and small solves."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _as_rows(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in matrix]


def row_echelon(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    rows = _as_rows(matrix)
    pivots: list[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return len(row_echelon(matrix)[1])


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    reduced, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in reduced[:n]]


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square nonsingular system exactly."""
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    reduced, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise ZeroDivisionError("singular or inconsistent system")
    return [reduced[i][n] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]
