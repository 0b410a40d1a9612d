"""Small exact linear algebra over the rationals (Bareiss elimination)."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import DimensionMismatch, SingularSystem


def _integer_rows(rows) -> tuple[list[list[int]], int]:
    """Scale each row to integers; also return the product of the row scales."""
    out = []
    total = 1
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in fr])
        total *= den
    return out, total


def _bareiss(m: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int], int]:
    """In-place Bareiss forward elimination on the first ``ncols`` columns.

    Returns the reduced matrix, the pivot columns, and the sign of the row
    permutation.
    """
    rows = len(m)
    pivots = []
    sign = 1
    prev = 1
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, rows):
            mi = m[i]
            f = mi[c]
            for j in range(c + 1, len(mi)):
                # division is exact by Sylvester's identity
                mi[j] = (piv * mi[j] - f * m[r][j]) // prev
            mi[c] = 0
        pivots.append(c)
        prev = piv
        r += 1
    return m, pivots, sign


def determinant(mat: Sequence[Sequence]) -> Fraction:
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    ints, den = _integer_rows(mat)
    m, pivots, sign = _bareiss(ints, n)
    if len(pivots) < n:
        return Fraction(0)
    return Fraction(sign * m[n - 1][n - 1], den)


def rank(mat: Sequence[Sequence]) -> int:
    if not mat:
        return 0
    ints, _ = _integer_rows(mat)
    _, pivots, _ = _bareiss(ints, len(ints[0]))
    return len(pivots)


def solve(mat: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve the square system ``mat @ x = rhs`` exactly."""
    n = len(mat)
    if len(rhs) != n or any(len(row) != n for row in mat):
        raise DimensionMismatch(f"need a square {n}x{n} system with {n} right-hand sides")
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    ints, _ = _integer_rows(aug)
    m, pivots, _ = _bareiss(ints, n)
    if len(pivots) < n:
        raise SingularSystem("constraint matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n]) - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return x


def leading_minors(mat: Sequence[Sequence]) -> list[Fraction]:
    return [determinant([row[:k] for row in mat[:k]]) for k in range(1, len(mat) + 1)]


def inverse(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(mat)
    cols = [solve(mat, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]
