"""Exact integer linear algebra: fraction-free elimination, rank, adjugate.

Matrices are lists of lists of Python ints (or Fractions where noted).
Fraction-free pivoting with content removal keeps entries from blowing up
on the Macaulay-style matrices this package produces.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _strip_content(row):
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def row_reduce(rows, ncols):
    """Fraction-free row echelon reduction.

    Returns (rank, pivot_cols, echelon_rows); pivot columns are reported in
    increasing column index, rows are integer and content-stripped.
    """
    work = [_strip_content(list(r)) for r in rows if any(r)]
    pivots = []
    echelon = []
    col = 0
    while work and col < ncols:
        pivot_row = None
        for i, r in enumerate(work):
            if r[col]:
                pivot_row = work.pop(i)
                break
        if pivot_row is None:
            col += 1
            continue
        pivots.append(col)
        echelon.append(pivot_row)
        p = pivot_row[col]
        nxt = []
        for r in work:
            if r[col]:
                c = r[col]
                r = _strip_content([p * a - c * b for a, b in zip(r, pivot_row)])
            if any(r):
                nxt.append(r)
        work = nxt
        col += 1
    return len(pivots), pivots, echelon


def rank(rows, ncols):
    return row_reduce(rows, ncols)[0]


def nullity(rows, ncols):
    """Dimension of the solution space of rows * z = 0 (z of length ncols)."""
    return ncols - row_reduce(rows, ncols)[0]


def in_row_span(rows, vector, ncols):
    """Whether an integer vector lies in the rational row span of rows."""
    r0 = rank(rows, ncols)
    return rank(list(rows) + [list(vector)], ncols) == r0


def determinant(matrix):
    """Exact determinant via Bareiss on an integer matrix."""
    n = len(matrix)
    m = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(matrix):
    """Exact inverse over Fractions; raises ValueError when singular."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                c = aug[i][col]
                aug[i] = [x - c * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def adjugate(matrix):
    """det(M) * M^{-1}, an integer matrix for integer input."""
    det = determinant(matrix)
    if det == 0:
        raise ValueError("singular matrix")
    inv = inverse(matrix)
    n = len(matrix)
    adj = [[inv[i][j] * det for j in range(n)] for i in range(n)]
    out = []
    for row in adj:
        r = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise AssertionError("adjugate of integer matrix must be integral")
            r.append(f.numerator)
        out.append(r)
    return out
