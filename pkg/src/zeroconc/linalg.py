"""Exact integer and rational linear algebra on small dense matrices.

Matrices are plain sequences of rows.  Nothing here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def _is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n)
    )


def inertia(m: Matrix) -> tuple[int, int, int]:
    """Return ``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix.

    Uses congruence by completing squares.  When every remaining diagonal
    entry vanishes, an off-diagonal pivot ``a_ij`` is moved onto the diagonal
    by the substitution ``v_i -> v_i + v_j``, which makes the new diagonal
    entry ``2 a_ij``.
    """
    if not _is_symmetric(m):
        raise ValueError("inertia requires a symmetric square matrix")
    a = [[Fraction(x) for x in row] for row in m]
    pos = neg = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if pair is None:
                return pos, neg, n
            i, j = pair
            for r in range(n):
                a[i][r] += a[j][r]
            for r in range(n):
                a[r][i] += a[r][j]
            k = i
        pivot = a[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        rest = [r for r in range(n) if r != k]
        a = [[a[r][s] - a[r][k] * a[k][s] / pivot for s in rest] for r in rest]
    return pos, neg, 0


def signature(m: Matrix) -> int:
    pos, neg, _ = inertia(m)
    return pos - neg


def is_positive_definite(m: Matrix) -> bool:
    return inertia(m)[0] == len(m)


def is_negative_definite(m: Matrix) -> bool:
    return inertia(m)[1] == len(m)


def determinant(m: Matrix) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjugate(m: Matrix) -> tuple[int, list[list[int]]]:
    """Return ``(det, adj)`` with ``m @ adj == det * I``; requires ``det != 0``.

    Fraction-free Gauss-Jordan on ``[m | I]``: every intermediate entry is a
    minor, so all divisions are exact.
    """
    n = len(m)
    if n == 0:
        return 1, []
    a = [list(map(int, row)) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    sign, prev = 1, 1
    for k in range(n):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                raise ZeroDivisionError("singular matrix")
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pk = a[k]
        piv = pk[k]
        for i in range(n):
            if i == k:
                continue
            row = a[i]
            f = row[k]
            if f == 0:
                a[i] = [piv * x // prev for x in row]
            else:
                a[i] = [(piv * x - f * y) // prev for x, y in zip(row, pk)]
        prev = piv
    # left block is now D * I and the right block D * m^{-1}, with det = sign * D
    return sign * prev, [[sign * x for x in row[n:]] for row in a]


def solve_mod2(m: Matrix, rhs: Sequence[int]) -> tuple[list[int], list[list[int]]] | None:
    """Solve ``m x = rhs`` over Z/2.

    Returns a particular solution and a basis of the kernel, or ``None``
    when the system is inconsistent.
    """
    n_rows = len(m)
    n_cols = len(m[0]) if n_rows else 0
    rows = [[x % 2 for x in m[i]] + [rhs[i] % 2] for i in range(n_rows)]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] and not any(row[:-1]) for row in rows):
        return None
    particular = [0] * n_cols
    for i, c in enumerate(pivots):
        particular[c] = rows[i][-1]
    free = [c for c in range(n_cols) if c not in pivots]
    kernel = []
    for f in free:
        v = [0] * n_cols
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = rows[i][f]
        kernel.append(v)
    return particular, kernel


def quadratic_form(m: Matrix, x: Sequence[int]) -> int:
    n = len(m)
    return sum(m[i][j] * x[i] * x[j] for i in range(n) for j in range(n))
