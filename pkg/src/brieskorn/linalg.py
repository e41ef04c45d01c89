"""Exact linear algebra over the integers and rationals.

Every invariant in this package is an integer, so nothing here touches
floating point: determinants use fraction-free (Bareiss) elimination and
inertia uses symmetric congruence diagonalization over ``Fraction``.
Matrices are plain nested sequences of ints; callers that prefer numpy
object arrays can pass them directly.
"""

from __future__ import annotations

from fractions import Fraction


def as_rows(mat) -> list[list[int]]:
    """Copy a nested sequence (or numpy array) into a list of int lists."""
    return [[int(x) for x in row] for row in mat]


def is_symmetric(mat) -> bool:
    rows = as_rows(mat)
    n = len(rows)
    if any(len(r) != n for r in rows):
        return False
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def is_skew(mat) -> bool:
    rows = as_rows(mat)
    n = len(rows)
    if any(len(r) != n for r in rows):
        return False
    return all(rows[i][j] == -rows[j][i] for i in range(n) for j in range(i, n))


def bareiss_determinant(mat) -> int:
    """Determinant of an integer matrix by fraction-free elimination.

    Intermediate entries are exact integers (every division in the Bareiss
    recurrence is known to be exact), so the result is correct for any size
    and magnitude.
    """
    A = as_rows(mat)
    n = len(A)
    if n == 0:
        return 1
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def symmetric_inertia(mat) -> tuple[int, int, int]:
    """Return (positive, zero, negative) eigenvalue counts of a symmetric
    integer matrix, computed exactly.

    Congruence diagonalization over the rationals: pivots are cleared with
    simultaneous row and column operations, which preserves the inertia
    (Sylvester's law). A vanishing diagonal is repaired either by swapping
    in a later nonzero diagonal entry or, when the whole remaining diagonal
    is zero, by adding one row/column pair to another to expose the pivot
    2*A[i][j]; if the remaining block is identically zero it is all kernel.
    """
    if not is_symmetric(mat):
        raise ValueError("inertia requires a symmetric matrix")
    A = [[Fraction(x) for x in row] for row in as_rows(mat)]
    n = len(A)
    pos = zero = neg = 0
    k = 0
    while k < n:
        if A[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if A[i][i] != 0), None)
            if piv is not None:
                _swap_symmetric(A, k, piv)
            else:
                hit = next(((i, j) for i in range(k, n)
                            for j in range(i + 1, n) if A[i][j] != 0), None)
                if hit is None:
                    zero += n - k
                    break
                i, j = hit
                for c in range(n):
                    A[i][c] += A[j][c]
                for r in range(n):
                    A[r][i] += A[r][j]
                if i != k:
                    _swap_symmetric(A, k, i)
        d = A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / d
            if f:
                for c in range(n):
                    A[i][c] -= f * A[k][c]
                for r in range(n):
                    A[r][i] -= f * A[r][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        k += 1
    return pos, zero, neg


def _swap_symmetric(A, a: int, b: int) -> None:
    A[a], A[b] = A[b], A[a]
    for row in A:
        row[a], row[b] = row[b], row[a]
