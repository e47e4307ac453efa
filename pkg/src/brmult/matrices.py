"""Determinants and minor ideals of small polynomial matrices.

Cofactor expansion along the first row, memoized on (rows, cols) index
pairs so shared subminors across the expansion tree are computed once.
Matrix sizes here are tiny (at most 6 or so); sparsity in the entries does
the rest.
"""

from __future__ import annotations

from itertools import combinations

from .poly import Polynomial


def _det(rows, cols, entry, memo, zero):
    if not rows:
        return None  # empty product is 1; callers special-case size 0
    key = (rows, cols)
    got = memo.get(key)
    if got is not None:
        return got
    if len(rows) == 1:
        val = entry(rows[0], cols[0])
    else:
        val = zero
        r0 = rows[0]
        rest = rows[1:]
        for idx, c in enumerate(cols):
            a = entry(r0, c)
            if a.is_zero():
                continue
            sub = _det(rest, cols[:idx] + cols[idx + 1 :], entry, memo, zero)
            term = a * sub
            val = val + term if idx % 2 == 0 else val - term
    memo[key] = val
    return val


def determinant(matrix: list[list[Polynomial]]) -> Polynomial:
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix has no determinant")
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant requires a square matrix")
    zero = Polynomial.zero(matrix[0][0].field, matrix[0][0].arity)
    memo = {}
    return _det(
        tuple(range(n)), tuple(range(n)), lambda i, j: matrix[i][j], memo, zero
    )


def minors(matrix: list[list[Polynomial]], size: int) -> list[Polynomial]:
    """All size x size minors, row sets outer, column sets inner, both sorted.

    Size zero yields the convention minor 1; a size beyond either dimension
    yields no minors.
    """
    p = len(matrix)
    q = len(matrix[0]) if p else 0
    field = matrix[0][0].field if p else None
    arity = matrix[0][0].arity if p else 2
    if size == 0:
        return [Polynomial.constant(1, field, arity)]
    if size > p or size > q:
        return []
    zero = Polynomial.zero(field, arity)
    memo = {}
    out = []
    for rows in combinations(range(p), size):
        for cols in combinations(range(q), size):
            out.append(_det(rows, cols, lambda i, j: matrix[i][j], memo, zero))
    return out
