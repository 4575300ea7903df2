"""Exact Gauss-Jordan elimination over a field (Fraction or QtScalar entries)."""

from __future__ import annotations


class SingularMatrixError(ArithmeticError):
    pass


def _is_zero(x) -> bool:
    return not x


def invert(matrix, one=1, zero=0):
    """Inverse of a square matrix given as a list of rows."""
    n = len(matrix)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = _choose_pivot(aug, col, n)
        if pivot is None:
            raise SingularMatrixError(f"matrix is singular (column {col})")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = one / aug[col][col]
        aug[col] = [x * inv_p if not _is_zero(x) else x for x in aug[col]]
        prow = aug[col]
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if _is_zero(f):
                continue
            row = aug[r]
            aug[r] = [a - f * b if not _is_zero(b) else a for a, b in zip(row, prow)]
    return [row[n:] for row in aug]


def _choose_pivot(aug, col, n):
    # prefer the sparsest nonzero pivot; keeps intermediate expressions small
    best, best_cost = None, None
    for r in range(col, n):
        x = aug[r][col]
        if _is_zero(x):
            continue
        cost = _cost(x)
        if best is None or cost < best_cost:
            best, best_cost = r, cost
    return best


def _cost(x):
    num = getattr(x, "num", None)
    if num is None:
        return 0
    return len(num) + len(x.den)
