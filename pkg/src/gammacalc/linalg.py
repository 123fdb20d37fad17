"""Exact Gaussian elimination over a coefficient field."""

from __future__ import annotations

from .fields import Field


def rank(rows: list[list], field: Field) -> int:
    """Row rank of a small dense matrix, by fraction-free-enough elimination."""
    mat = [list(row) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rk = 0
    for col in range(ncols):
        pivot = next(
            (i for i in range(rk, nrows) if not field.is_zero(mat[i][col])), None
        )
        if pivot is None:
            continue
        mat[rk], mat[pivot] = mat[pivot], mat[rk]
        inv = field.inv(mat[rk][col])
        mat[rk] = [field.mul(inv, x) for x in mat[rk]]
        for i in range(nrows):
            if i != rk and not field.is_zero(mat[i][col]):
                factor = mat[i][col]
                mat[i] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(mat[i], mat[rk])
                ]
        rk += 1
        if rk == nrows:
            break
    return rk


def nullspace_vector(rows: list[list], field: Field) -> list | None:
    """A nonzero kernel vector of a matrix with a 1-dimensional kernel.

    Returns None if the kernel is trivial; if the kernel has dimension
    above one, returns one canonical vector (free variable set to 1,
    remaining free variables to 0).
    """
    mat = [list(row) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots: list[int] = []
    rk = 0
    for col in range(ncols):
        pivot = next(
            (i for i in range(rk, nrows) if not field.is_zero(mat[i][col])), None
        )
        if pivot is None:
            continue
        mat[rk], mat[pivot] = mat[pivot], mat[rk]
        inv = field.inv(mat[rk][col])
        mat[rk] = [field.mul(inv, x) for x in mat[rk]]
        for i in range(nrows):
            if i != rk and not field.is_zero(mat[i][col]):
                factor = mat[i][col]
                mat[i] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(mat[i], mat[rk])
                ]
        pivots.append(col)
        rk += 1
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    vec = [field.zero()] * ncols
    vec[free[0]] = field.one()
    for row_idx, col in enumerate(pivots):
        vec[col] = field.neg(mat[row_idx][free[0]])
    return vec
