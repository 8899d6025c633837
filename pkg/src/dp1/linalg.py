"""Gaussian elimination over an exact field, on raw codes."""
from __future__ import annotations

from typing import Sequence

from .exactnum import FieldSpec


def rref(F: FieldSpec, rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if not F.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = F.scale(m[r], inv)
        for i in range(len(m)):
            if i != r and not F.is_zero(m[i][c]):
                m[i] = F.sub_scaled(m[i], m[r], m[i][c])
        pivots.append(c)
        r += 1
    return m, pivots


def rank(F: FieldSpec, rows: Sequence[Sequence]) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not F.is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        for i in range(r + 1, len(m)):
            if not F.is_zero(m[i][c]):
                m[i] = F.sub_scaled(m[i], m[r], F.mul(m[i][c], inv))
        r += 1
        if r == len(m):
            break
    return r


def nullspace(F: FieldSpec, rows: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    """Basis of {v : rows * v = 0}; one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[F.one if j == i else F.zero for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(F, rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [F.zero] * ncols
        v[fcol] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(m[r][fcol])
        basis.append(v)
    return basis


def det(F: FieldSpec, rows: Sequence[Sequence]):
    """Determinant of a square matrix by elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("det needs a square matrix")
    acc = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if not F.is_zero(m[i][c])), None)
        if piv is None:
            return F.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            acc = F.neg(acc)
        pv = m[c][c]
        acc = F.mul(acc, pv)
        inv = F.inv(pv)
        for i in range(c + 1, n):
            if not F.is_zero(m[i][c]):
                m[i] = F.sub_scaled(m[i], m[c], F.mul(m[i][c], inv))
    return acc
