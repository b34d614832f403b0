"""Gaussian elimination on matrices of field codes (lists of lists)."""
from __future__ import annotations

from .errors import PreconditionError
from .gf import Field


def rref(field: Field, rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        s = inv(m[r][c])
        m[r] = [mul(x, s) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = neg(m[i][c])
                m[i] = [add(x, mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(field: Field, rows) -> int:
    return len(rref(field, rows)[1])


def echelon_pivots(field: Field, rows):
    """Pivot columns of a row echelon form (columns scanned left to right)."""
    return rref(field, rows)[1]


def nullspace(field: Field, rows, ncols: int):
    """Basis of {v : rows . v = 0}, one vector per free column, in column order."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(field, rows)
    neg = field.neg
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = neg(m[i][fc])
        basis.append(v)
    return basis


def det(field: Field, rows) -> int:
    n = len(rows)
    m = [list(r) for r in rows]
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    d = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = neg(d)
        d = mul(d, m[c][c])
        s = inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c]:
                f = neg(mul(m[i][c], s))
                m[i] = [add(x, mul(f, y)) for x, y in zip(m[i], m[c])]
    return d


def inverse(field: Field, rows):
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    m, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        raise PreconditionError("matrix is singular")
    return [row[n:] for row in m]


def mat_vec(field: Field, rows, v):
    add, mul = field.add, field.mul
    out = []
    for r in rows:
        acc = 0
        for a, b in zip(r, v):
            acc = add(acc, mul(a, b))
        out.append(acc)
    return out
