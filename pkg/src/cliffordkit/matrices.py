"""Tiny dense-matrix helpers generic over exact and float scalars.

Matrices are tuples of tuples of scalars (ExactScalar or complex); the
sizes in play are at most 12x12, so plain loops are the whole story.
"""

from __future__ import annotations

from .scalars import ExactScalar, approx_eq

__all__ = [
    "identity",
    "zeros",
    "mat_mul",
    "mat_vec",
    "mat_add",
    "mat_scale",
    "mat_neg",
    "transpose",
    "mat_eq",
    "determinant",
    "is_antisymmetric",
    "is_special_orthogonal",
]

Matrix = tuple


def _zero(exact: bool):
    return ExactScalar(0) if exact else 0j


def _one(exact: bool):
    return ExactScalar(1) if exact else 1.0 + 0j


def _is_exact(m) -> bool:
    return isinstance(m[0][0], ExactScalar)


def identity(n: int, exact: bool = True) -> Matrix:
    one, zero = _one(exact), _zero(exact)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int, exact: bool = True) -> Matrix:
    zero = _zero(exact)
    return tuple(tuple(zero for _ in range(cols)) for _ in range(rows))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(1, k)), a[i][0] * b[0][j]) for j in range(m))
        for i in range(n)
    )


def mat_vec(a: Matrix, v) -> tuple:
    n, k = len(a), len(v)
    return tuple(sum((a[i][t] * v[t] for t in range(1, k)), a[i][0] * v[0]) for i in range(n))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c) -> Matrix:
    return tuple(tuple(x * c for x in row) for row in a)


def mat_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def conj_transpose(a: Matrix) -> Matrix:
    return tuple(tuple(x.conjugate() for x in col) for col in zip(*a))


def mat_eq(a: Matrix, b: Matrix, tol: float | None = None) -> bool:
    """Entrywise equality; exact when ``tol`` is None, approximate otherwise."""
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        return False
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if tol is None:
                if x != y:
                    return False
            else:
                xc = x.to_complex() if isinstance(x, ExactScalar) else complex(x)
                yc = y.to_complex() if isinstance(y, ExactScalar) else complex(y)
                if not approx_eq(xc, yc, tol):
                    return False
    return True


def determinant(a: Matrix):
    """Laplace expansion; the matrices here never exceed 12x12 and the
    exact entries make elimination-free expansion the simplest safe route
    for n <= 4, with elimination used above that."""
    n = len(a)
    if n == 1:
        return a[0][0]
    if n <= 4:
        det = None
        for j in range(n):
            if not a[0][j]:
                continue
            minor = tuple(row[:j] + row[j + 1 :] for row in a[1:])
            term = a[0][j] * determinant(minor)
            if j % 2:
                term = -term
            det = term if det is None else det + term
        return det if det is not None else _zero(_is_exact(a))
    return _det_eliminate(a)


def _det_eliminate(a: Matrix):
    exact = _is_exact(a)
    rows = [list(r) for r in a]
    n = len(rows)
    det = _one(exact)
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if rows[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            return _zero(exact)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det = det * pivot
        inv = pivot.inverse() if exact else 1.0 / pivot
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if not factor:
                continue
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return det


def is_antisymmetric(a: Matrix, tol: float | None = None) -> bool:
    return mat_eq(a, mat_neg(transpose(a)), tol)


def is_special_orthogonal(a: Matrix, tol: float | None = None) -> bool:
    n = len(a)
    exact = _is_exact(a)
    if not mat_eq(mat_mul(transpose(a), a), identity(n, exact), tol):
        return False
    det = determinant(a)
    one = _one(exact)
    if tol is None:
        return det == one
    dc = det.to_complex() if isinstance(det, ExactScalar) else complex(det)
    return approx_eq(dc, 1.0 + 0j, tol)
