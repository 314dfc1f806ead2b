"""Dense exact linear algebra over Q(i,sqrt2) and over Puiseux series.

Matrices are plain lists of lists.  The field routines (rref, rank, kernel,
solve, det, inv) assume FieldElem entries and are exact.  The series solver
pivots on the entry of smallest leading exponent, which keeps truncation
error under control for witness verification.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from .field import FieldElem, ONE, ZERO
from .series import InsufficientPrecision, PuiseuxSeries

Row = List[FieldElem]


class SingularMatrix(ArithmeticError):
    pass


class InconsistentSystem(ArithmeticError):
    pass


# -- construction helpers ------------------------------------------------


def zeros(r: int, c: int) -> List[Row]:
    return [[ZERO for _ in range(c)] for _ in range(r)]


def identity(n: int) -> List[Row]:
    out = zeros(n, n)
    for k in range(n):
        out[k][k] = ONE
    return out


def transpose(a: Sequence[Sequence]) -> List[list]:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = a[i][0] * b[0][j]
            for k in range(1, inner):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    return [row[0] for row in mat_mul(a, [[x] for x in v])]


# -- exact field elimination ----------------------------------------------


def rref(matrix: Sequence[Row]):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for k in range(r, len(rows)):
            if not rows[k][c].is_zero():
                pivot_row = k
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and not rows[k][c].is_zero():
                factor = rows[k][c]
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Row]) -> int:
    return len(rref(matrix)[1])


def kernel(matrix: Sequence[Row]) -> List[List[FieldElem]]:
    """Basis of the right null space of `matrix`."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def solve(matrix: Sequence[Row], rhs: Sequence[Row]) -> List[Row]:
    """Solve A X = B exactly (A square and invertible)."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise SingularMatrix("matrix is not square")
    aug = [list(a) + list(b) for a, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in rows[:n]]


def det(matrix: Sequence[Row]) -> FieldElem:
    n = len(matrix)
    rows = [list(r) for r in matrix]
    out = ONE
    for c in range(n):
        pivot_row = None
        for k in range(c, n):
            if not rows[k][c].is_zero():
                pivot_row = k
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            out = -out
        out = out * rows[c][c]
        inv = rows[c][c].inv()
        for k in range(c + 1, n):
            if not rows[k][c].is_zero():
                factor = rows[k][c] * inv
                rows[k] = [a - factor * b for a, b in zip(rows[k], rows[c])]
    return out


def inv(matrix: Sequence[Row]) -> List[Row]:
    return solve(matrix, identity(len(matrix)))


def row_space_contains(matrix: Sequence[Row], vector: Sequence[FieldElem]) -> bool:
    base = rank(matrix) if matrix else 0
    return rank(list(matrix) + [list(vector)]) == base


# -- series elimination -----------------------------------------------------


def _series_is_visible(x: PuiseuxSeries) -> bool:
    return bool(x.terms)


def series_solve(matrix, rhs,
                 precision: Optional[Fraction] = None):
    """Solve A X = B over Puiseux series (A square).

    Pivots on the visible entry of smallest leading exponent.  Raises
    SingularMatrix when a pivot column has no visible entry (either the
    matrix is singular or the available precision cannot exhibit a pivot;
    with exact inputs this is genuine singularity).
    """
    n = len(matrix)
    width = len(rhs[0]) if rhs else 0
    aug = [list(a) + list(b) for a, b in zip(matrix, rhs)]
    perm = list(range(n))
    for c in range(n):
        best = None
        best_val = None
        for k in range(c, n):
            entry = aug[k][c]
            if _series_is_visible(entry):
                v = entry.leading()[0]
                if best_val is None or v < best_val:
                    best, best_val = k, v
        if best is None:
            truncated = any(aug[k][c].precision is not None for k in range(c, n))
            if truncated:
                raise InsufficientPrecision(
                    f"no pivot visible in column {c} at available precision")
            raise SingularMatrix(f"no pivot in column {c}")
        aug[c], aug[best] = aug[best], aug[c]
        perm[c], perm[best] = perm[best], perm[c]
        pivot_inv = aug[c][c].inv(precision)
        aug[c] = [x * pivot_inv for x in aug[c]]
        for k in range(n):
            if k != c and _series_is_visible(aug[k][c]):
                factor = aug[k][c]
                aug[k] = [a - factor * b for a, b in zip(aug[k], aug[c])]
    return [row[n:n + width] for row in aug]


def series_matrix(matrix_of_field) -> List[List[PuiseuxSeries]]:
    """Lift a FieldElem matrix to a series matrix."""
    return [[PuiseuxSeries.from_scalar(x) for x in row] for row in matrix_of_field]
