"""Dense exact linear algebra over the rationals."""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from polyrep.exact.rational import RatVec, sub

Matrix = Sequence[Sequence[Fraction]]


def _copy(matrix: Matrix) -> List[List[Fraction]]:
    return [[Fraction(a) for a in row] for row in matrix]


def row_reduce(matrix: Matrix, columns: Optional[int] = None) -> Tuple[List[List[Fraction]], List[int]]:
    """
    Bring a matrix into reduced row echelon form.

    Args:
        matrix: Rows of rationals.
        columns: Number of columns; required when the matrix has no rows.

    Returns:
        Tuple of the reduced rows (zero rows dropped) and the pivot columns.
    """
    rows = _copy(matrix)
    ncols = columns if columns is not None else (len(rows[0]) if rows else 0)
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix: Matrix, columns: Optional[int] = None) -> int:
    return len(row_reduce(matrix, columns)[1])


def solve_square_system(matrix: Matrix, rhs: Sequence[Fraction]) -> Optional[RatVec]:
    """
    Solve M x = rhs exactly.

    Args:
        matrix: Square d x d matrix.
        rhs: Right-hand side of length d.

    Returns:
        The unique solution, or None when M is singular.

    Raises:
        ValueError: If the matrix is not square or rhs has the wrong length.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if len(rhs) != n:
        raise ValueError("right-hand side length mismatch")

    augmented = [[Fraction(a) for a in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if augmented[i][col] != 0), None)
        if pivot is None:
            return None
        augmented[col], augmented[pivot] = augmented[pivot], augmented[col]
        inv = 1 / augmented[col][col]
        augmented[col] = [a * inv for a in augmented[col]]
        for i in range(n):
            if i != col and augmented[i][col] != 0:
                factor = augmented[i][col]
                augmented[i] = [a - factor * b for a, b in zip(augmented[i], augmented[col])]
    return tuple(row[n] for row in augmented)


def kernel_basis(matrix: Matrix, columns: Optional[int] = None) -> List[RatVec]:
    """
    Exact basis of {x : A x = 0}.

    Args:
        matrix: m x d matrix.
        columns: d, needed when the matrix has no rows.

    Returns:
        List of basis vectors; empty when A has full column rank.
    """
    ncols = columns if columns is not None else (len(matrix[0]) if matrix else 0)
    reduced, pivots = row_reduce(matrix, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull of a nonempty point set."""
    if not points:
        return -1
    base = points[0]
    differences = [sub(p, base) for p in points[1:]]
    if not differences:
        return 0
    return rank(differences)


def mat_vec(matrix: Matrix, v: Sequence[Fraction]) -> RatVec:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in matrix)
