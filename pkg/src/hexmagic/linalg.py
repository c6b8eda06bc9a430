"""Exact rational Gaussian elimination: solving and null-space bases.

Pivot order is deterministic (first nonzero column, smallest row index) so
bases and particular solutions are reproducible.  Matrices are plain lists
of Fraction rows; sizes here are tiny (at most a few hundred columns).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


class InconsistentSystemError(ValueError):
    """Raised for unsolvable systems; ``rows`` lists the equations involved."""

    def __init__(self, rows: tuple[int, ...]):
        self.rows = rows
        super().__init__(f"inconsistent linear system (equations {list(rows)})")


def _rref(matrix: list[list[Fraction]], pivot_limit: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form, pivoting only on columns < pivot_limit.

    Columns at or beyond the limit (right-hand sides, provenance trackers)
    are carried through the row operations but never chosen as pivots.
    """
    pivots: list[int] = []
    row = 0
    for col in range(pivot_limit):
        pivot = next((i for i in range(row, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[row], matrix[pivot] = matrix[pivot], matrix[row]
        inv = 1 / matrix[row][col]
        matrix[row] = [x * inv for x in matrix[row]]
        for i in range(len(matrix)):
            if i != row and matrix[i][col]:
                f = matrix[i][col]
                matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[row])]
        pivots.append(col)
        row += 1
        if row == len(matrix):
            break
    return matrix, pivots


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    work = [list(map(Fraction, row)) for row in matrix]
    if not work:
        return 0
    return len(_rref(work, len(work[0]))[1])


def solve(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction]:
    """One exact solution of A x = b, with every free variable set to zero.

    Raises InconsistentSystemError naming the set of input equations whose
    combination is contradictory (tracked through the elimination).
    """
    n_rows = len(matrix)
    if n_rows == 0:
        return []
    n_cols = len(matrix[0])
    # Augment with the rhs and an identity block recording row provenance.
    work = []
    for i in range(n_rows):
        tracker = [Fraction(int(j == i)) for j in range(n_rows)]
        work.append([Fraction(x) for x in matrix[i]] + [Fraction(rhs[i])] + tracker)
    reduced, pivots = _rref(work, n_cols)
    for row in reduced[len(pivots) :]:
        if row[n_cols]:
            culprits = tuple(j for j in range(n_rows) if row[n_cols + 1 + j])
            raise InconsistentSystemError(culprits)
    solution = [Fraction(0)] * n_cols
    for i, col in enumerate(pivots):
        solution[col] = reduced[i][n_cols]
    return solution


def nullspace(matrix: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Integral basis of the null space of A, one vector per free column.

    Each basis vector is the standard rref kernel vector scaled to integers
    (lcm of denominators, divided by the gcd, leading entry positive).
    """
    if not matrix:
        raise ValueError("cannot take the null space of an empty matrix")
    n_cols = len(matrix[0])
    work = [[Fraction(x) for x in row] for row in matrix]
    reduced, pivots = _rref(work, n_cols)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -reduced[i][fc]
        basis.append(_integerize(vec))
    return basis


def _integerize(vec: list[Fraction]) -> list[int]:
    scale = 1
    for v in vec:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    ints = [int(v * scale) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints
