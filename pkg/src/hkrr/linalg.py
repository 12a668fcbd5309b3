"""Exact Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class InconsistentSystemError(ValueError):
    """The equations admit no solution."""


class UnderdeterminedSystemError(ValueError):
    """The equations do not pin down a unique solution."""


def row_reduce(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a rational matrix.

    Returns the reduced matrix together with the list of pivot columns;
    the rank is the number of pivots. The input is not modified.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if mat and any(len(row) != len(mat[0]) for row in mat):
        raise ValueError("rows must all have the same length")
    pivots: list[int] = []
    ncols = len(mat[0]) if mat else 0
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(row_reduce(rows)[1])


def solve_unique(
    coefficients: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction]:
    """Solve A x = b when the solution exists and is unique.

    Raises InconsistentSystemError when no solution exists and
    UnderdeterminedSystemError when the coefficient rank is below the
    number of unknowns. Overdetermined but consistent systems are fine.
    """
    if len(coefficients) != len(rhs):
        raise ValueError("coefficient rows and right-hand sides differ in number")
    if not coefficients:
        raise ValueError("empty system")
    ncols = len(coefficients[0])
    augmented = [list(row) + [b] for row, b in zip(coefficients, rhs)]
    reduced, pivots = row_reduce(augmented)
    if ncols in pivots:
        raise InconsistentSystemError("system has no solution")
    if len(pivots) < ncols:
        raise UnderdeterminedSystemError(
            f"rank {len(pivots)} is below the {ncols} unknowns"
        )
    solution = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        solution[col] = reduced[i][ncols]
    return solution
