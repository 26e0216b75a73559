"""Hankel matrices of shifted triangle columns and their exact determinants.

D(m, k, n) is the determinant of the n x n matrix whose (i, j) entry is
a[i+j+m][k]; the shift m may be negative, in which case entries at negative
row indices are 0.  Determinants are evaluated by one-step fraction-free
(Bareiss) elimination so that every intermediate stays in the coefficient
ring and every internal division is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import NotDivisibleError, RingElement, exact_div
from .sequences import WeightSpec, admissible_table, column


class InternalDivisionError(RuntimeError):
    """An elimination division was not exact; the state is corrupted."""


@dataclass(frozen=True)
class HankelSpec:
    """Shift m (any sign), column k >= 0, matrix size n >= 0."""

    m: int
    k: int
    n: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("column index must be >= 0")
        if self.n < 0:
            raise ValueError("matrix size must be >= 0")


@dataclass(frozen=True)
class SquareMatrix:
    n: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows) -> "SquareMatrix":
        rows = tuple(tuple(row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        return cls(len(rows), rows)

    def entry(self, i: int, j: int) -> RingElement:
        return self.entries[i][j]


def hankel_matrix(table, spec: HankelSpec) -> SquareMatrix:
    """Matrix of a[i+j+m][k] entries; negative row indices give 0."""
    return SquareMatrix.from_rows(
        [
            [column(table, spec.k, i + j + spec.m) for j in range(spec.n)]
            for i in range(spec.n)
        ]
    )


def det_fraction_free(matrix: SquareMatrix) -> RingElement:
    """Exact determinant by Bareiss one-step elimination.

    A zero pivot is repaired by swapping in the first lower row with a
    nonzero entry in the pivot column (flipping the sign); if none exists
    the determinant is 0.  The empty matrix has determinant 1.
    """
    n = matrix.n
    if n == 0:
        return 1
    rows = [list(row) for row in matrix.entries]
    sign = 1
    prev: RingElement = 1
    for p in range(n - 1):
        if rows[p][p] == 0:
            for r in range(p + 1, n):
                if rows[r][p] != 0:
                    rows[p], rows[r] = rows[r], rows[p]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[p][p]
        for i in range(p + 1, n):
            left = rows[i][p]
            for j in range(p + 1, n):
                value = pivot * rows[i][j] - left * rows[p][j]
                try:
                    rows[i][j] = exact_div(value, prev)
                except NotDivisibleError as exc:
                    raise InternalDivisionError(
                        f"inexact division at elimination step {p}"
                    ) from exc
        prev = pivot
    result = rows[n - 1][n - 1]
    return result if sign > 0 else -result


def hankel_det(w: WeightSpec, m: int, k: int, n: int) -> RingElement:
    """D(m, k, n) for weights w, building the triangle exactly deep enough."""
    if n < 0:
        raise ValueError("matrix size must be >= 0")
    if n == 0:
        return 1
    depth = max(0, 2 * (n - 1) + m)
    table = admissible_table(w, depth)
    return det_fraction_free(hankel_matrix(table, HankelSpec(m, k, n)))
