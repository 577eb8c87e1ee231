"""Dense exact matrices over a cyclotomic field.

Determinants use fraction-free (Bareiss) elimination; rank uses ordinary
Gaussian elimination, which is exact over the field.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from hopfdual.errors import ContextMismatchError, DimensionMismatchError
from hopfdual.scalars.cyclotomic import CycloContext, CycloScalar, Scalar

__all__ = ["ExactMatrix", "det", "kronecker", "rank"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExactMatrix:
    ctx: CycloContext
    rows: int
    cols: int
    entries: tuple[tuple[CycloScalar, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DimensionMismatchError(f"entry grid does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, ctx: CycloContext, rows: Sequence[Sequence[Scalar]]) -> ExactMatrix:
        grid = tuple(tuple(ctx.scalar(value) for value in row) for row in rows)
        width = len(grid[0]) if grid else 0
        return cls(ctx, len(grid), width, grid)

    @classmethod
    def identity(cls, ctx: CycloContext, size: int) -> ExactMatrix:
        return cls.from_rows(ctx, [[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, ctx: CycloContext, rows: int, cols: int) -> ExactMatrix:
        return cls.from_rows(ctx, [[0] * cols for _ in range(rows)]) if rows else cls(ctx, 0, cols, ())

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> CycloScalar:
        i, j = index
        return self.entries[i][j]

    def __iter__(self) -> Iterator[tuple[CycloScalar, ...]]:
        return iter(self.entries)

    def transpose(self) -> ExactMatrix:
        grid = tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        return ExactMatrix(self.ctx, self.cols, self.rows, grid)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        grid = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                total = self.ctx.zero
                for k in range(self.cols):
                    left = self.entries[i][k]
                    if left:
                        total = total + left * other.entries[k][j]
                row.append(total)
            grid.append(tuple(row))
        return ExactMatrix(self.ctx, self.rows, other.cols, tuple(grid))

    def to_csv(self, path: Path) -> Path:
        """Write the matrix with exact-scalar string cells."""

        path = Path(path)
        with path.open("w", newline="") as handle:
            writer = csv.writer(handle)
            for row in self.entries:
                writer.writerow([value.to_string() for value in row])
        return path


def det(matrix: ExactMatrix) -> CycloScalar:
    """Bareiss determinant; every intermediate division is exact."""

    if not matrix.is_square:
        raise DimensionMismatchError(f"determinant needs a square matrix, got {matrix.shape}")
    ctx = matrix.ctx
    size = matrix.rows
    if size == 0:
        return ctx.one
    work = [list(row) for row in matrix.entries]
    sign = 1
    previous = ctx.one
    for k in range(size - 1):
        if work[k][k].is_zero():
            for i in range(k + 1, size):
                if not work[i][k].is_zero():
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return ctx.zero
        pivot = work[k][k]
        for i in range(k + 1, size):
            lead = work[i][k]
            for j in range(k + 1, size):
                work[i][j] = (pivot * work[i][j] - lead * work[k][j]) / previous
        previous = pivot
    result = work[size - 1][size - 1]
    return result if sign > 0 else -result


def rank(matrix: ExactMatrix) -> int:
    work = [list(row) for row in matrix.entries]
    rows, cols = matrix.rows, matrix.cols
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        found = next((i for i in range(pivot_row, rows) if not work[i][col].is_zero()), None)
        if found is None:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        inverse = work[pivot_row][col].inverse()
        pivot = [value * inverse for value in work[pivot_row]]
        work[pivot_row] = pivot
        for i in range(pivot_row + 1, rows):
            factor = work[i][col]
            if factor.is_zero():
                continue
            row = work[i]
            for j in range(col, cols):
                if not pivot[j].is_zero():
                    row[j] = row[j] - factor * pivot[j]
        pivot_row += 1
        logger.debug("rank elimination: column %d/%d, pivots %d", col + 1, cols, pivot_row)
    return pivot_row


def kronecker(left: ExactMatrix, right: ExactMatrix) -> ExactMatrix:
    """Block matrix (a_ii' * B) with rows (i, k) and columns (i', k') in lex order."""

    if left.ctx.order != right.ctx.order:
        raise ContextMismatchError(left.ctx.order, right.ctx.order)
    grid = []
    for i in range(left.rows):
        for k in range(right.rows):
            grid.append(
                tuple(
                    left.entries[i][j] * right.entries[k][l]
                    for j in range(left.cols)
                    for l in range(right.cols)
                )
            )
    return ExactMatrix(left.ctx, left.rows * right.rows, left.cols * right.cols, tuple(grid))
