"""Builders for the structured matrices used in invertibility arguments."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from hopfdual.errors import (
    BlockCriterionViolation,
    DimensionMismatchError,
    ParameterError,
    SingularHypothesisError,
)
from hopfdual.linalg.matrix import ExactMatrix, det
from hopfdual.scalars.cyclotomic import CycloContext, CycloScalar, Scalar, get_context

__all__ = [
    "assemble_block_matrix",
    "binomial_triangle",
    "build_shifted_matrix",
    "power_matrix",
    "verify_block_criterion",
]


def power_matrix(ctx: CycloContext, nodes: Sequence[Scalar], exponents: Sequence[int]) -> ExactMatrix:
    """Entry (i, j) = nodes[i] ** exponents[j]; a Vandermonde matrix for exponents 0..k-1."""

    scalars = [ctx.scalar(node) for node in nodes]
    return ExactMatrix.from_rows(ctx, [[node**e for e in exponents] for node in scalars])


def binomial_triangle(ctx: CycloContext, size: int, lam: Scalar) -> ExactMatrix:
    """Upper triangular (s, s') -> C(s', s) lam^(s'-s) for s <= s'."""

    lam = ctx.scalar(lam)
    rows = [
        [math.comb(t, s) * lam ** (t - s) if s <= t else 0 for t in range(size)]
        for s in range(size)
    ]
    return ExactMatrix.from_rows(ctx, rows)


def build_shifted_matrix(
    r: int,
    base: Scalar,
    a: Fraction | int,
    shift_num: int = 0,
    shift_den: int = 1,
) -> ExactMatrix:
    """The 2r x 2r matrix with rows (e, s), columns (e', s') in lex order.

    entry = base^((-1)^e (shift_num + shift_den (2s' + e'))) * (a + 2s' + e')^s, 0^0 = 1.
    ``base`` is the shift_den-th root of lambda, so every exponent is an integer.
    """

    if r <= 0:
        raise ParameterError("r must be positive", f"r={r}")
    if shift_den <= 0:
        raise ParameterError("shift_den must be positive", f"shift_den={shift_den}")
    ctx = base.ctx if isinstance(base, CycloScalar) else get_context(1)
    base = ctx.scalar(base)
    if base.is_zero():
        raise ParameterError("base must be nonzero")
    a = Fraction(a)
    rows = []
    for e in range(2):
        sign = -1 if e else 1
        for s in range(r):
            row = []
            for e_col in range(2):
                for s_col in range(r):
                    exponent = sign * (shift_num + shift_den * (2 * s_col + e_col))
                    row.append(base**exponent * (a + 2 * s_col + e_col) ** s)
            rows.append(row)
    return ExactMatrix.from_rows(ctx, rows)


def assemble_block_matrix(outer: ExactMatrix, blocks: Sequence[ExactMatrix]) -> ExactMatrix:
    """C with rows (i, j), columns (i', j') and entry a_ii' * b_i',jj'."""

    size = outer.rows
    if not outer.is_square:
        raise DimensionMismatchError(f"outer matrix must be square, got {outer.shape}")
    if len(blocks) != size:
        raise DimensionMismatchError(f"expected {size} blocks, got {len(blocks)}")
    inner = blocks[0].rows if blocks else 0
    if any(block.shape != (inner, inner) for block in blocks):
        raise DimensionMismatchError("blocks must all be square of one size")
    rows = []
    for i in range(size):
        for j in range(inner):
            rows.append(
                [
                    outer.entries[i][i_col] * blocks[i_col].entries[j][j_col]
                    for i_col in range(size)
                    for j_col in range(inner)
                ]
            )
    return ExactMatrix.from_rows(outer.ctx, rows)


def verify_block_criterion(outer: ExactMatrix, blocks: Sequence[ExactMatrix]) -> bool:
    """Invertibility of the assembled matrix, checked against 'every block invertible'."""

    assembled = assemble_block_matrix(outer, blocks)
    if det(outer).is_zero():
        raise SingularHypothesisError("outer matrix must be invertible")
    invertible = not det(assembled).is_zero()
    expected = all(not det(block).is_zero() for block in blocks)
    if invertible != expected:
        raise BlockCriterionViolation(
            f"assembled matrix invertible={invertible} but blocks invertible={expected}"
        )
    return invertible
