"""Invertibility facts about Kronecker, block and shifted matrices, checked exactly."""

from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import Sequence

from hopfdual.errors import BlockCriterionViolation
from hopfdual.linalg.matrix import ExactMatrix, det, kronecker, rank
from hopfdual.linalg.structured import build_shifted_matrix, verify_block_criterion
from hopfdual.reporting.report import Report
from hopfdual.scalars.cyclotomic import CycloContext, get_context, parse_scalar

__all__ = ["verify_matrix_lemmas"]

logger = logging.getLogger(__name__)

DEFAULT_BASES = ("2", "3", "1/2", "2*zeta3^1")


def _random_matrix(ctx: CycloContext, rng: random.Random, size: int) -> ExactMatrix:
    pool = [ctx.zero, ctx.one, -ctx.one, ctx.scalar(2), ctx.zeta(ctx.order // 3)]
    return ExactMatrix.from_rows(ctx, [[rng.choice(pool) for _ in range(size)] for _ in range(size)])


def _invertible(matrix: ExactMatrix) -> bool:
    return not det(matrix).is_zero()


def verify_matrix_lemmas(
    *,
    r_values: Sequence[int] = (1, 2, 3),
    bases: Sequence[str] = DEFAULT_BASES,
    shifts: Sequence[Fraction] = (Fraction(0), Fraction(1), Fraction(-1, 2)),
    exponents: Sequence[Fraction] = (Fraction(1, 2), Fraction(-1, 3)),
    count: int = 30,
    seed: int = 0,
) -> Report:
    report = Report(suite="matrix-lemmas", family="-")
    ctx = get_context(3)
    rng = random.Random(seed)

    # Kronecker: A (x) B invertible iff both factors are
    for _ in range(count):
        a = _random_matrix(ctx, rng, rng.randint(1, 3))
        b = _random_matrix(ctx, rng, rng.randint(1, 3))
        expected = _invertible(a) and _invertible(b)
        report.check(_invertible(kronecker(a, b)) == expected, "Kronecker invertibility")
        report.check(det(a @ a) == det(a) * det(a), "det is multiplicative")
        report.check(rank(b) == rank(b.transpose()), "rank(B) == rank(B^T)")

    # block criterion: assembled matrix invertible iff every block is
    checked = 0
    while checked < count:
        size = rng.randint(1, 3)
        outer = _random_matrix(ctx, rng, size)
        if not _invertible(outer):
            continue
        inner = rng.randint(1, 3)
        blocks = [_random_matrix(ctx, rng, inner) for _ in range(size)]
        try:
            verify_block_criterion(outer, blocks)
            ok = True
        except BlockCriterionViolation:
            ok = False
        report.check(ok, "block criterion disagrees with brute force")
        checked += 1

    # shifted 2r x 2r matrices: invertible whenever base^den is not +-1
    for text in bases:
        base = parse_scalar(text, ctx)
        for r in r_values:
            for a in shifts:
                report.check(
                    _invertible(build_shifted_matrix(r, base, a)),
                    lambda: f"shifted matrix r={r}, lambda={text}, a={a} is singular",
                )
            for b in exponents:
                report.check(
                    _invertible(build_shifted_matrix(r, base, 0, b.numerator, b.denominator)),
                    lambda: f"shifted matrix r={r}, lambda^(1/{b.denominator})={text}, b={b} is singular",
                )
    report.check(not _invertible(build_shifted_matrix(1, ctx.one, 0)), "lambda = 1 must be singular")
    logger.debug("matrix lemmas: %d cases, %d failed", report.cases_total, report.cases_failed)
    return report
