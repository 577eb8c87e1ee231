"""The invertible matrices behind the independence arguments for the three families.

Each builder returns the exact matrix together with its determinant. The
Taft matrix is additionally compared with its Kronecker factorization, the D
matrices with the block criterion, and the Taft and Liu matrices can be
re-assembled by evaluating the dual functionals on H (``cross_check``).

Index orders are lexicographic:

* P3.3 (Taft): rows (j, s, l), columns (j', s', l'), s < n r.
* P4.3 (Liu): rows (i, j, s, l), columns (i', j', s', l') over omega x n x r x n.
* P5.6-case1 (D): rows (e, i, k, s, l) over 2 x omega x 2m x r x m.
* P5.6-case2/3 (D): rows (i, k, s, l) over omega x 2m x r x m.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from hopfdual.duals.functionals import product
from hopfdual.duals.generators import LiuDual, TaftDual, dual_generators
from hopfdual.errors import ParameterError, UnsupportedSuiteError
from hopfdual.families.base import FamilyAlgebra
from hopfdual.families.dmx import DAlgebra
from hopfdual.families.liu import LiuAlgebra, LiuIdx
from hopfdual.families.taft import TaftAlgebra, TaftIdx
from hopfdual.linalg.matrix import ExactMatrix, det, kronecker
from hopfdual.linalg.structured import (
    binomial_triangle,
    build_shifted_matrix,
    power_matrix,
    verify_block_criterion,
)
from hopfdual.scalars.cyclotomic import CycloScalar, Scalar, primitive_root

__all__ = ["PROOF_IDS", "ProofMatrixResult", "proof_matrix"]

logger = logging.getLogger(__name__)


@dataclass
class ProofMatrixResult:
    prop_id: str
    matrix: ExactMatrix
    determinant: CycloScalar
    kronecker_match: bool | None = None
    matches_evaluation: bool | None = None
    details: dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def invertible(self) -> bool:
        return not self.determinant.is_zero()

    @property
    def passed(self) -> bool:
        return self.invertible and self.kronecker_match is not False and self.matches_evaluation is not False

    def to_dict(self) -> dict[str, Any]:
        return {
            "prop_id": self.prop_id,
            "size": self.matrix.rows,
            "invertible": self.invertible,
            "determinant": self.determinant.to_string(),
            "kronecker_match": self.kronecker_match,
            "matches_evaluation": self.matches_evaluation,
            "details": self.details,
            "elapsed": round(self.elapsed, 3),
        }


def _grid(*sizes: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for size in sizes:
        out = [prefix + (k,) for prefix in out for k in range(size)]
    return out


def _require(algebra: FamilyAlgebra, kind: type, prop_id: str) -> None:
    if not isinstance(algebra, kind):
        raise UnsupportedSuiteError(f"proof-matrix {prop_id}", algebra.family)


# -- P3.3 ------------------------------------------------------------------------------


def _taft_matrix(algebra: TaftAlgebra, r: int, lam: Scalar, cross_check: bool) -> ProofMatrixResult:
    p = algebra.params
    ctx = algebra.ctx
    lam = ctx.scalar(lam)
    depth = p.n * r
    index = _grid(p.n, depth, p.m)
    matrix = ExactMatrix.from_rows(
        ctx,
        [
            [
                p.xi ** (j * j2) * math.comb(s2, s) * lam ** (s2 - s) if l == l2 and s <= s2 else 0
                for (j2, s2, l2) in index
            ]
            for (j, s, l) in index
        ],
    )
    factored = kronecker(
        kronecker(power_matrix(ctx, [p.xi**j for j in range(p.n)], range(p.n)), binomial_triangle(ctx, depth, lam)),
        ExactMatrix.identity(ctx, p.m),
    )
    result = ProofMatrixResult("P3.3", matrix, det(matrix), kronecker_match=matrix == factored)
    if cross_check:
        gens: TaftDual = dual_generators(algebra)
        psi = gens.psi(lam)

        def functional(j: int, s: int, l: int):
            return product(gens.structure, [psi, gens.omega() ** j, gens.e2_divided(s), gens.e1_divided(l)])

        result.matches_evaluation = matrix == _evaluated(
            ctx, index, functional, lambda j2, s2, l2: TaftIdx(j2, l2 + s2 * p.m)
        )
    return result


# -- P4.3 ------------------------------------------------------------------------------


def _liu_matrix(
    algebra: LiuAlgebra, r: int, alpha: Scalar, beta: Scalar | None, cross_check: bool
) -> ProofMatrixResult:
    p = algebra.params
    ctx = algebra.ctx
    gens: LiuDual = dual_generators(algebra)
    alpha, beta = gens.pair_over(alpha, beta)
    eta = primitive_root(ctx, p.omega)
    index = _grid(p.omega, p.n, r, p.n)

    def entry(row: tuple[int, ...], col: tuple[int, ...]) -> CycloScalar | int:
        i, j, s, l = row
        i2, j2, s2, l2 = col
        if l != l2:
            return 0
        base = (alpha * eta**i) ** i2 * (beta * p.gamma**j) ** (j2 + s2 * p.n)
        return base * (Fraction(i2, p.omega) + Fraction(j2, p.n) + s2) ** s

    matrix = ExactMatrix.from_rows(ctx, [[entry(row, col) for col in index] for row in index])
    result = ProofMatrixResult("P4.3", matrix, det(matrix))
    result.details["lambda"] = (alpha**p.omega).to_string()
    if cross_check:

        def functional(i: int, j: int, s: int, l: int):
            factors = [gens.psi(alpha * eta**i, beta * p.gamma**j), gens.e2() ** s]
            if l:
                factors.append(gens.e1_divided(l))
            return product(gens.structure, factors)

        result.matches_evaluation = matrix == _evaluated(
            ctx, index, functional, lambda i2, j2, s2, l2: LiuIdx(i2, j2 + s2 * p.n, l2)
        )
    return result


# -- P5.6 ------------------------------------------------------------------------------


def _d_case1(algebra: DAlgebra, r: int, alpha: Scalar, beta: Scalar | None) -> ProofMatrixResult:
    p = algebra.params
    ctx = algebra.ctx
    alpha = ctx.scalar(alpha)
    beta = alpha**p.d if beta is None else ctx.scalar(beta)
    alpha, beta = dual_generators(algebra).pair(alpha, beta)
    lam = alpha**p.omega
    if lam == 1 or lam == -1:
        raise ParameterError("lambda must not be 1 or -1", f"lambda={lam}")
    eta = primitive_root(ctx, p.omega)
    outer_index = _grid(p.omega, 2 * p.m, p.m)
    index = [(e, i, k, s, l) for e in range(2) for (i, k, s, l) in _grid(p.omega, 2 * p.m, r, p.m)]

    def entry(row: tuple[int, ...], col: tuple[int, ...]) -> CycloScalar | int:
        e, i, k, s, l = row
        e2, i2, k2, s2, l2 = col
        if l != l2:
            return 0
        half = k2 // 2
        twist = (alpha**i2 * beta**half * lam ** (2 * s2 + e2)) ** (-1 if e else 1)
        shift = Fraction(i2, p.omega) + Fraction(half, p.m) + 2 * s2 + e2
        return twist * eta ** (i * i2) * p.xi ** (k * k2) * shift**s

    matrix = ExactMatrix.from_rows(ctx, [[entry(row, col) for col in index] for row in index])
    outer = _d_outer(algebra, eta)
    blocks = [
        build_shifted_matrix(
            r,
            alpha,
            Fraction(i2, p.omega) + Fraction(k2 // 2, p.m),
            shift_num=i2 + p.d * (k2 // 2),
            shift_den=p.omega,
        )
        for (i2, k2, _l2) in outer_index
    ]
    result = ProofMatrixResult("P5.6-case1", matrix, det(matrix))
    result.details["lambda"] = lam.to_string()
    result.details["block_criterion"] = verify_block_criterion(outer, blocks)
    return result


def _d_case23(algebra: DAlgebra, r: int, twisted: bool, alpha: Scalar | None, beta: Scalar | None) -> ProofMatrixResult:
    p = algebra.params
    ctx = algebra.ctx
    eta = primitive_root(ctx, p.omega)
    if twisted:
        alpha = primitive_root(ctx, 2 * p.omega) if alpha is None else ctx.scalar(alpha)
        beta = primitive_root(ctx, 2 * p.m) if beta is None else ctx.scalar(beta)
    else:
        alpha = beta = ctx.one
    outer_index = _grid(p.omega, 2 * p.m, p.m)
    index = _grid(p.omega, 2 * p.m, r, p.m)

    def weight(i2: int, k2: int) -> CycloScalar:
        return alpha**i2 * beta ** (k2 // 2)

    def shift(i2: int, k2: int, s2: int) -> Fraction:
        return Fraction(i2, p.omega) + Fraction(k2 // 2, p.m) + 2 * s2

    def entry(row: tuple[int, ...], col: tuple[int, ...]) -> CycloScalar | int:
        i, k, s, l = row
        i2, k2, s2, l2 = col
        if l != l2:
            return 0
        return weight(i2, k2) * eta ** (i * i2) * p.xi ** (k * k2) * shift(i2, k2, s2) ** s

    prop_id = "P5.6-case3" if twisted else "P5.6-case2"
    matrix = ExactMatrix.from_rows(ctx, [[entry(row, col) for col in index] for row in index])
    blocks = [
        ExactMatrix.from_rows(
            ctx, [[weight(i2, k2) * shift(i2, k2, s2) ** s for s2 in range(r)] for s in range(r)]
        )
        for (i2, k2, _l2) in outer_index
    ]
    result = ProofMatrixResult(prop_id, matrix, det(matrix))
    result.details["block_criterion"] = verify_block_criterion(_d_outer(algebra, eta), blocks)
    return result


def _d_outer(algebra: DAlgebra, eta: CycloScalar) -> ExactMatrix:
    p = algebra.params
    ctx = algebra.ctx
    return kronecker(
        kronecker(
            power_matrix(ctx, [eta**i for i in range(p.omega)], range(p.omega)),
            power_matrix(ctx, [p.xi**k for k in range(2 * p.m)], range(2 * p.m)),
        ),
        ExactMatrix.identity(ctx, p.m),
    )


# -- shared ----------------------------------------------------------------------------


def _evaluated(ctx, index, functional: Callable, element: Callable) -> ExactMatrix:
    functionals = [functional(*row) for row in index]
    keys = [element(*col) for col in index]
    return ExactMatrix.from_rows(ctx, [[f(key) for key in keys] for f in functionals])


PROOF_IDS = ("P3.3", "P4.3", "P5.6-case1", "P5.6-case2", "P5.6-case3")


def proof_matrix(
    algebra: FamilyAlgebra,
    prop_id: str,
    r: int,
    *,
    lam: Scalar = 0,
    alpha: Scalar | None = None,
    beta: Scalar | None = None,
    cross_check: bool = False,
) -> ProofMatrixResult:
    """Build one independence matrix and certify it by exact determinant.

    ``lam`` is the Taft parameter. Liu and D take the primitive pair
    (alpha, beta) instead, with lambda = alpha^omega.
    """

    if r <= 0:
        raise ParameterError("r must be positive", f"r={r}")
    started = time.perf_counter()
    if prop_id == "P3.3":
        _require(algebra, TaftAlgebra, prop_id)
        result = _taft_matrix(algebra, r, lam, cross_check)
    elif prop_id == "P4.3":
        _require(algebra, LiuAlgebra, prop_id)
        result = _liu_matrix(algebra, r, 3 if alpha is None else alpha, beta, cross_check)
    elif prop_id == "P5.6-case1":
        _require(algebra, DAlgebra, prop_id)
        result = _d_case1(algebra, r, 2 if alpha is None else alpha, beta)
    elif prop_id in ("P5.6-case2", "P5.6-case3"):
        _require(algebra, DAlgebra, prop_id)
        result = _d_case23(algebra, r, prop_id == "P5.6-case3", alpha, beta)
    else:
        raise ParameterError(f"unknown proof matrix '{prop_id}'", f"expected one of {', '.join(PROOF_IDS)}")
    result.elapsed = time.perf_counter() - started
    logger.info(
        "%s on %s: %dx%d, invertible=%s", prop_id, algebra.family, result.matrix.rows, result.matrix.cols, result.invertible
    )
    return result
