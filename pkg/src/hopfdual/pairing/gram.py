"""Exact Gram matrices of the H-bullet pairing at a truncation N.

Rows are H monomials, columns are H-bullet functionals; full rank certifies
that the pairing is non-degenerate on the slice.

* D / dihedral: rows x^i g^(floor(k/2) + s m) y^l (k even) or u_l (k odd) over
  omega x 2m x {-N..N} x m; columns G^k' E2^(i' + s' omega + N omega) E1^l'.
* Taft: rows g^j' x^(l' + s' m) with s' <= N; columns omega^j E2^s E1^l with s <= N.
* Liu: rows x^i g^(j + s n) y^l over omega x n x {-N..N} x n; columns
  psi(1, gamma^j') E2^(i' + s' omega + N omega) E1^[l'].
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Hashable

from hopfdual.duals.functionals import DualFunctional, product
from hopfdual.duals.generators import DDual, LiuDual, TaftDual, dual_generators
from hopfdual.errors import ParameterError
from hopfdual.families.base import FamilyAlgebra
from hopfdual.families.dmx import SECTOR_U, SECTOR_Y, DAlgebra, DIdx
from hopfdual.families.liu import LiuAlgebra, LiuIdx
from hopfdual.families.taft import TaftAlgebra, TaftIdx
from hopfdual.linalg.matrix import ExactMatrix, rank

__all__ = ["GramResult", "GramSpec", "gram_matrix", "gram_rank"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GramSpec:
    truncation: int = 1

    def __post_init__(self) -> None:
        if self.truncation < 1:
            raise ParameterError("N >= 1", f"N={self.truncation}")


@dataclass(frozen=True)
class GramResult:
    matrix: ExactMatrix
    rank: int
    elapsed: float

    @property
    def full_rank(self) -> bool:
        return self.rank == min(self.matrix.shape)

    def to_dict(self) -> dict:
        return {
            "rows": self.matrix.rows,
            "cols": self.matrix.cols,
            "rank": self.rank,
            "full_rank": self.full_rank,
            "elapsed": round(self.elapsed, 3),
        }


def _chain(structure, factors: list[DualFunctional]) -> DualFunctional:
    return product(structure, [f for f in factors if f is not None])


def _taft_slice(algebra: TaftAlgebra, n_trunc: int) -> tuple[list[Hashable], list[DualFunctional]]:
    gens: TaftDual = dual_generators(algebra)
    p = algebra.params
    m = p.m
    rows = [
        TaftIdx(j, l + s * m) for j in range(p.n) for s in range(n_trunc + 1) for l in range(m)
    ]
    cols = [
        _chain(
            gens.structure,
            [gens.omega() ** j if j else None, gens.e2() ** s if s else None, gens.e1() ** l if l else None],
        )
        for j in range(p.n)
        for s in range(n_trunc + 1)
        for l in range(m)
    ]
    return rows, cols


def _liu_slice(algebra: LiuAlgebra, n_trunc: int) -> tuple[list[Hashable], list[DualFunctional]]:
    gens: LiuDual = dual_generators(algebra)
    p = algebra.params
    rows = [
        LiuIdx(i, j + s * p.n, l)
        for i in range(p.omega)
        for j in range(p.n)
        for s in range(-n_trunc, n_trunc + 1)
        for l in range(p.n)
    ]
    cols = [
        _chain(
            gens.structure,
            [
                gens.psi(1, p.gamma**j),
                gens.e2() ** (i + s * p.omega + n_trunc * p.omega) if i + s * p.omega + n_trunc * p.omega else None,
                gens.e1_divided(l) if l else None,
            ],
        )
        for j in range(p.n)
        for i in range(p.omega)
        for s in range(-n_trunc, n_trunc + 1)
        for l in range(p.n)
    ]
    return rows, cols


def _d_slice(algebra: DAlgebra, n_trunc: int) -> tuple[list[Hashable], list[DualFunctional]]:
    gens: DDual = dual_generators(algebra)
    p = algebra.params
    rows = [
        DIdx(SECTOR_Y if k % 2 == 0 else SECTOR_U, i, k // 2 + s * p.m, l)
        for i in range(p.omega)
        for k in range(2 * p.m)
        for s in range(-n_trunc, n_trunc + 1)
        for l in range(p.m)
    ]
    cols = []
    for k in range(2 * p.m):
        for i in range(p.omega):
            for s in range(-n_trunc, n_trunc + 1):
                for l in range(p.m):
                    exponent = i + s * p.omega + n_trunc * p.omega
                    cols.append(
                        _chain(
                            gens.structure,
                            [
                                gens.grouplike(k),
                                gens.e2() ** exponent if exponent else None,
                                gens.e1() ** l if l else None,
                            ],
                        )
                    )
    return rows, cols


def gram_matrix(algebra: FamilyAlgebra, spec: GramSpec) -> ExactMatrix:
    n_trunc = spec.truncation
    if isinstance(algebra, TaftAlgebra):
        rows, cols = _taft_slice(algebra, n_trunc)
    elif isinstance(algebra, LiuAlgebra):
        rows, cols = _liu_slice(algebra, n_trunc)
    elif isinstance(algebra, DAlgebra):
        rows, cols = _d_slice(algebra, n_trunc)
    else:
        raise ParameterError("no Gram matrix for this algebra", type(algebra).__name__)
    logger.info("assembling %dx%d Gram matrix for %s", len(rows), len(cols), algebra.family)
    return ExactMatrix.from_rows(algebra.ctx, [[f(key) for f in cols] for key in rows])


def gram_rank(algebra: FamilyAlgebra, spec: GramSpec) -> GramResult:
    started = time.perf_counter()
    matrix = gram_matrix(algebra, spec)
    found = rank(matrix)
    result = GramResult(matrix, found, time.perf_counter() - started)
    logger.info("Gram rank %d of %dx%d", found, matrix.rows, matrix.cols)
    return result
