"""Cofinite ideals behind the finite-dimensional pieces of the duals.

For a fixed lambda the dual functionals of the matching piece vanish on a
principal ideal:

* Taft: g^j' x^l' (x^m - lambda)^(n r)
* Liu: x^i' g^j' (g^n - lambda)^r y^l'
* D: x^i' g^j' (g^m - lambda)^r (g^m - lambda^-1)^r y^l' (and u_l')

The vanishing reduces to finite differences of polynomials of degree below r.
"""

from __future__ import annotations

import logging
import random
from typing import Hashable, Sequence

from hopfdual.algebra.element import Element
from hopfdual.duals.functionals import DualFunctional, product
from hopfdual.duals.generators import DDual, LiuDual, TaftDual, dual_generators
from hopfdual.errors import ParameterError
from hopfdual.families.base import FamilyAlgebra
from hopfdual.families.dmx import SECTOR_U, SECTOR_Y, DAlgebra
from hopfdual.families.liu import LiuAlgebra
from hopfdual.families.taft import TaftAlgebra, TaftIdx
from hopfdual.linalg.matrix import ExactMatrix, rank
from hopfdual.reporting.report import Report
from hopfdual.scalars.cyclotomic import CycloScalar, Scalar, primitive_root

__all__ = ["ideal_functionals", "ideal_witness", "taft_independence_rank", "verify_ideal_vanishing"]

logger = logging.getLogger(__name__)


def _d_pair(algebra: DAlgebra, alpha: Scalar, beta: Scalar | None) -> tuple[CycloScalar, CycloScalar]:
    alpha = algebra.ctx.scalar(alpha)
    beta = alpha**algebra.params.d if beta is None else beta
    return dual_generators(algebra).pair(alpha, beta)


def ideal_witness(
    algebra: FamilyAlgebra,
    r: int,
    index: tuple[int, ...],
    *,
    lam: Scalar = 0,
    alpha: Scalar = 1,
    beta: Scalar | None = None,
    sector: str = SECTOR_Y,
) -> Element:
    """One generator of the ideal, shifted by the basis monomial named by ``index``.

    ``index`` is (j', l') for Taft and (i', j', l') for Liu and D.
    """

    if r <= 0:
        raise ParameterError("r must be positive", f"r={r}")
    if isinstance(algebra, TaftAlgebra):
        p = algebra.params
        j2, l2 = index
        factor = algebra.monomial(0, p.m) - algebra.unit().scale(algebra.ctx.scalar(lam))
        return algebra.product(algebra.monomial(j2, l2), *([factor] * (p.n * r)))
    if isinstance(algebra, LiuAlgebra):
        p = algebra.params
        alpha, beta = dual_generators(algebra).pair_over(alpha, beta)
        lam = alpha**p.omega
        i2, j2, l2 = index
        factor = algebra.monomial(0, p.n, 0) - algebra.unit().scale(lam)
        return algebra.product(algebra.monomial(i2, j2, 0), *([factor] * r), algebra.monomial(0, 0, l2))
    if isinstance(algebra, DAlgebra):
        p = algebra.params
        alpha, _ = _d_pair(algebra, alpha, beta)
        lam = alpha**p.omega
        i2, j2, l2 = index
        g_m = algebra.y_monomial(0, p.m, 0)
        plus = g_m - algebra.unit().scale(lam)
        minus = g_m - algebra.unit().scale(lam.inverse())
        tail = algebra.y_monomial(0, 0, l2) if sector == SECTOR_Y else algebra.u_monomial(0, 0, l2)
        return algebra.product(algebra.y_monomial(i2, j2, 0), *([plus] * r), *([minus] * r), tail)
    raise ParameterError("no ideal witness for this algebra", type(algebra).__name__)


def ideal_functionals(
    algebra: FamilyAlgebra,
    r: int,
    *,
    lam: Scalar = 0,
    alpha: Scalar = 1,
    beta: Scalar | None = None,
) -> list[DualFunctional]:
    """The spanning functionals of the finite-dimensional piece at lambda."""

    if isinstance(algebra, TaftAlgebra):
        gens: TaftDual = dual_generators(algebra)
        p = algebra.params
        psi = gens.psi(lam)
        return [
            product(gens.structure, [psi, gens.omega() ** j, gens.e2_divided(s), gens.e1_divided(l)])
            for j in range(p.n)
            for s in range(p.n * r)
            for l in range(p.m)
        ]
    if isinstance(algebra, LiuAlgebra):
        liu: LiuDual = dual_generators(algebra)
        p = algebra.params
        alpha, beta = liu.pair_over(alpha, beta)
        eta = primitive_root(algebra.ctx, p.omega)
        return [
            product(
                liu.structure,
                [liu.psi(alpha * eta**i, beta * p.gamma**j), liu.e2() ** s]
                + ([liu.e1_divided(l)] if l else []),
            )
            for i in range(p.omega)
            for j in range(p.n)
            for s in range(r)
            for l in range(p.n)
        ]
    if isinstance(algebra, DAlgebra):
        d: DDual = dual_generators(algebra)
        p = algebra.params
        alpha, beta = _d_pair(algebra, alpha, beta)
        eta = primitive_root(algebra.ctx, p.omega)
        out = []
        for sign in (1, -1):
            for character in (d.zeta, d.chi):
                for i in range(p.omega):
                    for j in range(p.m):
                        head = character(alpha**sign * eta**i, beta**sign * p.gamma**j)
                        for s in range(r):
                            for l in range(p.m):
                                factors = [head, d.e2() ** s] + ([d.e1() ** l] if l else [])
                                out.append(product(d.structure, factors))
        return out
    raise ParameterError("no ideal functionals for this algebra", type(algebra).__name__)


def _witness_indices(algebra: FamilyAlgebra) -> list[tuple[tuple[int, ...], str]]:
    p = algebra.params
    if isinstance(algebra, TaftAlgebra):
        return [((j, l), SECTOR_Y) for j in range(p.n) for l in range(p.m)]
    if isinstance(algebra, LiuAlgebra):
        return [((i, j, l), SECTOR_Y) for i in range(p.omega) for j in range(p.n) for l in range(p.n)]
    return [
        ((i, j, l), sector)
        for sector in (SECTOR_Y, SECTOR_U)
        for i in range(p.omega)
        for j in range(p.m)
        for l in range(p.m)
    ]


def verify_ideal_vanishing(
    algebra: FamilyAlgebra,
    r: int,
    *,
    lam: Scalar = 0,
    alpha: Scalar = 1,
    beta: Scalar | None = None,
    count: int | None = 200,
    seed: int = 0,
) -> Report:
    """Every spanning functional vanishes on every ideal witness.

    With ``count`` set, a seeded sample of (functional, witness) pairs is checked.
    """

    report = Report(suite="ideal-vanishing", family=algebra.family, params=algebra.params.as_dict())
    functionals = ideal_functionals(algebra, r, lam=lam, alpha=alpha, beta=beta)
    witnesses = [
        (index, sector, ideal_witness(algebra, r, index, lam=lam, alpha=alpha, beta=beta, sector=sector))
        for index, sector in _witness_indices(algebra)
    ]
    pairs = [(f, w) for f in functionals for w in witnesses]
    if count is not None and count < len(pairs):
        pairs = random.Random(seed).sample(pairs, count)
    for f, (index, sector, element) in pairs:
        report.check(f.on(element).is_zero(), lambda: f"{f.label} on witness {sector}{index}")
    report.details["functionals"] = len(functionals)
    report.details["witnesses"] = len(witnesses)
    logger.debug("ideal vanishing on %s: %d cases", algebra.family, report.cases_total)
    return report


def taft_independence_rank(algebra: TaftAlgebra, lams: Sequence[Scalar], r: int) -> tuple[int, int]:
    """Rank of {psi_lam omega^j E2^[s] E1^[l]} over distinct lambdas against g^j' x^L.

    Returns (rank, size); full rank shows the sum over distinct lambdas is direct.
    """

    if not isinstance(algebra, TaftAlgebra):
        raise ParameterError("independence check needs a Taft algebra", type(algebra).__name__)
    values = [algebra.ctx.scalar(lam) for lam in lams]
    if len(set(values)) != len(values):
        raise ParameterError("lambdas must be distinct", ", ".join(v.to_string() for v in values))
    gens: TaftDual = dual_generators(algebra)
    p = algebra.params
    functionals = [
        product(gens.structure, [gens.psi(lam), gens.omega() ** j, gens.e2_divided(s), gens.e1_divided(l)])
        for lam in values
        for j in range(p.n)
        for s in range(r)
        for l in range(p.m)
    ]
    keys: list[Hashable] = [TaftIdx(j, big) for j in range(p.n) for big in range(len(values) * r * p.m)]
    matrix = ExactMatrix.from_rows(algebra.ctx, [[f(key) for key in keys] for f in functionals])
    found = rank(matrix)
    logger.info("Taft independence over %d lambdas: rank %d of %d", len(values), found, matrix.rows)
    return found, matrix.rows
