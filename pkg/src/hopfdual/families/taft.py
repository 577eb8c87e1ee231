"""Infinite-dimensional Taft algebras T(n, v, xi).

Generated by a grouplike g of order n and x with xg = xi g x,
Delta(x) = 1 (x) x + x (x) g^v. Basis: g^j x^l, j mod n, l >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from hopfdual.algebra.element import Element, Tensor2
from hopfdual.errors import ParameterError
from hopfdual.families.base import FamilyAlgebra, check_primitive
from hopfdual.scalars.combinatorics import q_binomial
from hopfdual.scalars.cyclotomic import CycloScalar
from hopfdual.algebra.hopf import HopfStructure

__all__ = ["TaftAlgebra", "TaftIdx", "TaftParams", "taft_structure"]


@dataclass(frozen=True)
class TaftParams:
    n: int
    v: int
    xi: CycloScalar

    def __post_init__(self) -> None:
        if self.n <= 0:
            raise ParameterError("n must be positive", f"n={self.n}")
        if not 0 <= self.v <= self.n - 1:
            raise ParameterError("0 <= v <= n-1", f"v={self.v}")
        check_primitive(self.xi, self.n, "xi")

    @property
    def m(self) -> int:
        return self.n // math.gcd(self.n, self.v)

    @property
    def q(self) -> CycloScalar:
        """The coproduct parameter xi^v."""

        return self.xi**self.v

    def as_dict(self) -> dict[str, str]:
        return {"n": str(self.n), "v": str(self.v), "xi": self.xi.to_string()}


class TaftIdx(NamedTuple):
    j: int
    l: int


class TaftAlgebra(FamilyAlgebra):
    """Structure maps of T(n, v, xi) on the basis g^j x^l."""

    family = "taft"

    def __init__(self, params: TaftParams):
        super().__init__(params, params.xi.ctx)

    @staticmethod
    def format_basis(key: TaftIdx) -> str:
        return f"g^{key.j} x^{key.l}"

    def idx(self, j: int, l: int) -> TaftIdx:
        return TaftIdx(j % self.params.n, l)

    def monomial(self, j: int, l: int, coeff: CycloScalar | None = None) -> Element:
        return Element.basis(self.idx(j, l), self.ctx.one if coeff is None else coeff)

    def unit_key(self) -> TaftIdx:
        return TaftIdx(0, 0)

    def _mul_b(self, a: TaftIdx, b: TaftIdx) -> Element:
        # x^l g^j' = xi^(j' l) g^j' x^l
        return self.monomial(a.j + b.j, a.l + b.l, self.params.xi ** (b.j * a.l))

    def _comul_b(self, a: TaftIdx) -> Tensor2:
        p = self.params
        return Tensor2(
            ((self.idx(a.j, k), self.idx(a.j + k * p.v, a.l - k)), q_binomial(a.l, k, p.q))
            for k in range(a.l + 1)
        )

    def counit_b(self, a: TaftIdx) -> CycloScalar:
        return self.ctx.one if a.l == 0 else self.ctx.zero

    def _antipode_b(self, a: TaftIdx) -> Element:
        p = self.params
        s_g = self.monomial(p.n - 1, 0)
        s_x = self.monomial(p.n - p.v, 1, -(p.xi ** (-p.v)))
        # S(g^j x^l) = S(x)^l S(g)^j
        return self.product(*([s_x] * a.l), *([s_g] * a.j))

    def basis(self, l_max: int) -> list[TaftIdx]:
        return [TaftIdx(j, l) for j in range(self.params.n) for l in range(l_max + 1)]


def taft_structure(params: TaftParams) -> HopfStructure:
    return TaftAlgebra(params).structure()
