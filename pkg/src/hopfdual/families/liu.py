"""Generalized Liu algebras B(n, omega, gamma).

Central grouplike x^(+-1), grouplike g, and y with yg = gamma g y,
y^n = 1 - x^omega = 1 - g^n, Delta(y) = 1 (x) y + y (x) g.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from hopfdual.algebra.element import Element, Tensor2
from hopfdual.algebra.hopf import HopfStructure
from hopfdual.errors import ParameterError
from hopfdual.families.base import FamilyAlgebra, check_primitive
from hopfdual.scalars.combinatorics import q_binomial
from hopfdual.scalars.cyclotomic import CycloScalar

__all__ = ["LiuAlgebra", "LiuIdx", "LiuParams", "liu_structure"]


@dataclass(frozen=True)
class LiuParams:
    n: int
    omega: int
    gamma: CycloScalar

    def __post_init__(self) -> None:
        if self.n <= 0 or self.omega <= 0:
            raise ParameterError("n and omega must be positive", f"n={self.n}, omega={self.omega}")
        check_primitive(self.gamma, self.n, "gamma")

    def as_dict(self) -> dict[str, str]:
        return {"n": str(self.n), "omega": str(self.omega), "gamma": self.gamma.to_string()}


class LiuIdx(NamedTuple):
    i: int
    j: int
    l: int


class LiuAlgebra(FamilyAlgebra):
    family = "liu"

    def __init__(self, params: LiuParams):
        super().__init__(params, params.gamma.ctx)

    @staticmethod
    def format_basis(key: LiuIdx) -> str:
        return f"x^{key.i} g^{key.j} y^{key.l}"

    def unit_key(self) -> LiuIdx:
        return LiuIdx(0, 0, 0)

    def monomial(self, i: int, j: int, l: int, coeff: CycloScalar | None = None) -> Element:
        """x^i g^j y^l for any integers i, j and l >= 0, reduced to the basis."""

        p = self.params
        coeff = self.ctx.one if coeff is None else coeff
        wraps, i = divmod(i, p.omega)
        j += wraps * p.n
        if l < p.n:
            return Element.basis(LiuIdx(i, j, l), coeff)
        # y^n = 1 - g^n, and g^n is central
        rest = self.monomial(i, j, l - p.n, coeff)
        return rest - self.monomial(i, j + p.n, l - p.n, coeff)

    def _mul_b(self, a: LiuIdx, b: LiuIdx) -> Element:
        return self.monomial(a.i + b.i, a.j + b.j, a.l + b.l, self.params.gamma ** (b.j * a.l))

    def _comul_b(self, a: LiuIdx) -> Tensor2:
        gamma = self.params.gamma
        return Tensor2(
            ((LiuIdx(a.i, a.j, k), LiuIdx(a.i, a.j + k, a.l - k)), q_binomial(a.l, k, gamma))
            for k in range(a.l + 1)
        )

    def counit_b(self, a: LiuIdx) -> CycloScalar:
        return self.ctx.one if a.l == 0 else self.ctx.zero

    def _antipode_b(self, a: LiuIdx) -> Element:
        # S(x^i g^j y^l) = S(y)^l g^-j x^-i with S(y) = -gamma^-1 g^-1 y
        s_y = self.monomial(0, -1, 1, -(self.params.gamma ** -1))
        return self.product(*([s_y] * a.l), self.monomial(0, -a.j, 0), self.monomial(-a.i, 0, 0))

    def basis(self, j_max: int) -> list[LiuIdx]:
        p = self.params
        return [
            LiuIdx(i, j, l)
            for i in range(p.omega)
            for j in range(-j_max, j_max + 1)
            for l in range(p.n)
        ]


def liu_structure(params: LiuParams) -> HopfStructure:
    return LiuAlgebra(params).structure()
