"""The two-sector Hopf algebras D(m, d, xi) and the infinite dihedral group algebra.

Basis: x^i g^j y^l (sector Y) and x^i g^j u_l (sector U), i mod omega via
x^omega = g^m, j in Z, l mod m. omega = md, gamma = xi^2, and
phi_i = 1 - gamma^(-i-1) x^d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from hopfdual.algebra.element import Element, Tensor2
from hopfdual.algebra.hopf import HopfStructure
from hopfdual.errors import ParameterError
from hopfdual.families.base import FamilyAlgebra, check_primitive
from hopfdual.scalars.combinatorics import q_binomial
from hopfdual.scalars.cyclotomic import CycloContext, CycloScalar, get_context

__all__ = [
    "DAlgebra",
    "DIdx",
    "DParams",
    "SECTOR_U",
    "SECTOR_Y",
    "d_structure",
    "dihedral_algebra",
    "phi_product",
    "u_product",
]

SECTOR_Y = "Y"
SECTOR_U = "U"

XPoly = dict[int, CycloScalar]


@dataclass(frozen=True)
class DParams:
    m: int
    d: int
    xi: CycloScalar

    def __post_init__(self) -> None:
        if self.m <= 0 or self.d <= 0:
            raise ParameterError("m and d must be positive", f"m={self.m}, d={self.d}")
        if (1 + self.m) * self.d % 2:
            raise ParameterError("(1+m)d must be even", f"m={self.m}, d={self.d}")
        check_primitive(self.xi, 2 * self.m, "xi")

    @property
    def omega(self) -> int:
        return self.m * self.d

    @property
    def gamma(self) -> CycloScalar:
        return self.xi**2

    def as_dict(self) -> dict[str, str]:
        return {"m": str(self.m), "d": str(self.d), "xi": self.xi.to_string()}


class DIdx(NamedTuple):
    sector: str
    i: int
    j: int
    l: int


def _poly_mul(left: XPoly, right: XPoly) -> XPoly:
    out: XPoly = {}
    for a, ca in left.items():
        for b, cb in right.items():
            out[a + b] = out[a + b] + ca * cb if a + b in out else ca * cb
    return {e: c for e, c in out.items() if c != 0}


class DAlgebra(FamilyAlgebra):
    """Structure maps of D(m, d, xi); D(1, 1, -1) is the infinite dihedral group algebra."""

    family = "dmx"

    def __init__(self, params: DParams, family: str | None = None):
        super().__init__(params, params.xi.ctx)
        if family is not None:
            self.family = family

    @staticmethod
    def format_basis(key: DIdx) -> str:
        if key.sector == SECTOR_Y:
            return f"x^{key.i} g^{key.j} y^{key.l}"
        return f"x^{key.i} g^{key.j} u_{key.l}"

    def unit_key(self) -> DIdx:
        return DIdx(SECTOR_Y, 0, 0, 0)

    # -- reduction helpers --------------------------------------------------------

    def _reduce_x(self, i: int, j: int) -> tuple[int, int]:
        wraps, i = divmod(i, self.params.omega)
        return i, j + wraps * self.params.m

    def y_monomial(self, i: int, j: int, l: int, coeff: CycloScalar | None = None) -> Element:
        """x^i g^j y^l for any integers i, j and l >= 0, reduced to the basis."""

        p = self.params
        coeff = self.ctx.one if coeff is None else coeff
        i, j = self._reduce_x(i, j)
        if l < p.m:
            return Element.basis(DIdx(SECTOR_Y, i, j, l), coeff)
        # y^m = 1 - g^m, g^m central
        return self.y_monomial(i, j, l - p.m, coeff) - self.y_monomial(i, j + p.m, l - p.m, coeff)

    def u_monomial(self, i: int, j: int, l: int, coeff: CycloScalar | None = None) -> Element:
        coeff = self.ctx.one if coeff is None else coeff
        i, j = self._reduce_x(i, j)
        return Element.basis(DIdx(SECTOR_U, i, j, l % self.params.m), coeff)

    def _sector_term(self, sector: str, coeff: CycloScalar, poly: XPoly, shift: int, j: int, l: int) -> Element:
        build = self.y_monomial if sector == SECTOR_Y else self.u_monomial
        out = Element()
        for e, c in poly.items():
            out = out + build(e + shift, j, l, coeff * c)
        return out

    def phi_chain(self, start: int, count: int) -> XPoly:
        """phi_start phi_(start+1) ... phi_(start+count-1) as an x-polynomial."""

        p = self.params
        poly: XPoly = {0: self.ctx.one}
        for t in range(start, start + count):
            poly = _poly_mul(poly, {0: self.ctx.one, p.d: -(p.gamma ** (-t - 1))})
        return poly

    def u_coefficient(self, j: int) -> CycloScalar:
        """(-1)^j xi^-j gamma^(j(j+1)/2) / m, the scalar of u_i u_j."""

        p = self.params
        sign = -1 if j % 2 else 1
        return p.xi ** (-j) * p.gamma ** (j * (j + 1) // 2) * Fraction(sign, p.m)

    # -- structure maps -----------------------------------------------------------

    def _mul_b(self, a: DIdx, b: DIdx) -> Element:
        p = self.params
        m, d = p.m, p.d
        twist = p.gamma ** (b.j * a.l)
        if a.sector == SECTOR_Y and b.sector == SECTOR_Y:
            return self.y_monomial(a.i + b.i, a.j + b.j, a.l + b.l, twist)
        if a.sector == SECTOR_Y:
            # y^l u_l' = phi_l' ... phi_(l'+l-1) u_(l+l')
            chain = self.phi_chain(b.l, a.l)
            return self._sector_term(SECTOR_U, twist, chain, a.i + b.i, a.j + b.j, a.l + b.l)
        if b.sector == SECTOR_Y:
            # u_l x = x^-1 u_l, u_l g = gamma^l x^-2d g u_l, u_l y^l' = xi^-l' x^-dl' phi_l ... u_(l+l')
            chain = self.phi_chain(a.l, b.l)
            coeff = twist * p.xi ** (-b.l)
            shift = a.i - b.i - 2 * d * b.j - d * b.l
            return self._sector_term(SECTOR_U, coeff, chain, shift, a.j + b.j, a.l + b.l)
        r = (a.l + b.l) % m
        chain = self.phi_chain(a.l, (m - 1 - a.l - b.l) % m)
        # u_l u_l' ends in y^r g = gamma^r g y^r
        coeff = twist * self.u_coefficient(b.l) * p.gamma**r
        shift = a.i - b.i - 2 * d * b.j - (1 + m) * d // 2
        return self._sector_term(SECTOR_Y, coeff, chain, shift, a.j + b.j + 1, r)

    def _comul_b(self, a: DIdx) -> Tensor2:
        p = self.params
        if a.sector == SECTOR_Y:
            return Tensor2(
                ((DIdx(SECTOR_Y, a.i, a.j, k), DIdx(SECTOR_Y, a.i, a.j + k, a.l - k)), q_binomial(a.l, k, p.gamma))
                for k in range(a.l + 1)
            )
        terms = []
        for k in range(p.m):
            i2, j2 = self._reduce_x(a.i - k * p.d, a.j + k)
            right = DIdx(SECTOR_U, i2, j2, (a.l - k) % p.m)
            terms.append(((DIdx(SECTOR_U, a.i, a.j, k), right), p.gamma ** (k * (a.l - k))))
        return Tensor2(terms)

    def counit_b(self, a: DIdx) -> CycloScalar:
        return self.ctx.one if a.l == 0 else self.ctx.zero

    def antipode_u(self, l: int) -> Element:
        """S(u_l) = (-1)^l xi^-l gamma^(-l(l+1)/2) x^(ld + 3(1-m)d/2) g^(m-l-1) u_l."""

        p = self.params
        sign = -1 if l % 2 else 1
        coeff = p.xi ** (-l) * p.gamma ** (-(l * (l + 1) // 2)) * sign
        return self.u_monomial(l * p.d + 3 * (1 - p.m) * p.d // 2, p.m - l - 1, l, coeff)

    def _antipode_b(self, a: DIdx) -> Element:
        tail = (self.y_monomial(0, -a.j, 0), self.y_monomial(-a.i, 0, 0))
        if a.sector == SECTOR_U:
            return self.product(self.antipode_u(a.l), *tail)
        s_y = self.y_monomial(0, -1, 1, -(self.params.gamma ** -1))
        return self.product(*([s_y] * a.l), *tail)

    def basis(self, j_max: int, sectors: tuple[str, ...] = (SECTOR_Y, SECTOR_U)) -> list[DIdx]:
        p = self.params
        return [
            DIdx(sector, i, j, l)
            for sector in sectors
            for i in range(p.omega)
            for j in range(-j_max, j_max + 1)
            for l in range(p.m)
        ]


def d_structure(params: DParams) -> HopfStructure:
    return DAlgebra(params).structure()


def phi_product(params: DParams, start: int, count: int) -> Element:
    algebra = DAlgebra(params)
    return algebra._sector_term(SECTOR_Y, algebra.ctx.one, algebra.phi_chain(start, count), 0, 0, 0)


def u_product(params: DParams, i: int, j: int) -> Element:
    algebra = DAlgebra(params)
    return algebra.mul_b(DIdx(SECTOR_U, 0, 0, i), DIdx(SECTOR_U, 0, 0, j))


def dihedral_algebra(ctx: CycloContext | None = None) -> DAlgebra:
    """D(1, 1, -1): g grouplike, x = u_0 the reflection with x^2 = 1 and xgx = g^-1."""

    ctx = ctx or get_context(2)
    return DAlgebra(DParams(1, 1, ctx.scalar(-1)), family="dihedral")
