"""Closed-form generators of the finite duals of T(n, v, xi), B(n, omega, gamma) and D(m, d, xi).

Pairs (alpha, beta) are the primitive data of the B and D generators:
alpha plays lambda^(1/omega) and beta plays lambda^(1/n) (resp. lambda^(1/m)),
so every fractional power of lambda is an integer power of alpha or beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from hopfdual.errors import FamilyMismatchError, ParameterError
from hopfdual.families.base import FamilyAlgebra
from hopfdual.families.dmx import SECTOR_U, SECTOR_Y, DAlgebra, DIdx
from hopfdual.families.liu import LiuAlgebra, LiuIdx
from hopfdual.families.taft import TaftAlgebra, TaftIdx
from hopfdual.algebra.hopf import HopfStructure
from hopfdual.duals.functionals import ClosedForm, Counit, DualFunctional, LinearCombination
from hopfdual.scalars.combinatorics import q_factorial
from hopfdual.scalars.cyclotomic import CycloScalar, Scalar

__all__ = [
    "DDual",
    "DualGenSpec",
    "GeneratorFactory",
    "LiuDual",
    "TaftDual",
    "dual_generators",
    "make_generator",
]


class _Factory:
    """Shared pieces: the counit, the structure and cached generators."""

    def __init__(self, algebra: FamilyAlgebra):
        self.algebra = algebra
        self.structure = algebra.structure()
        self.ctx = algebra.ctx
        self._cache: dict[tuple[Any, ...], DualFunctional] = {}

    def _cached(self, key: tuple[Any, ...], build) -> DualFunctional:
        functional = self._cache.get(key)
        if functional is None:
            functional = build()
            self._cache[key] = functional
        return functional

    def counit(self) -> DualFunctional:
        return self._cached(("eps",), lambda: Counit(self.structure))

    def scalar(self, value: Scalar) -> CycloScalar:
        return self.ctx.scalar(value)


class TaftDual(_Factory):
    """psi_lambda, omega, E1, E2 on g^j x^l."""

    algebra: TaftAlgebra

    @property
    def m(self) -> int:
        return self.algebra.params.m

    def psi(self, lam: Scalar) -> DualFunctional:
        lam = self.scalar(lam)
        m = self.m

        def formula(key: TaftIdx) -> Scalar:
            if key.l % m:
                return 0
            u = key.l // m
            return 1 if u == 0 else lam**u

        return self._cached(("psi", lam), lambda: ClosedForm(self.structure, f"psi({lam})", formula))

    def omega(self) -> DualFunctional:
        xi = self.algebra.params.xi
        return self._cached(
            ("omega",),
            lambda: ClosedForm(self.structure, "omega", lambda key: xi**key.j if key.l == 0 else 0),
        )

    def e1(self) -> DualFunctional:
        return self._cached(("E1",), lambda: ClosedForm(self.structure, "E1", lambda key: int(key.l == 1)))

    def e2(self) -> DualFunctional:
        m = self.m
        return self._cached(("E2",), lambda: ClosedForm(self.structure, "E2", lambda key: int(key.l == m)))

    def e1_divided(self, k: int) -> DualFunctional:
        """E1^[k] = E1^k / k!_(xi^v)."""

        factor = q_factorial(k, self.algebra.params.q).inverse()
        return self._cached(("E1[]", k), lambda: self.e1() ** k * factor)

    def e2_divided(self, s: int) -> DualFunctional:
        return self._cached(("E2[]", s), lambda: self.e2() ** s * Fraction(1, math.factorial(s)))

    def sigma(self, c: int) -> DualFunctional:
        """(m/n) sum_t xi^(-tmc) omega^(tm), the idempotent picking g^j with j = c mod n/m."""

        p = self.algebra.params
        m = self.m
        terms = [(self.omega() ** (t * m), p.xi ** (-t * m * c) * Fraction(m, p.n)) for t in range(p.n // m)]
        return _combination(self.structure, terms, f"sigma_{c}")


class LiuDual(_Factory):
    """psi_(alpha, beta) with alpha^omega = beta^n, E1, E2 on x^i g^j y^l."""

    algebra: LiuAlgebra

    def pair(self, alpha: Scalar, beta: Scalar) -> tuple[CycloScalar, CycloScalar]:
        p = self.algebra.params
        alpha, beta = self.scalar(alpha), self.scalar(beta)
        if alpha.is_zero() or alpha**p.omega != beta**p.n:
            raise ParameterError("alpha^omega = beta^n with alpha nonzero", f"alpha={alpha}, beta={beta}")
        return alpha, beta

    def pair_over(self, alpha: Scalar, beta: Scalar | None = None) -> tuple[CycloScalar, CycloScalar]:
        """The pair (alpha, beta); beta defaults to alpha^(omega/n) when n divides omega."""

        p = self.algebra.params
        if beta is None:
            if p.omega % p.n:
                raise ParameterError("beta is required unless n divides omega", f"n={p.n}, omega={p.omega}")
            beta = self.scalar(alpha) ** (p.omega // p.n)
        return self.pair(alpha, beta)

    def psi(self, alpha: Scalar, beta: Scalar) -> DualFunctional:
        alpha, beta = self.pair(alpha, beta)

        def formula(key: LiuIdx) -> Scalar:
            return alpha**key.i * beta**key.j if key.l == 0 else 0

        return self._cached(("psi", alpha, beta), lambda: ClosedForm(self.structure, f"psi({alpha},{beta})", formula))

    def e1(self) -> DualFunctional:
        if self.algebra.params.n == 1:
            raise ParameterError("E1 needs n >= 2", "y is not a basis monomial when n = 1")
        return self._cached(("E1",), lambda: ClosedForm(self.structure, "E1", lambda key: int(key.l == 1)))

    def e2(self) -> DualFunctional:
        p = self.algebra.params

        def formula(key: LiuIdx) -> Scalar:
            return Fraction(key.i, p.omega) + Fraction(key.j, p.n) if key.l == 0 else 0

        return self._cached(("E2",), lambda: ClosedForm(self.structure, "E2", formula))

    def e1_divided(self, k: int) -> DualFunctional:
        factor = q_factorial(k, self.algebra.params.gamma).inverse()
        return self._cached(("E1[]", k), lambda: self.e1() ** k * factor)

    def e2_divided(self, s: int) -> DualFunctional:
        return self._cached(("E2[]", s), lambda: self.e2() ** s * Fraction(1, math.factorial(s)))


class DDual(_Factory):
    """zeta and chi (the two sectors), E1, E2 on D(m, d, xi)."""

    algebra: DAlgebra

    def pair(self, alpha: Scalar, beta: Scalar) -> tuple[CycloScalar, CycloScalar]:
        p = self.algebra.params
        alpha, beta = self.scalar(alpha), self.scalar(beta)
        if alpha.is_zero() or alpha**p.omega != beta**p.m:
            raise ParameterError("alpha^omega = beta^m with alpha nonzero", f"alpha={alpha}, beta={beta}")
        return alpha, beta

    def _sector_character(self, sector: str, alpha: Scalar, beta: Scalar, name: str) -> DualFunctional:
        alpha, beta = self.pair(alpha, beta)

        def formula(key: DIdx) -> Scalar:
            if key.sector != sector or key.l != 0:
                return 0
            return alpha**key.i * beta**key.j

        return self._cached(
            (name, alpha, beta), lambda: ClosedForm(self.structure, f"{name}({alpha},{beta})", formula)
        )

    def zeta(self, alpha: Scalar, beta: Scalar) -> DualFunctional:
        return self._sector_character(SECTOR_Y, alpha, beta, "zeta")

    def chi(self, alpha: Scalar, beta: Scalar) -> DualFunctional:
        return self._sector_character(SECTOR_U, alpha, beta, "chi")

    def e1(self) -> DualFunctional:
        p = self.algebra.params
        if p.m == 1:
            raise ParameterError("E1 does not exist for m = 1", "1 - gamma^-1 = 0")
        u_value = p.xi / (1 - p.gamma ** -1)

        def formula(key: DIdx) -> Scalar:
            if key.l != 1:
                return 0
            return 1 if key.sector == SECTOR_Y else u_value

        return self._cached(("E1",), lambda: ClosedForm(self.structure, "E1", formula))

    def e2(self) -> DualFunctional:
        p = self.algebra.params

        def formula(key: DIdx) -> Scalar:
            return Fraction(key.i, p.omega) + Fraction(key.j, p.m) if key.l == 0 else 0

        return self._cached(("E2",), lambda: ClosedForm(self.structure, "E2", formula))

    def e1_divided(self, k: int) -> DualFunctional:
        factor = q_factorial(k, self.algebra.params.gamma).inverse()
        return self._cached(("E1[]", k), lambda: self.e1() ** k * factor)

    def e2_divided(self, s: int) -> DualFunctional:
        return self._cached(("E2[]", s), lambda: self.e2() ** s * Fraction(1, math.factorial(s)))

    def grouplike(self, k: int) -> DualFunctional:
        """(zeta_(1,gamma) + xi chi_(1,gamma))^k = zeta_(1,gamma^k) + xi^k chi_(1,gamma^k)."""

        p = self.algebra.params
        beta = p.gamma**k

        def build() -> DualFunctional:
            functional = self.zeta(1, beta) + self.chi(1, beta) * p.xi**k
            functional.label = f"G^{k}"
            return functional

        return self._cached(("G", k), build)

    # kD_infinity = D(1, 1, -1): alpha = beta = lambda
    def dihedral_zeta(self, lam: Scalar) -> DualFunctional:
        return self.zeta(lam, lam)

    def dihedral_chi(self, lam: Scalar) -> DualFunctional:
        return self.chi(lam, lam)


GeneratorFactory = Union[TaftDual, LiuDual, DDual]


def _combination(structure: HopfStructure, terms, label: str) -> DualFunctional:
    functional = LinearCombination(structure, terms)
    functional.label = label
    return functional


def dual_generators(algebra: FamilyAlgebra) -> GeneratorFactory:
    if isinstance(algebra, TaftAlgebra):
        return TaftDual(algebra)
    if isinstance(algebra, LiuAlgebra):
        return LiuDual(algebra)
    if isinstance(algebra, DAlgebra):
        return DDual(algebra)
    raise ParameterError("no dual generators for this algebra", type(algebra).__name__)


@dataclass(frozen=True)
class DualGenSpec:
    """One generator request: family tag, kind and exact parameters.

    kinds: taft psi(lam) | omega | E1 | E2; liu psi(alpha, beta) | E1 | E2;
    dmx zeta(alpha, beta) | chi(alpha, beta) | E1 | E2 | G(k);
    dihedral zeta(lam) | chi(lam) | E2.
    """

    family: str
    kind: str
    params: tuple[Any, ...] = ()


_KINDS: dict[str, dict[str, str]] = {
    "taft": {"psi": "psi", "omega": "omega", "E1": "e1", "E2": "e2"},
    "liu": {"psi": "psi", "E1": "e1", "E2": "e2"},
    "dmx": {"zeta": "zeta", "chi": "chi", "E1": "e1", "E2": "e2", "G": "grouplike"},
    "dihedral": {"zeta": "dihedral_zeta", "chi": "dihedral_chi", "E2": "e2"},
}


def make_generator(algebra: FamilyAlgebra, spec: DualGenSpec) -> DualFunctional:
    if spec.family != algebra.family:
        raise FamilyMismatchError(spec.family, algebra.family)
    method = _KINDS.get(spec.family, {}).get(spec.kind)
    if method is None:
        raise ParameterError(f"unknown generator '{spec.kind}' for family '{spec.family}'")
    return getattr(dual_generators(algebra), method)(*spec.params)
