"""The presented finite duals of T(n, v, xi), B(n, omega, gamma) and D(m, d, xi).

Each presented dual is itself a FamilyAlgebra over normal-form words
``group * F2^s * F1^l``; the group part is Psi_lambda Omega^j (Taft), a pair
Psi_(alpha, beta) (Liu) or a sector letter Z/X with a pair (D). Coproducts of
words are products of generator coproducts, so Delta is multiplicative by
construction. ``theta`` sends a presented element to the dual functional it
names and ``verify_theta`` compares both sides by evaluation.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, NamedTuple, Sequence

from hopfdual.algebra.element import Element, Tensor2, tensor
from hopfdual.algebra.hopf import tensor_mul
from hopfdual.duals.functionals import DualFunctional, LinearCombination, eval_elem, product
from hopfdual.duals.generators import DDual, LiuDual, TaftDual, dual_generators
from hopfdual.errors import ParameterError
from hopfdual.families.base import FamilyAlgebra
from hopfdual.families.dmx import DAlgebra, DParams
from hopfdual.families.liu import LiuAlgebra
from hopfdual.families.taft import TaftAlgebra
from hopfdual.reporting.report import Report
from hopfdual.scalars.combinatorics import discrete_log, q_factorial
from hopfdual.scalars.cyclotomic import CycloScalar, Scalar

__all__ = [
    "DPresented",
    "DWord",
    "LiuPresented",
    "LiuWord",
    "PresentedDual",
    "SECTOR_X",
    "SECTOR_Z",
    "TaftPresented",
    "TaftWord",
    "ThetaConstants",
    "normalize",
    "p_antipode",
    "p_comul",
    "p_counit",
    "presented_dual",
    "theta",
    "theta_constants",
    "verify_theta",
]

logger = logging.getLogger(__name__)

SECTOR_Z = "Z"
SECTOR_X = "X"


def short_scalar(value: CycloScalar) -> str:
    return str(value.as_fraction()) if value.is_rational() else value.to_string()


class TaftWord(NamedTuple):
    lam: CycloScalar
    j: int
    s: int
    l: int


class LiuWord(NamedTuple):
    alpha: CycloScalar
    beta: CycloScalar
    s: int
    l: int


class DWord(NamedTuple):
    sector: str
    alpha: CycloScalar
    beta: CycloScalar
    s: int
    l: int


def _binomial_shift(s: int, shift: Fraction, s_new: int) -> list[tuple[int, Fraction]]:
    """F2^s (F2 + shift)^s_new as pairs (power of F2, coefficient)."""

    if shift == 0:
        return [(s + s_new, Fraction(1))]
    return [(s + t, math.comb(s_new, t) * shift ** (s_new - t)) for t in range(s_new + 1)]


class PresentedDual(FamilyAlgebra):
    """Common machinery; subclasses supply products and generator data."""

    def __init__(self, algebra: FamilyAlgebra):
        super().__init__(algebra.params, algebra.ctx)
        self.algebra = algebra
        self.family = f"{algebra.family}-dual"
        self.gens = dual_generators(algebra)
        self._theta: dict[Hashable, DualFunctional] = {}
        self._generator_comul: dict[str, Tensor2] = {}

    # -- generator data supplied by subclasses ------------------------------------

    @property
    def nil_bound(self) -> int:
        """F1^nil_bound leaves the span of words with l < nil_bound."""

        raise NotImplementedError

    @property
    def q(self) -> CycloScalar:
        """The parameter of the divided powers F1^[k]."""

        raise NotImplementedError

    def f1(self) -> Element:
        raise NotImplementedError

    def f2(self) -> Element:
        raise NotImplementedError

    def group_part(self, word: Hashable) -> Hashable:
        raise NotImplementedError

    def group_comul(self, word: Hashable) -> Tensor2:
        raise NotImplementedError

    def group_antipode(self, word: Hashable) -> Element:
        raise NotImplementedError

    def f1_comul(self) -> Tensor2:
        raise NotImplementedError

    def f2_comul(self) -> Tensor2:
        raise NotImplementedError

    def f1_antipode(self) -> Element:
        raise NotImplementedError

    def f2_antipode(self) -> Element:
        raise NotImplementedError

    def theta_group(self, word: Hashable) -> DualFunctional:
        raise NotImplementedError

    def generator_elements(self, samples: Sequence[Scalar]) -> list[tuple[str, Element]]:
        raise NotImplementedError

    def sample_words(self, samples: Sequence[Scalar], s_max: int) -> list[Hashable]:
        raise NotImplementedError

    # -- shared structure ---------------------------------------------------------

    @property
    def has_f1(self) -> bool:
        return self.nil_bound > 1

    def f1_divided(self, k: int) -> Element:
        """F1^[k] = F1^k / k!_q for 0 <= k < nil_bound."""

        if k == 0:
            return self.unit()
        return self.product(*([self.f1()] * k)).scale(q_factorial(k, self.q).inverse())

    def _cached_comul(self, name: str, build) -> Tensor2:
        delta = self._generator_comul.get(name)
        if delta is None:
            delta = build()
            self._generator_comul[name] = delta
        return delta

    def _comul_b(self, word: Hashable) -> Tensor2:
        h = self.structure()
        result = self.group_comul(self.group_part(word))
        if word.s:
            f2 = self._cached_comul("F2", self.f2_comul)
            for _ in range(word.s):
                result = tensor_mul(h, result, f2)
        if word.l:
            f1 = self._cached_comul("F1", self.f1_comul)
            for _ in range(word.l):
                result = tensor_mul(h, result, f1)
        return result

    def _antipode_b(self, word: Hashable) -> Element:
        factors = [self.f1_antipode()] * word.l + [self.f2_antipode()] * word.s
        return self.product(*factors, self.group_antipode(self.group_part(word)))

    def theta_word(self, word: Hashable) -> DualFunctional:
        functional = self._theta.get(word)
        if functional is None:
            factors = [self.theta_group(self.group_part(word))]
            if word.s:
                factors.append(self.gens.e2() ** word.s)
            if word.l:
                factors.append(self.gens.e1() ** word.l)
            if len(factors) > 1:
                functional = product(self.gens.structure, factors)
                functional.label = self.format_basis(word)
            else:
                functional = factors[0]
            self._theta[word] = functional
        return functional

    def theta(self, element: Element) -> DualFunctional:
        items = element.items()
        if len(items) == 1 and items[0][1] == 1:
            return self.theta_word(items[0][0])
        functional = LinearCombination(self.gens.structure, ((self.theta_word(w), c) for w, c in items))
        functional.label = self.structure().fmt(element)
        return functional


# -- Taft ---------------------------------------------------------------------------


class TaftPresented(PresentedDual):
    """Words Psi_lambda Omega^j F2^s F1^l, j mod n, l < m."""

    algebra: TaftAlgebra
    gens: TaftDual

    @property
    def nil_bound(self) -> int:
        return self.params.m

    @property
    def q(self) -> CycloScalar:
        return self.params.q

    @staticmethod
    def format_basis(word: TaftWord) -> str:
        return f"Psi({short_scalar(word.lam)}) Om^{word.j} F2^{word.s} F1^{word.l}"

    def word(self, lam: Scalar = 0, j: int = 0, s: int = 0, l: int = 0, coeff: Scalar = 1) -> Element:
        if l >= self.params.m:
            return Element()
        return Element.basis(TaftWord(self.ctx.scalar(lam), j % self.params.n, s, l), self.ctx.scalar(coeff))

    def unit_key(self) -> TaftWord:
        return TaftWord(self.ctx.zero, 0, 0, 0)

    def group_part(self, word: TaftWord) -> TaftWord:
        return TaftWord(word.lam, word.j, 0, 0)

    def _mul_b(self, a: TaftWord, b: TaftWord) -> Element:
        # F1 Omega = xi^v Omega F1; Psi and F2 are central
        return self.word(a.lam + b.lam, a.j + b.j, a.s + b.s, a.l + b.l, self.q ** (a.l * b.j))

    def counit_b(self, word: TaftWord) -> CycloScalar:
        return self.ctx.one if word.s == 0 and word.l == 0 else self.ctx.zero

    def f1(self) -> Element:
        return self.word(l=1)

    def f2(self) -> Element:
        return self.word(s=1)

    def omega(self, j: int = 1) -> Element:
        return self.word(j=j)

    def psi(self, lam: Scalar) -> Element:
        return self.word(lam=lam)

    def sigma(self, c: int) -> Element:
        p = self.params
        m = p.m
        out = Element()
        for t in range(p.n // m):
            out = out + self.word(j=t * m, coeff=p.xi ** (-t * m * c) * Fraction(m, p.n))
        return out

    def _correction(self, factor: Scalar) -> Tensor2:
        """sum_(k=1)^(m-1) F1^[k] (x) Omega^k F1^[m-k], scaled."""

        m = self.params.m
        out = Tensor2()
        for k in range(1, m):
            right = self.product(self.omega(k), self.f1_divided(m - k))
            out = out + tensor(self.f1_divided(k), right)
        return out.scale(factor)

    def group_comul(self, word: TaftWord) -> Tensor2:
        p = self.params
        m = p.m
        lam = word.lam
        unit = self.unit()
        correction = tensor(unit, unit) + self._correction(lam)
        psi_part = Tensor2()
        for c in range(p.n // m):
            left = self.psi(lam * p.xi ** (m * c))
            right = self.product(self.psi(lam), self.sigma(c))
            psi_part = psi_part + tensor(left, right)
        h = self.structure()
        delta = tensor_mul(h, psi_part, correction)
        return tensor_mul(h, delta, tensor(self.omega(word.j), self.omega(word.j)))

    def f1_comul(self) -> Tensor2:
        return tensor(self.unit(), self.f1()) + tensor(self.f1(), self.omega())

    def f2_comul(self) -> Tensor2:
        m = self.params.m
        return tensor(self.unit(), self.f2()) + tensor(self.f2(), self.omega(m)) + self._correction(1)

    def group_antipode(self, word: TaftWord) -> Element:
        p = self.params
        s_psi = Element()
        for c in range(p.n // p.m):
            s_psi = s_psi + self.product(self.psi(-word.lam * p.xi ** (-p.m * c)), self.sigma(c))
        return self.product(self.omega(-word.j), s_psi)

    def f1_antipode(self) -> Element:
        p = self.params
        return self.word(j=p.n - 1, l=1, coeff=-(self.q ** -1))

    def f2_antipode(self) -> Element:
        p = self.params
        return self.word(j=p.n - p.m, s=1, coeff=-1)

    def theta_group(self, word: TaftWord) -> DualFunctional:
        psi = self.gens.psi(word.lam)
        return psi * self.gens.omega() ** word.j if word.j else psi

    def generator_elements(self, samples: Sequence[Scalar]) -> list[tuple[str, Element]]:
        gens = [(f"Psi({short_scalar(self.ctx.scalar(lam))})", self.psi(lam)) for lam in samples]
        gens.append(("Om", self.omega()))
        if self.has_f1:
            gens.append(("F1", self.f1()))
        gens.append(("F2", self.f2()))
        return gens

    def sample_words(self, samples: Sequence[Scalar], s_max: int) -> list[TaftWord]:
        p = self.params
        return sorted(
            TaftWord(self.ctx.scalar(lam), j, s, l)
            for lam in {self.ctx.scalar(x) for x in (0, *samples)}
            for j in range(p.n)
            for s in range(s_max + 1)
            for l in range(p.m)
        )


# -- Liu ----------------------------------------------------------------------------


class LiuPresented(PresentedDual):
    """Words Psi_(alpha, beta) F2^s F1^l with alpha^omega = beta^n and l < n."""

    algebra: LiuAlgebra
    gens: LiuDual

    @property
    def nil_bound(self) -> int:
        return self.params.n

    @property
    def q(self) -> CycloScalar:
        return self.params.gamma

    @staticmethod
    def format_basis(word: LiuWord) -> str:
        return f"Psi({short_scalar(word.alpha)},{short_scalar(word.beta)}) F2^{word.s} F1^{word.l}"

    def word(self, alpha: Scalar = 1, beta: Scalar = 1, s: int = 0, l: int = 0, coeff: Scalar = 1) -> Element:
        if l >= self.params.n:
            return Element()
        key = LiuWord(self.ctx.scalar(alpha), self.ctx.scalar(beta), s, l)
        return Element.basis(key, self.ctx.scalar(coeff))

    def unit_key(self) -> LiuWord:
        return LiuWord(self.ctx.one, self.ctx.one, 0, 0)

    def group_part(self, word: LiuWord) -> LiuWord:
        return LiuWord(word.alpha, word.beta, 0, 0)

    def _mul_b(self, a: LiuWord, b: LiuWord) -> Element:
        # F1 Psi = beta Psi F1 and F1 F2 = (F2 + 1/n) F1
        n = self.params.n
        if a.l + b.l >= n:
            return Element()
        twist = b.beta**a.l
        alpha, beta = a.alpha * b.alpha, a.beta * b.beta
        return Element(
            (LiuWord(alpha, beta, power, a.l + b.l), twist * coeff)
            for power, coeff in _binomial_shift(a.s, Fraction(a.l, n), b.s)
        )

    def counit_b(self, word: LiuWord) -> CycloScalar:
        return self.ctx.one if word.s == 0 and word.l == 0 else self.ctx.zero

    def f1(self) -> Element:
        return self.word(l=1)

    def f2(self) -> Element:
        return self.word(s=1)

    def psi(self, alpha: Scalar, beta: Scalar) -> Element:
        alpha, beta = self.gens.pair(alpha, beta)
        return self.word(alpha, beta)

    def _correction(self, factor: Scalar) -> Tensor2:
        """sum_(k=1)^(n-1) F1^[k] (x) Psi_(1, gamma^k) F1^[n-k], scaled."""

        p = self.params
        out = Tensor2()
        for k in range(1, p.n):
            right = self.product(self.word(1, p.gamma**k), self.f1_divided(p.n - k))
            out = out + tensor(self.f1_divided(k), right)
        return out.scale(factor)

    def group_comul(self, word: LiuWord) -> Tensor2:
        lam = word.alpha**self.params.omega
        group = self.word(word.alpha, word.beta)
        unit = self.unit()
        correction = tensor(unit, unit) + self._correction(1 - lam)
        return tensor_mul(self.structure(), tensor(group, group), correction)

    def f1_comul(self) -> Tensor2:
        return tensor(self.unit(), self.f1()) + tensor(self.f1(), self.word(1, self.params.gamma))

    def f2_comul(self) -> Tensor2:
        return tensor(self.unit(), self.f2()) + tensor(self.f2(), self.unit()) - self._correction(1)

    def group_antipode(self, word: LiuWord) -> Element:
        return self.word(word.alpha.inverse(), word.beta.inverse())

    def f1_antipode(self) -> Element:
        gamma, n = self.params.gamma, self.params.n
        return self.word(1, gamma ** (n - 1), 0, 1, -(gamma ** (n - 1)))

    def f2_antipode(self) -> Element:
        return self.word(s=1, coeff=-1)

    def theta_group(self, word: LiuWord) -> DualFunctional:
        return self.gens.psi(word.alpha, word.beta)

    def sample_pairs(self, samples: Sequence[Scalar]) -> list[tuple[CycloScalar, CycloScalar]]:
        """Pairs (a, b) with a^omega = b^n.

        Each sample s gives the pair (s^n, s^omega), next to (1, 1) and (1, gamma).
        """

        p = self.params
        pairs = {(self.ctx.one, self.ctx.one), (self.ctx.one, p.gamma)}
        for value in samples:
            value = self.ctx.scalar(value)
            if not value.is_zero():
                pairs.add((value**p.n, value**p.omega))
        return sorted(pairs)

    def generator_elements(self, samples: Sequence[Scalar]) -> list[tuple[str, Element]]:
        gens = [
            (f"Psi({short_scalar(a)},{short_scalar(b)})", self.word(a, b))
            for a, b in self.sample_pairs(samples)
            if not (a == 1 and b == 1)
        ]
        if self.has_f1:
            gens.append(("F1", self.f1()))
        gens.append(("F2", self.f2()))
        return gens

    def sample_words(self, samples: Sequence[Scalar], s_max: int) -> list[LiuWord]:
        return sorted(
            LiuWord(a, b, s, l)
            for a, b in self.sample_pairs(samples)
            for s in range(s_max + 1)
            for l in range(self.params.n)
        )


# -- D ------------------------------------------------------------------------------


@dataclass(frozen=True)
class ThetaConstants:
    """theta_0 = m(1 - alpha^d), theta_k = (1 - gamma^k alpha^d)/(1 - gamma^k).

    Their product is 1 - alpha^omega; partial products are always taken
    directly so nothing is divided by a vanishing theta.
    """

    alpha: CycloScalar
    thetas: tuple[CycloScalar, ...]

    def prefix(self, k: int) -> CycloScalar:
        """theta_0 theta_1 ... theta_(k-1)."""

        return math.prod(self.thetas[:k], start=self.alpha**0)

    def product_except(self, t: int) -> CycloScalar:
        return math.prod((th for i, th in enumerate(self.thetas) if i != t), start=self.alpha**0)

    def total(self) -> CycloScalar:
        return self.prefix(len(self.thetas))


def theta_constants(params: DParams, alpha: Scalar) -> ThetaConstants:
    alpha = params.xi.ctx.scalar(alpha)
    mu = alpha**params.d
    gamma = params.gamma
    thetas = [(1 - mu) * params.m]
    thetas += [(1 - gamma**k * mu) / (1 - gamma**k) for k in range(1, params.m)]
    return ThetaConstants(alpha, tuple(thetas))


class DPresented(PresentedDual):
    """Words Z_(alpha,beta) F2^s F1^l and X_(alpha,beta) F2^s F1^l, alpha^omega = beta^m, l < m.

    The unit is Z_(1,1) + X_(1,1); words of different sectors multiply to zero.
    """

    algebra: DAlgebra
    gens: DDual

    @property
    def nil_bound(self) -> int:
        return self.params.m

    @property
    def q(self) -> CycloScalar:
        return self.params.gamma

    @property
    def kappa(self) -> CycloScalar:
        """F1^m = kappa X_(1,1)."""

        return (1 - self.params.gamma) ** (-self.params.m)

    @staticmethod
    def format_basis(word: DWord) -> str:
        return f"{word.sector}({short_scalar(word.alpha)},{short_scalar(word.beta)}) F2^{word.s} F1^{word.l}"

    def word(
        self, sector: str, alpha: Scalar = 1, beta: Scalar = 1, s: int = 0, l: int = 0, coeff: Scalar = 1
    ) -> Element:
        key = DWord(sector, self.ctx.scalar(alpha), self.ctx.scalar(beta), s, l)
        return Element.basis(key, self.ctx.scalar(coeff))

    def unit(self) -> Element:
        return self.word(SECTOR_Z) + self.word(SECTOR_X)

    def unit_key(self) -> DWord:
        raise ParameterError("the unit of the D dual is the two-word element Z(1,1) + X(1,1)")

    def group_part(self, word: DWord) -> DWord:
        return DWord(word.sector, word.alpha, word.beta, 0, 0)

    def _mul_b(self, a: DWord, b: DWord) -> Element:
        if a.sector != b.sector:
            return Element()
        p = self.params
        if a.sector == SECTOR_Z:
            twist = b.beta**a.l
            shift = Fraction(a.l, p.m)
        else:
            twist = (b.alpha ** (-p.d) * b.beta) ** a.l
            shift = Fraction(0)
        l = a.l + b.l
        if l >= p.m:
            # F1^m = kappa X_(1,1): zero against Z, absorbed by X
            if a.sector == SECTOR_Z:
                return Element()
            twist = twist * self.kappa
            l -= p.m
        alpha, beta = a.alpha * b.alpha, a.beta * b.beta
        return Element(
            (DWord(a.sector, alpha, beta, power, l), twist * coeff)
            for power, coeff in _binomial_shift(a.s, shift, b.s)
        )

    def counit_b(self, word: DWord) -> CycloScalar:
        if word.sector == SECTOR_Z and word.s == 0 and word.l == 0:
            return self.ctx.one
        return self.ctx.zero

    def f1(self) -> Element:
        if not self.has_f1:
            raise ParameterError("F1 does not exist for m = 1")
        return self.word(SECTOR_Z, l=1) + self.word(SECTOR_X, l=1)

    def f2(self) -> Element:
        return self.word(SECTOR_Z, s=1) + self.word(SECTOR_X, s=1)

    def zeta(self, alpha: Scalar, beta: Scalar) -> Element:
        alpha, beta = self.gens.pair(alpha, beta)
        return self.word(SECTOR_Z, alpha, beta)

    def chi(self, alpha: Scalar, beta: Scalar) -> Element:
        alpha, beta = self.gens.pair(alpha, beta)
        return self.word(SECTOR_X, alpha, beta)

    def grouplike(self, k: int) -> Element:
        """Z_(1,gamma^k) + xi^k X_(1,gamma^k), the k-th power of Z_(1,gamma) + xi X_(1,gamma)."""

        p = self.params
        return self.word(SECTOR_Z, 1, p.gamma**k) + self.word(SECTOR_X, 1, p.gamma**k, coeff=p.xi**k)

    def shift_index(self, alpha: CycloScalar, beta: CycloScalar) -> int:
        """k with beta = alpha^d gamma^k."""

        p = self.params
        return discrete_log(p.gamma, beta * (alpha**p.d).inverse(), p.m)

    def _comul_z_base(self, alpha: CycloScalar) -> Tensor2:
        p = self.params
        m, d, xi, gamma = p.m, p.d, p.xi, p.gamma
        mu = alpha**d
        lam = alpha**p.omega
        th = theta_constants(p, alpha)
        a_inv, mu_inv = alpha.inverse(), mu.inverse()
        lead = alpha ** ((1 - m) * d // 2)
        z = self.word(SECTOR_Z, alpha, mu)
        x = self.word(SECTOR_X, alpha, mu)
        out = tensor(z, z) + tensor(x, self.word(SECTOR_X, a_inv, mu_inv)).scale(lead * th.product_except(0))
        for k in range(1, m):
            left = self.product(z, self.f1_divided(k))
            right = self.product(self.word(SECTOR_Z, alpha, mu * gamma**k), self.f1_divided(m - k))
            out = out + tensor(left, right).scale(1 - lam)
            left = self.product(x, self.f1_divided(k))
            right = self.product(self.word(SECTOR_X, a_inv, mu_inv * gamma**k), self.f1_divided(m - k))
            out = out + tensor(left, right).scale(lead * xi**k * th.product_except(m - k))
        return out

    def _comul_x_base(self, alpha: CycloScalar) -> Tensor2:
        p = self.params
        m, d, xi, gamma = p.m, p.d, p.xi, p.gamma
        mu = alpha**d
        th = theta_constants(p, alpha)
        a_inv, mu_inv = alpha.inverse(), mu.inverse()
        z = self.word(SECTOR_Z, alpha, mu)
        x = self.word(SECTOR_X, alpha, mu)
        out = tensor(z, x) + tensor(x, self.word(SECTOR_Z, a_inv, mu_inv))
        for k in range(1, m):
            left = self.product(z, self.f1_divided(k))
            right = self.product(self.word(SECTOR_X, alpha, mu * gamma**k), self.f1_divided(m - k))
            out = out - tensor(left, right).scale(xi**k * th.prefix(k))
            left = self.product(x, self.f1_divided(k))
            right = self.product(self.word(SECTOR_Z, a_inv, mu_inv * gamma**k), self.f1_divided(m - k))
            out = out - tensor(left, right).scale(mu ** (k - m) * th.prefix(m - k))
        return out

    def group_comul(self, word: DWord) -> Tensor2:
        k = self.shift_index(word.alpha, word.beta)
        if word.sector == SECTOR_Z:
            base = self._comul_z_base(word.alpha)
        else:
            base = self._comul_x_base(word.alpha).scale(self.params.xi ** (-k))
        if k == 0:
            return base
        g = self.grouplike(k)
        return tensor_mul(self.structure(), base, tensor(g, g))

    def f1_comul(self) -> Tensor2:
        return tensor(self.unit(), self.f1()) + tensor(self.f1(), self.grouplike(1))

    def f2_comul(self) -> Tensor2:
        m = self.params.m
        sign = self.word(SECTOR_Z) - self.word(SECTOR_X)
        out = tensor(sign, self.f2()) + tensor(self.f2(), self.unit())
        for k in range(1, m):
            left = self.product(sign, self.f1_divided(k))
            right = self.product(self.grouplike(k - m), self.f1_divided(m - k))
            out = out - tensor(left, right)
        return out

    def group_antipode(self, word: DWord) -> Element:
        if word.sector == SECTOR_Z:
            return self.word(SECTOR_Z, word.alpha.inverse(), word.beta.inverse())
        p = self.params
        k = self.shift_index(word.alpha, word.beta)
        coeff = word.alpha ** ((1 - p.m) * p.d // 2) * p.gamma ** (-k)
        return self.word(SECTOR_X, word.alpha, word.alpha**p.d * p.gamma ** (-k), coeff=coeff)

    def f1_antipode(self) -> Element:
        gamma = self.params.gamma
        return self.product(self.grouplike(-1), self.f1()).scale(-(gamma ** -1))

    def f2_antipode(self) -> Element:
        m = self.params.m
        return (
            self.word(SECTOR_X, s=1)
            - self.word(SECTOR_Z, s=1)
            + self.word(SECTOR_X, coeff=Fraction(1 - m, 2 * m))
        )

    def theta_group(self, word: DWord) -> DualFunctional:
        if word.sector == SECTOR_Z:
            return self.gens.zeta(word.alpha, word.beta)
        return self.gens.chi(word.alpha, word.beta)

    def sample_pairs(self, samples: Sequence[Scalar]) -> list[tuple[CycloScalar, CycloScalar]]:
        """(alpha, alpha^d) for each sample alpha, plus (1, 1) and (1, gamma)."""

        p = self.params
        pairs = {(self.ctx.one, self.ctx.one), (self.ctx.one, p.gamma)}
        for value in samples:
            value = self.ctx.scalar(value)
            if not value.is_zero():
                pairs.add((value, value**p.d))
        return sorted(pairs)

    def generator_elements(self, samples: Sequence[Scalar]) -> list[tuple[str, Element]]:
        gens: list[tuple[str, Element]] = []
        for a, b in self.sample_pairs(samples):
            if a == 1 and b == 1:
                continue
            label = f"({short_scalar(a)},{short_scalar(b)})"
            gens.append((f"Z{label}", self.word(SECTOR_Z, a, b)))
            gens.append((f"X{label}", self.word(SECTOR_X, a, b)))
        if self.has_f1:
            gens.append(("F1", self.f1()))
        gens.append(("F2", self.f2()))
        return gens

    def sample_words(self, samples: Sequence[Scalar], s_max: int) -> list[DWord]:
        return sorted(
            DWord(sector, a, b, s, l)
            for sector in (SECTOR_Z, SECTOR_X)
            for a, b in self.sample_pairs(samples)
            for s in range(s_max + 1)
            for l in range(self.params.m)
        )


# -- module-level API -------------------------------------------------------------


def presented_dual(algebra: FamilyAlgebra) -> PresentedDual:
    if isinstance(algebra, TaftAlgebra):
        return TaftPresented(algebra)
    if isinstance(algebra, LiuAlgebra):
        return LiuPresented(algebra)
    if isinstance(algebra, DAlgebra):
        return DPresented(algebra)
    raise ParameterError("no presented dual for this algebra", type(algebra).__name__)


def normalize(dual: PresentedDual, factors: Iterable[Element]) -> Element:
    """Reduce a product of generators to normal-form words."""

    return dual.product(*factors)


def p_comul(dual: PresentedDual, word: Hashable) -> Tensor2:
    return dual.comul_b(word)


def p_counit(dual: PresentedDual, word: Hashable) -> CycloScalar:
    return dual.counit_b(word)


def p_antipode(dual: PresentedDual, word: Hashable) -> Element:
    return dual.antipode_b(word)


def theta(dual: PresentedDual, element: Element) -> DualFunctional:
    return dual.theta(element)


def _first_mismatch(lhs: DualFunctional, rhs: DualFunctional, basis: Iterable[Hashable]) -> Hashable | None:
    for key in basis:
        if lhs(key) != rhs(key):
            return key
    return None


def sample_basis_pairs(basis: Sequence[Hashable], count: int, seed: int) -> list[tuple[Hashable, Hashable]]:
    """All pairs when there are at most ``count``, otherwise a seeded sample."""

    pairs = list(itertools.product(basis, repeat=2))
    if len(pairs) <= count:
        return pairs
    return random.Random(seed).sample(pairs, count)


def verify_theta(
    dual: PresentedDual,
    *,
    word_length: int,
    basis: Sequence[Hashable],
    samples: Sequence[Scalar],
    s_max: int = 1,
    pair_count: int = 60,
    seed: int = 0,
) -> Report:
    """Theta respects products, coproducts, counit and antipode on the given slice."""

    report = Report(suite="theta", family=dual.family, params=dual.params.as_dict())
    fmt_h = dual.algebra.format_basis
    h_struct = dual.algebra.structure()
    structure = dual.structure()

    gens = dual.generator_elements(samples)
    for length in range(1, word_length + 1):
        for combo in itertools.product(gens, repeat=length):
            labels = " ".join(label for label, _ in combo)
            lhs = theta(dual, normalize(dual, [element for _, element in combo]))
            rhs = product(dual.gens.structure, [theta(dual, element) for _, element in combo])
            bad = _first_mismatch(lhs, rhs, basis)
            report.check(bad is None, lambda: f"product {labels} differs at {fmt_h(bad)}")

    words = dual.sample_words(samples, s_max)
    pairs = sample_basis_pairs(basis, pair_count, seed)
    unit_key = dual.algebra.unit_key()
    for word in words:
        f = dual.theta_word(word)
        label = dual.format_basis(word)
        delta = p_comul(dual, word)
        for b, b2 in pairs:
            lhs_value = eval_elem(f, h_struct.mul_b(b, b2))
            rhs_value = dual.ctx.zero
            for (w1, w2), c in delta.terms():
                left = dual.theta_word(w1)(b)
                if not left.is_zero():
                    rhs_value = rhs_value + c * left * dual.theta_word(w2)(b2)
            report.check(
                lhs_value == rhs_value,
                lambda: f"coproduct of {label} on {fmt_h(b)} (x) {fmt_h(b2)}: {lhs_value} != {rhs_value}",
            )
        report.check(
            f(unit_key) == p_counit(dual, word),
            lambda: f"counit of {label}: {f(unit_key)} != {p_counit(dual, word)}",
        )
        s_f = theta(dual, p_antipode(dual, word))
        for b in basis:
            report.check(
                s_f(b) == eval_elem(f, h_struct.antipode_b(b)),
                lambda: f"antipode of {label} at {fmt_h(b)}: {structure.fmt(p_antipode(dual, word))}",
            )
    logger.debug("theta on %s: %d cases, %d failed", dual.family, report.cases_total, report.cases_failed)
    return report
