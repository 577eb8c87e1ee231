"""The sub-Hopf algebras H-bullet of the presented duals and the evaluation pairing.

H-bullet words:

* dihedral: Z(1,1) F2^s and X(1,1) F2^s
* Taft: Omega^j F2^s F1^l
* Liu: Psi(1, gamma^j) F2^s F1^l
* D: G^k F2^s F1^l with G = Z(1,gamma) + xi X(1,gamma), k < 2m (two-word elements)

Undivided powers are enumerated; divided-power scalars do not change spans.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Hashable, Sequence

from hopfdual.algebra.element import Element
from hopfdual.algebra.hopf import lin_antipode, lin_comul, lin_counit
from hopfdual.duals.presented import SECTOR_X, SECTOR_Z, DPresented, LiuPresented, PresentedDual, TaftPresented
from hopfdual.reporting.report import Report
from hopfdual.scalars.cyclotomic import CycloScalar

__all__ = [
    "HBulletBasisSpec",
    "hbullet_basis",
    "pair",
    "verify_hbullet_closure",
    "verify_pairing_axioms",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HBulletBasisSpec:
    s_max: int = 0


def _power(dual: PresentedDual, element: Element, exponent: int) -> Element:
    return dual.product(*([element] * exponent))


def hbullet_basis(dual: PresentedDual, spec: HBulletBasisSpec) -> list[Element]:
    """The H-bullet monomials with F2-degree at most ``spec.s_max``, in lex order."""

    s_range = range(spec.s_max + 1)
    if isinstance(dual, DPresented) and dual.algebra.family == "dihedral":
        return [
            dual.product(dual.word(sector), _power(dual, dual.f2(), s))
            for sector in (SECTOR_Z, SECTOR_X)
            for s in s_range
        ]
    if isinstance(dual, TaftPresented):
        p = dual.params
        return [dual.word(j=j, s=s, l=l) for j in range(p.n) for s in s_range for l in range(p.m)]
    if isinstance(dual, LiuPresented):
        p = dual.params
        return [
            dual.word(1, p.gamma**j, s, l)
            for j in range(p.n)
            for s in s_range
            for l in range(p.n)
        ]
    p = dual.params
    f1_powers = [dual.unit()] + [_power(dual, dual.f1(), l) for l in range(1, p.m)]
    return [
        dual.product(dual.grouplike(k), _power(dual, dual.f2(), s), f1_powers[l])
        for k in range(2 * p.m)
        for s in s_range
        for l in range(p.m)
    ]


def pair(dual: PresentedDual, word: Element, key: Hashable) -> CycloScalar:
    """<w, b> = Theta(w)(b)."""

    return dual.theta(word)(key)


def verify_pairing_axioms(
    dual: PresentedDual,
    functionals: Sequence[Element],
    elements: Sequence[Hashable],
    *,
    count: int = 50,
    seed: int = 0,
) -> Report:
    """The five Hopf-pairing axioms on ``count`` seeded random tuples each."""

    report = Report(suite="pairing-axioms", family=dual.family, params=dual.params.as_dict())
    h = dual.algebra
    h_struct = h.structure()
    p_struct = dual.structure()
    fmt = h.format_basis
    rng = random.Random(seed)
    unit_key = h.unit_key()
    one = dual.theta(dual.unit())

    for _ in range(count):
        f, f2 = rng.choice(functionals), rng.choice(functionals)
        b, b2 = rng.choice(elements), rng.choice(elements)
        theta_f, theta_f2 = dual.theta(f), dual.theta(f2)

        # (i) <f f', h> = sum <f, h1><f', h2>
        lhs = dual.theta(dual.product(f, f2))(b)
        rhs = h.ctx.zero
        for (x, y), c in h.comul_b(b).terms():
            rhs = rhs + c * theta_f(x) * theta_f2(y)
        report.check(lhs == rhs, lambda: f"(i) on {p_struct.fmt(f)} * {p_struct.fmt(f2)} at {fmt(b)}")

        # (ii) <f, h h'> = sum <f1, h><f2, h'>
        lhs = theta_f.on(h.mul_b(b, b2))
        rhs = h.ctx.zero
        for (w1, w2), c in lin_comul(p_struct, f).terms():
            left = dual.theta_word(w1)(b)
            if not left.is_zero():
                rhs = rhs + c * left * dual.theta_word(w2)(b2)
        report.check(lhs == rhs, lambda: f"(ii) on {p_struct.fmt(f)} at {fmt(b)} * {fmt(b2)}")

        # (iii) <1, h> = eps(h) and (iv) <f, 1> = eps(f)
        report.check(one(b) == h_struct.counit_b(b), lambda: f"(iii) at {fmt(b)}")
        report.check(
            theta_f(unit_key) == lin_counit(p_struct, f),
            lambda: f"(iv) on {p_struct.fmt(f)}",
        )

        # (v) <f, S(h)> = <S(f), h>
        lhs = theta_f.on(h_struct.antipode_b(b))
        rhs = dual.theta(lin_antipode(p_struct, f))(b)
        report.check(lhs == rhs, lambda: f"(v) on {p_struct.fmt(f)} at {fmt(b)}")
    logger.debug("pairing axioms on %s: %d cases, %d failed", dual.family, report.cases_total, report.cases_failed)
    return report


class _Echelon:
    """Row-echelon span of Elements for exact membership tests."""

    def __init__(self) -> None:
        self.rows: list[tuple[Hashable, Element]] = []

    def reduce(self, vector: Element) -> Element:
        for pivot, row in self.rows:
            coeff = vector.coeff(pivot)
            if coeff != 0:
                vector = vector - row.scale(coeff)
        return vector

    def add(self, vector: Element) -> bool:
        vector = self.reduce(vector)
        if vector.is_zero():
            return False
        pivot, coeff = vector.items()[0]
        self.rows.append((pivot, vector.scale(coeff.inverse())))
        return True

    def __contains__(self, vector: Element) -> bool:
        return self.reduce(vector).is_zero()


def verify_hbullet_closure(dual: PresentedDual, spec: HBulletBasisSpec) -> Report:
    """Delta of every H-bullet element lies in span(H-bullet) (x) span(H-bullet).

    A tensor lies in V (x) V iff every left slice and every right slice lies in V.
    """

    report = Report(suite="hbullet-closure", family=dual.family, params=dual.params.as_dict())
    p_struct = dual.structure()
    basis = hbullet_basis(dual, spec)
    span = _Echelon()
    for element in basis:
        span.add(element)
    report.details["dimension"] = len(span.rows)
    for element in basis:
        delta = lin_comul(p_struct, element)
        left_slices: dict[Hashable, list] = {}
        right_slices: dict[Hashable, list] = {}
        for (a, b), c in delta.terms():
            left_slices.setdefault(a, []).append((b, c))
            right_slices.setdefault(b, []).append((a, c))
        outside = next(
            (
                key
                for key, terms in itertools.chain(left_slices.items(), right_slices.items())
                if Element(terms) not in span
            ),
            None,
        )
        report.check(
            outside is None,
            lambda: f"Delta({p_struct.fmt(element)}) leaves H-bullet at slice {dual.format_basis(outside)}",
        )
    return report
