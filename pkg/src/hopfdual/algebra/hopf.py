"""Hopf-structure contract, linear extensions and axiom checkers."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from hopfdual.algebra.element import Element, Tensor2, tensor
from hopfdual.reporting.report import Report
from hopfdual.scalars.cyclotomic import CycloContext, CycloScalar

__all__ = [
    "HopfStructure",
    "lin_antipode",
    "lin_comul",
    "lin_counit",
    "lin_mul",
    "tensor_mul",
    "verify_associativity",
    "verify_hopf_axioms",
]

logger = logging.getLogger(__name__)

BasisId = Hashable


@dataclass(frozen=True, eq=False)
class HopfStructure:
    """Basis-level structure maps of one Hopf algebra.

    Every returned Element/Tensor2 is already in canonical form on the declared basis.
    """

    family: str
    params: dict[str, str]
    ctx: CycloContext
    mul_b: Callable[[BasisId, BasisId], Element]
    comul_b: Callable[[BasisId], Tensor2]
    counit_b: Callable[[BasisId], CycloScalar]
    antipode_b: Callable[[BasisId], Element]
    unit: Element
    format_basis: Callable[[BasisId], str] = field(default=str)

    @property
    def key(self) -> tuple[str, tuple[tuple[str, str], ...]]:
        return self.family, tuple(sorted(self.params.items()))

    @property
    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({args})"

    def fmt(self, element: Element) -> str:
        return element.format(self.format_basis)

    def fmt_tensor(self, element: Element) -> str:
        if isinstance(element, Tensor2):
            return element.format(self.format_basis)
        return element.format(lambda key: " (x) ".join(self.format_basis(part) for part in key))


def lin_mul(h: HopfStructure, left: Element, right: Element) -> Element:
    out = []
    for a, ca in left.terms():
        for b, cb in right.terms():
            coeff = ca * cb
            for key, c in h.mul_b(a, b).terms():
                out.append((key, coeff * c))
    return Element(out)


def lin_comul(h: HopfStructure, element: Element) -> Tensor2:
    out = []
    for key, coeff in element.terms():
        for pair, c in h.comul_b(key).terms():
            out.append((pair, coeff * c))
    return Tensor2(out)


def lin_antipode(h: HopfStructure, element: Element) -> Element:
    return element.linear_map(h.antipode_b)


def lin_counit(h: HopfStructure, element: Element) -> CycloScalar:
    return h.ctx.scalar(element.functional(h.counit_b))


def tensor_mul(h: HopfStructure, left: Tensor2, right: Tensor2) -> Tensor2:
    """(a (x) b)(c (x) d) = ac (x) bd, extended bilinearly."""

    out = []
    for (a, b), c1 in left.terms():
        for (c, d), c2 in right.terms():
            coeff = c1 * c2
            for (x, y), c3 in tensor(h.mul_b(a, c), h.mul_b(b, d)).terms():
                out.append(((x, y), coeff * c3))
    return Tensor2(out)


def _comul_left(h: HopfStructure, delta: Tensor2) -> Element:
    """(Delta (x) id) Delta as an element keyed by triples."""

    out = []
    for (a, b), c in delta.terms():
        for (x, y), c2 in h.comul_b(a).terms():
            out.append(((x, y, b), c * c2))
    return Element(out)


def _comul_right(h: HopfStructure, delta: Tensor2) -> Element:
    out = []
    for (a, b), c in delta.terms():
        for (x, y), c2 in h.comul_b(b).terms():
            out.append(((a, x, y), c * c2))
    return Element(out)


def verify_hopf_axioms(
    h: HopfStructure,
    test_basis: Iterable[BasisId],
    test_pairs: Iterable[tuple[BasisId, BasisId]] = (),
    *,
    suite: str = "hopf-axioms",
) -> Report:
    """Check coassociativity, counit and antipode laws per basis element and
    multiplicativity of Delta and epsilon per pair."""

    report = Report(suite=suite, family=h.family, params=dict(h.params))
    fb = h.format_basis
    for b in test_basis:
        delta = h.comul_b(b)
        report.check(
            _comul_left(h, delta) == _comul_right(h, delta),
            lambda: f"coassociativity at {fb(b)}",
        )
        this = Element.basis(b, h.ctx.one)
        left_counit = Element((y, c * h.counit_b(x)) for (x, y), c in delta.terms())
        right_counit = Element((x, c * h.counit_b(y)) for (x, y), c in delta.terms())
        report.check(left_counit == this, lambda: f"(eps (x) id)Delta at {fb(b)}: {h.fmt(left_counit)}")
        report.check(right_counit == this, lambda: f"(id (x) eps)Delta at {fb(b)}: {h.fmt(right_counit)}")
        expected = h.unit.scale(h.counit_b(b))
        left_s = Element()
        right_s = Element()
        for (x, y), c in delta.terms():
            left_s = left_s + lin_mul(h, h.antipode_b(x), Element.basis(y, c))
            right_s = right_s + lin_mul(h, Element.basis(x, c), h.antipode_b(y))
        report.check(left_s == expected, lambda: f"m(S (x) id)Delta at {fb(b)}: {h.fmt(left_s)}")
        report.check(right_s == expected, lambda: f"m(id (x) S)Delta at {fb(b)}: {h.fmt(right_s)}")

    for b, b2 in test_pairs:
        product = h.mul_b(b, b2)
        lhs = lin_comul(h, product)
        rhs = tensor_mul(h, h.comul_b(b), h.comul_b(b2))
        report.check(lhs == rhs, lambda: f"Delta not multiplicative on {fb(b)} * {fb(b2)}")
        report.check(
            lin_counit(h, product) == h.counit_b(b) * h.counit_b(b2),
            lambda: f"eps not multiplicative on {fb(b)} * {fb(b2)}",
        )
    logger.debug("%s on %s: %d cases, %d failed", suite, h.label, report.cases_total, report.cases_failed)
    return report


def verify_associativity(
    h: HopfStructure, basis: Sequence[BasisId], *, suite: str = "associativity"
) -> Report:
    """(ab)c == a(bc) on every triple drawn from ``basis``; the unit is checked too."""

    report = Report(suite=suite, family=h.family, params=dict(h.params))
    fb = h.format_basis
    for a, b, c in itertools.product(basis, repeat=3):
        left = lin_mul(h, h.mul_b(a, b), Element.basis(c, h.ctx.one))
        right = lin_mul(h, Element.basis(a, h.ctx.one), h.mul_b(b, c))
        report.check(left == right, lambda: f"({fb(a)} {fb(b)}) {fb(c)} != {fb(a)} ({fb(b)} {fb(c)})")
    for a in basis:
        this = Element.basis(a, h.ctx.one)
        report.check(
            lin_mul(h, h.unit, this) == this and lin_mul(h, this, h.unit) == this,
            lambda: f"unit is not two-sided on {fb(a)}",
        )
    return report
