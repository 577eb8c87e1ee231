"""Evaluable linear functionals on a Hopf algebra and their convolution algebra.

A functional never stores coefficients over the (infinite) basis; it carries a
closed form or a small tree of convolutions and linear combinations, and
memoizes its values per basis key.
"""

from __future__ import annotations

import logging
from typing import Callable, Hashable, Iterable, Sequence

from hopfdual.algebra.element import Element
from hopfdual.algebra.hopf import HopfStructure
from hopfdual.errors import FamilyMismatchError
from hopfdual.scalars.cyclotomic import CycloScalar, Scalar

__all__ = [
    "ClosedForm",
    "Convolution",
    "Counit",
    "DualFunctional",
    "LinearCombination",
    "convolve",
    "dual_antipode_eval",
    "dual_pair_eval",
    "eval_elem",
    "evaluate",
    "product",
]

logger = logging.getLogger(__name__)


class DualFunctional:
    """A linear functional f: H -> k given by its values on basis keys."""

    def __init__(self, structure: HopfStructure, label: str):
        self.structure = structure
        self.label = label
        self._memo: dict[Hashable, CycloScalar] = {}
        self._powers: dict[int, DualFunctional] = {1: self}

    def _evaluate(self, key: Hashable) -> Scalar:
        raise NotImplementedError

    def evaluate(self, key: Hashable) -> CycloScalar:
        value = self._memo.get(key)
        if value is None:
            value = self.structure.ctx.scalar(self._evaluate(key))
            self._memo[key] = value
        return value

    __call__ = evaluate

    def on(self, element: Element) -> CycloScalar:
        """Value on a linear combination of basis keys."""

        return self.structure.ctx.scalar(element.functional(self.evaluate))

    def _check(self, other: DualFunctional) -> None:
        if other.structure.key != self.structure.key:
            raise FamilyMismatchError(self.structure.label, other.structure.label)

    # -- algebra ------------------------------------------------------------------

    def __mul__(self, other: DualFunctional | Scalar) -> DualFunctional:
        if isinstance(other, DualFunctional):
            self._check(other)
            return Convolution(self, other)
        return LinearCombination(self.structure, ((self, other),))

    def __rmul__(self, other: Scalar) -> DualFunctional:
        return LinearCombination(self.structure, ((self, other),))

    def __add__(self, other: DualFunctional) -> DualFunctional:
        if not isinstance(other, DualFunctional):
            return NotImplemented
        self._check(other)
        return LinearCombination(self.structure, ((self, 1), (other, 1)))

    def __sub__(self, other: DualFunctional) -> DualFunctional:
        if not isinstance(other, DualFunctional):
            return NotImplemented
        self._check(other)
        return LinearCombination(self.structure, ((self, 1), (other, -1)))

    def __neg__(self) -> DualFunctional:
        return LinearCombination(self.structure, ((self, -1),))

    def __pow__(self, exponent: int) -> DualFunctional:
        if exponent < 0:
            raise ValueError("functionals only have non-negative convolution powers")
        if exponent == 0:
            return Counit(self.structure)
        cached = self._powers.get(exponent)
        if cached is None:
            half = self ** (exponent // 2)
            cached = half * half if exponent % 2 == 0 else half * half * self
            cached.label = f"({self.label})^{exponent}"
            self._powers[exponent] = cached
        return cached

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label} on {self.structure.label})"


class ClosedForm(DualFunctional):
    """A generator given by an explicit formula on basis keys."""

    def __init__(self, structure: HopfStructure, label: str, formula: Callable[[Hashable], Scalar]):
        super().__init__(structure, label)
        self.formula = formula

    def _evaluate(self, key: Hashable) -> Scalar:
        return self.formula(key)


class Counit(DualFunctional):
    """The counit, the unit of the convolution algebra."""

    def __init__(self, structure: HopfStructure):
        super().__init__(structure, "eps")

    def _evaluate(self, key: Hashable) -> Scalar:
        return self.structure.counit_b(key)


class Convolution(DualFunctional):
    """(f * g)(h) = sum f(h_(1)) g(h_(2))."""

    def __init__(self, left: DualFunctional, right: DualFunctional):
        super().__init__(left.structure, f"{left.label} {right.label}")
        self.left = left
        self.right = right

    def _evaluate(self, key: Hashable) -> Scalar:
        total: Scalar = 0
        for (a, b), coeff in self.structure.comul_b(key).terms():
            fa = self.left.evaluate(a)
            if fa.is_zero():
                continue
            gb = self.right.evaluate(b)
            if not gb.is_zero():
                total = coeff * fa * gb + total
        return total


class LinearCombination(DualFunctional):
    def __init__(self, structure: HopfStructure, terms: Iterable[tuple[DualFunctional, Scalar]]):
        self.terms = tuple(terms)
        label = " + ".join(f"({coeff})*{f.label}" for f, coeff in self.terms) or "0"
        super().__init__(structure, label)
        for f, _ in self.terms:
            self._check(f)

    def _evaluate(self, key: Hashable) -> Scalar:
        total: Scalar = 0
        for f, coeff in self.terms:
            total = coeff * f.evaluate(key) + total
        return total


def evaluate(f: DualFunctional, key: Hashable) -> CycloScalar:
    return f.evaluate(key)


def eval_elem(f: DualFunctional, element: Element) -> CycloScalar:
    return f.on(element)


def convolve(f: DualFunctional, g: DualFunctional) -> DualFunctional:
    f._check(g)
    return Convolution(f, g)


def product(structure: HopfStructure, factors: Sequence[DualFunctional]) -> DualFunctional:
    """Left-to-right convolution; the empty product is the counit."""

    result: DualFunctional = Counit(structure)
    for index, factor in enumerate(factors):
        result = factor if index == 0 else result * factor
    return result


def dual_pair_eval(f: DualFunctional, left: Hashable, right: Hashable) -> CycloScalar:
    """<f, b b'>, the left side of every coproduct identity."""

    return f.on(f.structure.mul_b(left, right))


def dual_antipode_eval(f: DualFunctional, key: Hashable) -> CycloScalar:
    """<f, S(b)>, i.e. the value of S(f) at b."""

    return f.on(f.structure.antipode_b(key))
