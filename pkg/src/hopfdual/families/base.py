"""Shared plumbing for the concrete Hopf algebra families."""

from __future__ import annotations

import functools
from typing import Any, ClassVar, Hashable

from hopfdual.algebra.element import Element, Tensor2
from hopfdual.algebra.hopf import HopfStructure, lin_mul
from hopfdual.errors import ParameterError
from hopfdual.scalars.cyclotomic import CycloContext, CycloScalar

__all__ = ["FamilyAlgebra", "check_primitive"]


def check_primitive(root: CycloScalar, order: int, name: str) -> None:
    """Raise ParameterError unless ``root`` is a primitive ``order``-th root of unity."""

    if root**order != 1:
        raise ParameterError(f"{name} must satisfy {name}^{order} = 1", root.to_string())
    for t in range(1, order):
        if order % t == 0 and root**t == 1:
            raise ParameterError(f"{name} must be a primitive {order}-th root of unity", root.to_string())


class FamilyAlgebra:
    """Memoized basis-level structure maps plus a lazily built HopfStructure.

    Subclasses implement ``_mul_b``, ``_comul_b``, ``counit_b``, ``_antipode_b``,
    ``unit_key`` and ``format_basis``.
    """

    family: ClassVar[str] = ""

    def __init__(self, params: Any, ctx: CycloContext):
        self.params = params
        self.ctx = ctx
        self.mul_b = functools.lru_cache(maxsize=None)(self._mul_b)
        self.comul_b = functools.lru_cache(maxsize=None)(self._comul_b)
        self.antipode_b = functools.lru_cache(maxsize=None)(self._antipode_b)
        self._structure: HopfStructure | None = None

    def _mul_b(self, a: Hashable, b: Hashable) -> Element:
        raise NotImplementedError

    def _comul_b(self, a: Hashable) -> Tensor2:
        raise NotImplementedError

    def _antipode_b(self, a: Hashable) -> Element:
        raise NotImplementedError

    def counit_b(self, a: Hashable) -> CycloScalar:
        raise NotImplementedError

    def unit_key(self) -> Hashable:
        raise NotImplementedError

    @staticmethod
    def format_basis(key: Hashable) -> str:
        return str(key)

    def unit(self) -> Element:
        return Element.basis(self.unit_key(), self.ctx.one)

    def product(self, *factors: Element) -> Element:
        """Left-to-right product of several elements."""

        result = self.unit()
        structure = self.structure()
        for factor in factors:
            result = lin_mul(structure, result, factor)
        return result

    def structure(self) -> HopfStructure:
        if self._structure is None:
            self._structure = HopfStructure(
                family=self.family,
                params=self.params.as_dict(),
                ctx=self.ctx,
                mul_b=self.mul_b,
                comul_b=self.comul_b,
                counit_b=self.counit_b,
                antipode_b=self.antipode_b,
                unit=self.unit(),
                format_basis=self.format_basis,
            )
        return self._structure
