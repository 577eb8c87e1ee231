"""Finite linear combinations over an abstract basis."""

from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping

from hopfdual.scalars.cyclotomic import Scalar

__all__ = ["Element", "Tensor2", "format_scalar", "tensor"]


def format_scalar(value: Scalar) -> str:
    to_string = getattr(value, "to_string", None)
    return to_string() if to_string is not None else str(value)


class Element:
    """Map basis key -> scalar with finite support and no stored zeros."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, Scalar] | Iterable[tuple[Hashable, Scalar]] | None = None):
        acc: dict[Hashable, Any] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for key, coeff in items:
            acc[key] = acc[key] + coeff if key in acc else coeff
        self._terms = {key: coeff for key, coeff in acc.items() if coeff != 0}

    @classmethod
    def basis(cls, key: Hashable, coeff: Scalar = 1) -> Element:
        return cls([(key, coeff)])

    @classmethod
    def zero(cls) -> Element:
        return cls()

    # -- access -------------------------------------------------------------------

    def coeff(self, key: Hashable) -> Scalar:
        return self._terms.get(key, 0)

    def support(self) -> list[Hashable]:
        return sorted(self._terms)

    def items(self) -> list[tuple[Hashable, Scalar]]:
        return [(key, self._terms[key]) for key in self.support()]

    def terms(self) -> Iterable[tuple[Hashable, Scalar]]:
        """Unsorted view for hot loops."""

        return self._terms.items()

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        return type(self)([*self._terms.items(), *other._terms.items()])

    def __sub__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        return type(self)([*self._terms.items(), *((k, -c) for k, c in other._terms.items())])

    def __neg__(self) -> Element:
        return type(self)((k, -c) for k, c in self._terms.items())

    def scale(self, factor: Scalar) -> Element:
        if factor == 0:
            return type(self)()
        return type(self)((k, c * factor) for k, c in self._terms.items())

    def __mul__(self, factor: Scalar) -> Element:
        if isinstance(factor, Element):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def linear_map(self, fn: Callable[[Hashable], Element]) -> Element:
        """Extend ``fn`` (basis key -> Element) linearly."""

        out: list[tuple[Hashable, Scalar]] = []
        for key, coeff in self._terms.items():
            for image_key, image_coeff in fn(key)._terms.items():
                out.append((image_key, coeff * image_coeff))
        return Element(out)

    def functional(self, fn: Callable[[Hashable], Scalar]) -> Scalar:
        """Extend a scalar-valued ``fn`` linearly."""

        total: Scalar = 0
        for key, coeff in self._terms.items():
            value = fn(key)
            if value != 0:
                total = coeff * value + total
        return total

    # -- comparison / display -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def format(self, fmt: Callable[[Hashable], str] = str) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({format_scalar(c)})*{fmt(k)}" for k, c in self.items())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format()})"


class Tensor2(Element):
    """Element of H (x) H keyed by basis pairs."""

    __slots__ = ()

    def format(self, fmt: Callable[[Hashable], str] = str) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            f"({format_scalar(c)})*{fmt(a)} (x) {fmt(b)}" for (a, b), c in self.items()
        )


def tensor(left: Element, right: Element) -> Tensor2:
    return Tensor2(
        ((a, b), ca * cb) for a, ca in left.terms() for b, cb in right.terms()
    )
