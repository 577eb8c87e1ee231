"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as its coefficient vector in the power basis
1, zeta, ..., zeta^(phi(N)-1), i.e. as a residue modulo the N-th cyclotomic
polynomial. Coefficients are ``fractions.Fraction`` so zero tests are exact.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

from hopfdual.errors import ContextMismatchError, ParameterError, ScalarDivisionError

__all__ = [
    "CycloContext",
    "CycloScalar",
    "Scalar",
    "cyclotomic_polynomial",
    "field_ops",
    "get_context",
    "lcm_orders",
    "parse_scalar",
    "pow_int",
    "primitive_root",
    "required_order",
]

Scalar = Union["CycloScalar", int, Fraction]


def _int_divmod(num: list[int], den: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Long division by a monic integer polynomial (coefficients low to high)."""

    rem = list(num)
    deg = len(den) - 1
    quo = [0] * max(len(rem) - deg, 1)
    for top in range(len(rem) - 1, deg - 1, -1):
        lead = rem[top]
        if lead == 0:
            continue
        quo[top - deg] = lead
        for t, c in enumerate(den):
            rem[top - deg + t] -= lead * c
    return quo, rem[:deg]


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> tuple[int, ...]:
    """Return Phi_N as an integer coefficient tuple, constant term first.

    >>> cyclotomic_polynomial(3)
    (1, 1, 1)
    """

    if order <= 0:
        raise ParameterError("cyclotomic order must be positive", f"N={order}")

    # x^N - 1 divided by Phi_d for every proper divisor d.
    poly = [-1] + [0] * (order - 1) + [1]
    for d in range(1, order):
        if order % d:
            continue
        poly, rem = _int_divmod(poly, cyclotomic_polynomial(d))
        assert not any(rem), f"Phi_{d} does not divide x^{order} - 1"
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _trim(poly: list[Fraction]) -> list[Fraction]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    size = max(len(a), len(b))
    out = [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(size)
    ]
    return _trim(out)


def _poly_divmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(num)
    quo = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(_trim(rem)) >= len(den):
        shift = len(rem) - len(den)
        factor = rem[-1] / lead
        quo[shift] = factor
        for t, c in enumerate(den):
            rem[shift + t] -= factor * c
        rem.pop()
    return _trim(quo), rem


@dataclass(frozen=True)
class CycloContext:
    """The field Q(zeta_N); one shared instance per order via :func:`get_context`."""

    order: int

    @functools.cached_property
    def modulus(self) -> tuple[int, ...]:
        return cyclotomic_polynomial(self.order)

    @functools.cached_property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @functools.cached_property
    def zero(self) -> CycloScalar:
        return self.scalar(0)

    @functools.cached_property
    def one(self) -> CycloScalar:
        return self.scalar(1)

    def scalar(self, value: Scalar) -> CycloScalar:
        """Embed an integer, fraction or same-field scalar."""

        if isinstance(value, CycloScalar):
            if value.ctx.order != self.order:
                raise ContextMismatchError(self.order, value.ctx.order)
            return value
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = Fraction(value)
        return CycloScalar(self, tuple(coeffs))

    def reduce(self, poly: list[Fraction]) -> CycloScalar:
        """Reduce a polynomial in zeta modulo Phi_N."""

        mod = self.modulus
        deg = self.degree
        work = list(poly)
        for top in range(len(work) - 1, deg - 1, -1):
            lead = work[top]
            if lead == 0:
                continue
            for t in range(deg):
                work[top - deg + t] -= lead * mod[t]
            work[top] = Fraction(0)
        work = (work + [Fraction(0)] * deg)[:deg]
        return CycloScalar(self, tuple(Fraction(c) for c in work))

    def zeta(self, power: int = 1) -> CycloScalar:
        """Return zeta_N ** power for the fixed generator zeta_N = exp(2 pi i / N)."""

        return _zeta_power(self.order, power % self.order)


@functools.lru_cache(maxsize=None)
def get_context(order: int) -> CycloContext:
    if order <= 0:
        raise ParameterError("cyclotomic order must be positive", f"N={order}")
    return CycloContext(order)


@functools.lru_cache(maxsize=None)
def _zeta_power(order: int, power: int) -> CycloScalar:
    ctx = get_context(order)
    poly = [Fraction(0)] * power + [Fraction(1)]
    return ctx.reduce(poly)


@dataclass(frozen=True, eq=False)
class CycloScalar:
    """Immutable element of Q(zeta_N)."""

    ctx: CycloContext
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.ctx.degree:
            raise ValueError(
                f"expected {self.ctx.degree} coefficients for N={self.ctx.order}, got {len(self.coeffs)}"
            )

    # -- coercion -----------------------------------------------------------------

    def _coerce(self, other: object) -> CycloScalar | None:
        if isinstance(other, CycloScalar):
            if other.ctx.order != self.ctx.order:
                raise ContextMismatchError(self.ctx.order, other.ctx.order)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        return None

    # -- predicates ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self.to_string()} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloScalar) and other.ctx.order != self.ctx.order:
            return False
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.coeffs == rhs.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.ctx.order, self.coeffs))

    def __lt__(self, other: CycloScalar) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.coeffs < rhs.coeffs

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other: Scalar) -> CycloScalar:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CycloScalar(self.ctx, tuple(a + b for a, b in zip(self.coeffs, rhs.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloScalar:
        return CycloScalar(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Scalar) -> CycloScalar:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return CycloScalar(self.ctx, tuple(a - b for a, b in zip(self.coeffs, rhs.coeffs)))

    def __rsub__(self, other: Scalar) -> CycloScalar:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Scalar) -> CycloScalar:
        if isinstance(other, (int, Fraction)):
            return CycloScalar(self.ctx, tuple(a * other for a in self.coeffs))
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.ctx.degree == 1:
            return CycloScalar(self.ctx, (self.coeffs[0] * rhs.coeffs[0],))
        return self.ctx.reduce(_poly_mul(list(self.coeffs), list(rhs.coeffs)) or [Fraction(0)])

    __rmul__ = __mul__

    def inverse(self) -> CycloScalar:
        if self.is_zero():
            raise ScalarDivisionError("division by zero in Q(zeta_%d)" % self.ctx.order)
        if self.is_rational():
            return self.ctx.scalar(1 / self.coeffs[0])
        # Extended Euclid against Phi_N; the modulus is irreducible so the gcd is a unit.
        r0 = [Fraction(c) for c in self.ctx.modulus]
        r1 = _trim(list(self.coeffs))
        s0: list[Fraction] = []
        s1 = [Fraction(1)]
        while len(r1) > 1:
            quo, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(rem)
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1))
        unit = r1[0]
        return self.ctx.reduce([c / unit for c in s1])

    def __truediv__(self, other: Scalar) -> CycloScalar:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: Scalar) -> CycloScalar:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> CycloScalar:
        return pow_int(self, exponent)

    # -- serialization ------------------------------------------------------------

    def to_string(self) -> str:
        """Exact text form, e.g. ``N=6;[1/2,0]``."""

        return f"N={self.ctx.order};[{','.join(str(c) for c in self.coeffs)}]"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"CycloScalar('{self.to_string()}')"


def field_ops(
    a: CycloScalar, b: CycloScalar, op: Literal["add", "sub", "mul", "div"]
) -> CycloScalar:
    """Apply one field operation by name."""

    if a.ctx.order != b.ctx.order:
        raise ContextMismatchError(a.ctx.order, b.ctx.order)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation '{op}'")


def primitive_root(ctx: CycloContext, order: int) -> CycloScalar:
    """Return zeta_N^(N/M), a primitive M-th root of unity."""

    if order <= 0 or ctx.order % order:
        raise ParameterError("M must divide N", f"M={order}, N={ctx.order}")
    return ctx.zeta(ctx.order // order)


def pow_int(a: CycloScalar, exponent: int) -> CycloScalar:
    if exponent < 0:
        if a.is_zero():
            raise ScalarDivisionError("zero base with negative exponent")
        return pow_int(a.inverse(), -exponent)
    result = a.ctx.one
    base = a
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


_ROOT_RE = re.compile(
    r"^(?:(?P<coef>[+-]?\d+(?:/\d+)?)\s*\*\s*)?(?P<sign>[+-])?zeta(?P<order>\d+)(?:\^(?P<exp>[+-]?\d+))?$"
)
_SERIAL_RE = re.compile(r"^N=(?P<order>\d+);\[(?P<body>[^\]]*)\]$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def required_order(text: str) -> int:
    """Smallest N such that ``text`` parses into Q(zeta_N)."""

    text = text.strip().replace(" ", "")
    if _RATIONAL_RE.match(text):
        return 1
    match = _ROOT_RE.match(text) or _SERIAL_RE.match(text)
    if match is None:
        raise ParameterError("scalar must be an integer, a/b, c*zetaN^t or N=..;[..]", text)
    return int(match.group("order"))


def parse_scalar(text: str, ctx: CycloContext) -> CycloScalar:
    """Parse an exact scalar string into ``ctx``.

    Accepted forms: ``3``, ``-1/2``, ``zeta6``, ``zeta3^2``, ``2*zeta3^1`` and the
    serialized form ``N=6;[1/2,0]``. Roots of order N embed into any field whose
    order is a multiple of N.
    """

    raw = text
    text = text.strip().replace(" ", "")
    if _RATIONAL_RE.match(text):
        return ctx.scalar(Fraction(text))
    order = required_order(text)
    if ctx.order % order:
        raise ParameterError(f"zeta_{order} does not live in Q(zeta_{ctx.order})", raw)
    step = ctx.order // order
    match = _ROOT_RE.match(text)
    if match is not None:
        exponent = int(match.group("exp") or 1)
        value = ctx.zeta(step * exponent)
        if match.group("coef"):
            value = value * Fraction(match.group("coef"))
        if match.group("sign") == "-":
            value = -value
        return value
    match = _SERIAL_RE.match(text)
    assert match is not None
    body = [Fraction(part) for part in match.group("body").split(",") if part]
    value = ctx.zero
    for k, c in enumerate(body):
        if c:
            value = value + ctx.zeta(step * k) * c
    return value


def lcm_orders(*orders: int) -> int:
    return math.lcm(*orders) if orders else 1
