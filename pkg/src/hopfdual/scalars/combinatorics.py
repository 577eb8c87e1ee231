"""Quantum integers, Gaussian binomials, Stirling partial sums and discrete logs."""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from hopfdual.errors import DiscreteLogError, ParameterError
from hopfdual.scalars.cyclotomic import CycloScalar, Scalar

__all__ = [
    "discrete_log",
    "q_binomial",
    "q_factorial",
    "q_integer",
    "stirling_partial",
]


def _one_like(q: Scalar) -> Scalar:
    return q**0


def q_integer(k: int, q: Scalar) -> Scalar:
    """k_q = 1 + q + ... + q^(k-1)."""

    total = _one_like(q) * 0
    power = _one_like(q)
    for _ in range(k):
        total = total + power
        power = power * q
    return total


def _cache_tag(q: Scalar) -> tuple:
    # keeps int, Fraction and per-field scalars in separate cache slots
    return (type(q), getattr(getattr(q, "ctx", None), "order", None))


def q_factorial(l: int, q: Scalar) -> Scalar:
    return _q_factorial(l, q, _cache_tag(q))


@functools.lru_cache(maxsize=4096)
def _q_factorial(l: int, q: Scalar, tag: tuple) -> Scalar:
    if l < 0:
        raise ParameterError("q-factorial needs l >= 0", f"l={l}")
    if l == 0:
        return _one_like(q)
    return _q_factorial(l - 1, q, tag) * q_integer(l, q)


def q_binomial(l: int, k: int, q: Scalar) -> Scalar:
    """Gaussian binomial by the q-Pascal rule C(l,k) = C(l-1,k-1) + q^k C(l-1,k).

    Never divides, so it is defined at every root of unity.
    """

    return _q_binomial(l, k, q, _cache_tag(q))


@functools.lru_cache(maxsize=4096)
def _q_binomial(l: int, k: int, q: Scalar, tag: tuple) -> Scalar:
    if k < 0 or k > l:
        raise ParameterError("q-binomial needs 0 <= k <= l", f"l={l}, k={k}")
    one = _one_like(q)
    row = [one]
    for top in range(1, l + 1):
        nxt = [one] * (top + 1)
        for t in range(1, top):
            nxt[t] = row[t - 1] + q**t * row[t]
        row = nxt
    return row[k]


def stirling_partial(r: int, s: int) -> Fraction:
    """Sum over t of C(r,t)(-1)^(r-t) t^s, with 0^0 = 1.

    Equals r! times the Stirling number of the second kind S(s, r); zero for s < r.
    """

    if r < 0 or s < 0:
        raise ParameterError("stirling_partial needs r, s >= 0", f"r={r}, s={s}")
    return Fraction(sum(math.comb(r, t) * (-1) ** (r - t) * t**s for t in range(r + 1)))


def discrete_log(base: CycloScalar, target: CycloScalar, order: int) -> int:
    """Least k in [0, order) with base^k == target."""

    if order <= 0 or base**order != 1:
        raise ParameterError("base must be a root of unity of the given order", f"order={order}")
    power = base**0
    for k in range(order):
        if power == target:
            return k
        power = power * base
    raise DiscreteLogError(str(base), str(target), order)
