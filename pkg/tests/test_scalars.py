from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfdual.errors import ContextMismatchError, ParameterError, ScalarDivisionError
from hopfdual.scalars.combinatorics import discrete_log, q_binomial, q_integer, stirling_partial
from hopfdual.scalars.cyclotomic import (
    cyclotomic_polynomial,
    field_ops,
    get_context,
    parse_scalar,
    pow_int,
    primitive_root,
    required_order,
)
from hopfdual.scalars.identities import verify_scalar_identities

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_cyclotomic_polynomials_of_small_orders():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_zeta_has_exact_order():
    ctx = get_context(6)
    zeta = ctx.zeta()
    assert zeta**6 == 1
    assert all(zeta**k != 1 for k in range(1, 6))
    assert zeta**3 == -1


def test_primitive_root_needs_divisor():
    ctx = get_context(6)
    assert primitive_root(ctx, 3) ** 3 == 1
    assert primitive_root(ctx, 3) != 1
    with pytest.raises(ParameterError):
        primitive_root(ctx, 4)


def test_parse_forms():
    ctx = get_context(6)
    assert parse_scalar("-1/2", ctx) == Fraction(-1, 2)
    assert parse_scalar("zeta3^1", ctx) == ctx.zeta(2)
    assert parse_scalar("2*zeta3^1", ctx) == ctx.zeta(2) * 2
    assert parse_scalar("-zeta6", ctx) == -ctx.zeta(1)
    serialized = (ctx.zeta(1) * 3 + 1).to_string()
    assert parse_scalar(serialized, ctx) == ctx.zeta(1) * 3 + 1


def test_parse_rejects_foreign_roots_and_garbage():
    ctx = get_context(3)
    with pytest.raises(ParameterError):
        parse_scalar("zeta4", ctx)
    with pytest.raises(ParameterError):
        required_order("sqrt(2)")


def test_required_order():
    assert required_order("5/3") == 1
    assert required_order("2*zeta12^5") == 12


def test_mixing_fields_is_an_error():
    a = get_context(3).zeta()
    b = get_context(4).zeta()
    with pytest.raises(ContextMismatchError):
        field_ops(a, b, "add")


def test_division_by_zero():
    ctx = get_context(5)
    with pytest.raises(ScalarDivisionError):
        ctx.one / ctx.zero


@given(rationals, rationals, rationals)
def test_field_axioms_in_q_zeta_12(a, b, c):
    ctx = get_context(12)
    z = ctx.zeta()
    x = z * a + 1
    y = z**5 * b - z**2
    w = ctx.scalar(c) + z**7
    assert (x + y) * w == x * w + y * w
    assert (x * y) * w == x * (y * w)
    assert x * y == y * x
    if not y.is_zero():
        assert (x / y) * y == x


@given(rationals.filter(lambda q: q != 0))
def test_inverse_of_non_rational_scalars(q):
    ctx = get_context(7)
    x = ctx.zeta(3) * q + ctx.zeta(1)
    assert x * x.inverse() == 1


def test_q_integer_and_binomial_at_roots_of_unity():
    ctx = get_context(3)
    xi = ctx.zeta()
    assert q_integer(3, xi) == 0
    assert q_binomial(3, 1, xi) == 0
    assert q_binomial(4, 2, xi) == 0
    assert q_binomial(5, 0, xi) == 1


def test_q_binomial_at_q_one_is_ordinary_binomial():
    assert q_binomial(6, 2, 1) == 15
    assert q_binomial(4, 2, 2) == 35


def test_q_binomial_bounds():
    with pytest.raises(ParameterError):
        q_binomial(2, 3, 2)


def test_stirling_partial_values():
    for r in range(1, 6):
        for s in range(r):
            assert stirling_partial(r, s) == 0
    assert stirling_partial(2, 2) == 2
    assert stirling_partial(3, 3) == 6
    assert stirling_partial(0, 0) == 1


def test_discrete_log():
    ctx = get_context(6)
    xi = ctx.zeta()
    assert discrete_log(xi, xi**4, 6) == 4
    with pytest.raises(ParameterError):
        discrete_log(ctx.scalar(2), ctx.one, 6)


def test_scalar_identity_report_passes():
    report = verify_scalar_identities(r_max=5, l_max=5)
    assert report.passed
    assert report.cases_total > 0


def test_pow_int_handles_negative_exponents():
    zeta3 = get_context(3).zeta()
    assert pow_int(zeta3, 3) == 1
    assert pow_int(zeta3, -1) == zeta3**2
    assert pow_int(get_context(1).scalar(-1), -5) == -1
    assert pow_int(get_context(1).scalar(2), -2) == get_context(1).scalar(Fraction(1, 4))
    with pytest.raises(ScalarDivisionError):
        pow_int(get_context(3).zero, -1)
