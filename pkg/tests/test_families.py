from fractions import Fraction

import pytest

from hopfdual.algebra.element import Element
from hopfdual.errors import ParameterError
from hopfdual.families.dmx import SECTOR_U, SECTOR_Y, DAlgebra, DIdx, DParams, dihedral_algebra, phi_product, u_product
from hopfdual.families.liu import LiuAlgebra, LiuIdx, LiuParams
from hopfdual.families.taft import TaftAlgebra, TaftIdx, TaftParams
from hopfdual.scalars.cyclotomic import get_context


def test_taft_relations():
    ctx = get_context(3)
    xi = ctx.zeta()
    algebra = TaftAlgebra(TaftParams(3, 1, xi))
    g = algebra.monomial(1, 0)
    x = algebra.monomial(0, 1)
    assert algebra.product(x, g) == algebra.monomial(1, 1, xi)
    assert algebra.product(g, g, g) == algebra.unit()
    assert algebra.params.m == 3


def test_taft_m_divides_n():
    algebra = TaftAlgebra(TaftParams(4, 2, get_context(4).zeta()))
    assert algebra.params.m == 2
    assert algebra.params.q == -1


def test_taft_parameter_errors():
    ctx = get_context(3)
    with pytest.raises(ParameterError):
        TaftParams(3, 3, ctx.zeta())
    with pytest.raises(ParameterError, match="primitive"):
        TaftParams(3, 1, ctx.one)


def test_taft_basis_size():
    algebra = TaftAlgebra(TaftParams(3, 1, get_context(3).zeta()))
    basis = algebra.basis(2)
    assert len(basis) == 9
    assert TaftIdx(2, 2) in basis


def test_liu_relations():
    algebra = LiuAlgebra(LiuParams(2, 2, get_context(2).scalar(-1)))
    # x^omega = g^n
    assert algebra.monomial(2, 0, 0) == Element.basis(LiuIdx(0, 2, 0), algebra.ctx.one)
    # y^n = 1 - g^n
    expected = Element([(LiuIdx(0, 0, 0), algebra.ctx.one), (LiuIdx(0, 2, 0), -algebra.ctx.one)])
    assert algebra.monomial(0, 0, 2) == expected
    y = algebra.monomial(0, 0, 1)
    g = algebra.monomial(0, 1, 0)
    assert algebra.product(y, g) == algebra.monomial(0, 1, 1, -algebra.ctx.one)


def test_liu_inverse_powers_of_x_reduce():
    algebra = LiuAlgebra(LiuParams(2, 2, get_context(2).scalar(-1)))
    assert algebra.monomial(-1, 0, 0) == Element.basis(LiuIdx(1, -2, 0), algebra.ctx.one)


def test_liu_parameter_errors():
    with pytest.raises(ParameterError):
        LiuParams(0, 2, get_context(2).scalar(-1))
    with pytest.raises(ParameterError):
        LiuParams(2, 2, get_context(2).one)


def test_d_parity_constraint():
    with pytest.raises(ParameterError, match=r"\(1\+m\)d must be even"):
        DParams(2, 1, get_context(4).zeta())
    DParams(2, 2, get_context(4).zeta())


def test_d_xi_must_be_primitive_2m_root():
    with pytest.raises(ParameterError):
        DParams(3, 1, get_context(3).zeta())


def test_d_basis_size():
    algebra = DAlgebra(DParams(3, 1, get_context(6).zeta()))
    assert len(algebra.basis(1)) == 2 * 3 * 3 * 3
    assert len(algebra.basis(1, sectors=(SECTOR_Y,))) == 27


def test_d_y_power_relation():
    algebra = DAlgebra(DParams(3, 1, get_context(6).zeta()))
    one = algebra.ctx.one
    expected = Element([(DIdx(SECTOR_Y, 0, 0, 0), one), (DIdx(SECTOR_Y, 0, 3, 0), -one)])
    assert algebra.y_monomial(0, 0, 3) == expected


def test_d_x_power_relation():
    algebra = DAlgebra(DParams(3, 1, get_context(6).zeta()))
    # x^omega = g^m with omega = md = 3
    assert algebra.y_monomial(3, 0, 0) == Element.basis(DIdx(SECTOR_Y, 0, 3, 0), algebra.ctx.one)


def test_dihedral_group_relations():
    algebra = dihedral_algebra()
    one = algebra.ctx.one
    reflection = Element.basis(DIdx(SECTOR_U, 0, 0, 0), one)
    g = Element.basis(DIdx(SECTOR_Y, 0, 1, 0), one)
    g_inverse = Element.basis(DIdx(SECTOR_Y, 0, -1, 0), one)
    assert algebra.product(reflection, reflection) == algebra.unit()
    assert algebra.product(reflection, g, reflection) == g_inverse
    assert algebra.family == "dihedral"


def test_dihedral_elements_are_grouplike():
    algebra = dihedral_algebra()
    h = algebra.structure()
    key = DIdx(SECTOR_U, 0, 2, 0)
    assert h.comul_b(key).support() == [(key, key)]
    assert h.counit_b(key) == 1


def test_phi_products():
    params = DParams(3, 1, get_context(6).zeta())
    algebra = DAlgebra(params)
    gamma = params.gamma
    assert phi_product(params, 0, 0) == algebra.unit()
    assert phi_product(params, 0, 1) == algebra.unit() - algebra.y_monomial(1, 0, 0, gamma**-1)
    # (1 - gamma^-1 x)(1 - gamma^-2 x) at gamma = zeta3
    assert phi_product(params, 0, 2) == algebra.unit() + algebra.y_monomial(1, 0, 0) + algebra.y_monomial(2, 0, 0)


def test_u_products():
    params = DParams(3, 1, get_context(6).zeta())
    algebra = DAlgebra(params)
    ctx = algebra.ctx
    g = algebra.y_monomial(0, 1, 0)
    third = ctx.scalar(Fraction(1, 3))
    # u0 u0 = (1/3) x^-2 phi0 phi1 g
    assert u_product(params, 0, 0) == algebra.product(algebra.y_monomial(-2, 0, 0, third), phi_product(params, 0, 2), g)
    # u0 u2 = zeta3^2 (1/3) x^-2 y^2 g, empty phi-chain
    coeff = params.gamma**2 * third
    assert u_product(params, 0, 2) == algebra.product(algebra.y_monomial(-2, 0, 2, coeff), g)


def test_dihedral_reflection_squares_to_one():
    algebra = dihedral_algebra()
    assert u_product(algebra.params, 0, 0) == algebra.unit()
