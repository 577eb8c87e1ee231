from fractions import Fraction

import pytest

from hopfdual.algebra.element import Element, tensor
from hopfdual.algebra.hopf import verify_hopf_axioms
from hopfdual.duals.presented import (
    SECTOR_X,
    SECTOR_Z,
    normalize,
    p_antipode,
    p_comul,
    p_counit,
    presented_dual,
    sample_basis_pairs,
    theta,
    theta_constants,
    verify_theta,
)
from hopfdual.duals.rewriting import F1, F2, rewrite
from hopfdual.errors import ParameterError
from hopfdual.families.dmx import DAlgebra, DParams, dihedral_algebra
from hopfdual.families.liu import LiuAlgebra, LiuParams
from hopfdual.families.taft import TaftAlgebra, TaftIdx, TaftParams
from hopfdual.scalars.cyclotomic import get_context


def taft_dual():
    return presented_dual(TaftAlgebra(TaftParams(3, 1, get_context(3).zeta())))


def test_taft_commutation_and_nilpotency():
    dual = taft_dual()
    q = dual.q
    assert dual.product(dual.f1(), dual.omega()) == dual.word(j=1, l=1, coeff=q)
    assert dual.product(dual.f1(), dual.f1(), dual.f1()).is_zero()
    assert dual.product(dual.psi(2), dual.psi(3)) == dual.psi(5)
    assert dual.product(dual.f2(), dual.psi(1)) == dual.product(dual.psi(1), dual.f2())


def test_taft_omega_has_order_n():
    dual = taft_dual()
    assert dual.product(dual.omega(), dual.omega(), dual.omega()) == dual.unit()


def test_theta_sends_psi_to_its_functional():
    dual = taft_dual()
    functional = dual.theta(dual.psi(4))
    assert functional(TaftIdx(0, 3)) == 4
    assert functional(TaftIdx(1, 1)) == 0


def test_theta_is_a_hopf_map_on_taft():
    dual = taft_dual()
    report = verify_theta(
        dual,
        word_length=2,
        basis=dual.algebra.basis(4),
        samples=[dual.ctx.scalar(0), dual.ctx.scalar(1)],
        s_max=1,
        pair_count=20,
    )
    assert report.passed, report.witnesses
    assert report.cases_total > 0


def test_theta_is_a_hopf_map_on_liu():
    dual = presented_dual(LiuAlgebra(LiuParams(2, 2, get_context(2).scalar(-1))))
    report = verify_theta(
        dual,
        word_length=2,
        basis=dual.algebra.basis(2),
        samples=[dual.ctx.scalar(2)],
        s_max=1,
        pair_count=20,
    )
    assert report.passed, report.witnesses


def test_theta_is_a_hopf_map_on_dihedral():
    dual = presented_dual(dihedral_algebra())
    report = verify_theta(
        dual,
        word_length=2,
        basis=dual.algebra.basis(2),
        samples=[dual.ctx.scalar(2)],
        s_max=1,
        pair_count=20,
    )
    assert report.passed, report.witnesses


def test_presented_taft_dual_is_a_hopf_algebra():
    dual = taft_dual()
    words = dual.sample_words([dual.ctx.scalar(1)], 1)
    report = verify_hopf_axioms(dual.structure(), words, sample_basis_pairs(words, 30, 0), suite="presented")
    assert report.passed, report.witnesses


def test_liu_sample_pairs_satisfy_the_pair_relation():
    dual = presented_dual(LiuAlgebra(LiuParams(2, 3, get_context(2).scalar(-1))))
    for alpha, beta in dual.sample_pairs([dual.ctx.scalar(2), dual.ctx.scalar(3)]):
        assert alpha**3 == beta**2


def test_d_unit_is_two_words():
    dual = presented_dual(DAlgebra(DParams(3, 1, get_context(6).zeta())))
    assert len(dual.unit()) == 2
    with pytest.raises(ParameterError):
        dual.unit_key()
    z = dual.word(SECTOR_Z, 2, 2)
    x = dual.word(SECTOR_X, 2, 2)
    assert dual.product(z, x) == Element()


def test_d_f1_power_m_lands_in_the_x_sector():
    dual = presented_dual(DAlgebra(DParams(3, 1, get_context(6).zeta())))
    cube = dual.product(dual.f1(), dual.f1(), dual.f1())
    assert cube == dual.word(SECTOR_X, coeff=dual.kappa)


def test_dihedral_has_no_f1():
    dual = presented_dual(dihedral_algebra())
    assert not dual.has_f1
    with pytest.raises(ParameterError):
        dual.f1()


def test_theta_constants_multiply_to_one_minus_alpha_to_omega():
    params = DParams(3, 1, get_context(6).zeta())
    for alpha in (2, 3):
        assert theta_constants(params, alpha).total() == 1 - alpha**3
    dihedral = dihedral_algebra().params
    assert theta_constants(dihedral, 5).total() == -4


def d_dual():
    return presented_dual(DAlgebra(DParams(3, 1, get_context(6).zeta())))


def liu_dual():
    return presented_dual(LiuAlgebra(LiuParams(2, 2, get_context(2).scalar(-1))))


def test_theta_is_a_hopf_map_on_d():
    dual = d_dual()
    report = verify_theta(
        dual,
        word_length=2,
        basis=dual.algebra.basis(1),
        samples=[dual.ctx.scalar(2)],
        s_max=1,
        pair_count=20,
    )
    assert report.passed, report.witnesses
    assert report.cases_total > 0


def test_theta_of_unit_and_f1():
    dual = taft_dual()
    basis = dual.algebra.basis(4)
    unit, e1 = theta(dual, dual.unit()), theta(dual, dual.f1())
    assert all(unit(key) == dual.gens.counit()(key) for key in basis)
    assert all(e1(key) == dual.gens.e1()(key) for key in basis)


def test_normalize_applies_the_defining_relations():
    liu = liu_dual()
    n = liu.params.n
    swapped = normalize(liu, [liu.f2(), liu.f1()]) + liu.f1().scale(Fraction(1, n))
    assert normalize(liu, [liu.f1(), liu.f2()]) == swapped
    taft = taft_dual()
    assert normalize(taft, [taft.f1()] * taft.params.m).is_zero()
    d = d_dual()
    assert normalize(d, [d.zeta(2, 2), d.chi(2, 2)]).is_zero()


def test_liu_f1_powers_commute_past_f2():
    dual = liu_dual()
    n = dual.params.n
    for l in range(1, dual.nil_bound):
        power = [dual.f1()] * l
        expected = normalize(dual, [dual.f2(), *power]) + normalize(dual, power).scale(Fraction(l, n))
        assert rewrite(dual, (F1,) * l + (F2,)) == expected


def test_d_f1_powers_commute_past_f2():
    dual = d_dual()
    m = dual.params.m
    z11 = dual.word(SECTOR_Z)
    for l in range(1, dual.nil_bound):
        power = [dual.f1()] * l
        expected = normalize(dual, [dual.f2(), *power]) + normalize(dual, [z11, *power]).scale(Fraction(l, m))
        assert rewrite(dual, (F1,) * l + (F2,)) == expected


def test_taft_sigmas_are_orthogonal_idempotents():
    dual = presented_dual(TaftAlgebra(TaftParams(4, 2, get_context(4).zeta())))
    classes = range(dual.params.n // dual.params.m)
    assert len(classes) == 2
    for c in classes:
        for c2 in classes:
            expected = dual.sigma(c) if c == c2 else Element()
            assert normalize(dual, [dual.sigma(c), dual.sigma(c2)]) == expected
    total = Element()
    for c in classes:
        total = total + dual.sigma(c)
    assert total == dual.unit()


def test_taft_word_coproducts_counits_and_antipodes():
    dual = taft_dual()
    (omega,) = dual.omega().support()
    (f1,) = dual.f1().support()
    (f2,) = dual.f2().support()
    (psi,) = dual.psi(4).support()
    assert p_comul(dual, omega) == tensor(dual.omega(), dual.omega())
    assert p_comul(dual, f1) == tensor(dual.unit(), dual.f1()) + tensor(dual.f1(), dual.omega())
    assert p_counit(dual, psi) == 1
    assert p_counit(dual, f2) == 0
    assert p_antipode(dual, f2) == dual.f2().scale(-1)


def test_group_antipodes_invert_the_parameters():
    liu = liu_dual()
    (psi,) = liu.psi(3, 3).support()
    assert p_antipode(liu, psi) == liu.psi(Fraction(1, 3), Fraction(1, 3))
    d = d_dual()
    (z,) = d.zeta(2, 2).support()
    assert p_antipode(d, z) == d.zeta(Fraction(1, 2), Fraction(1, 2))
    (x,) = d.word(SECTOR_X, 2, 2, s=1, l=1).support()
    assert p_counit(d, x) == 0
