import pytest

from hopfdual.algebra.element import Element
from hopfdual.duals.functionals import Counit, convolve, dual_pair_eval, eval_elem, product
from hopfdual.duals.generators import DualGenSpec, dual_generators, make_generator
from hopfdual.errors import FamilyMismatchError, ParameterError
from hopfdual.families.dmx import dihedral_algebra
from hopfdual.families.liu import LiuAlgebra, LiuIdx, LiuParams
from hopfdual.families.taft import TaftAlgebra, TaftIdx, TaftParams
from hopfdual.scalars.cyclotomic import get_context


def taft(v=1):
    return TaftAlgebra(TaftParams(3, v, get_context(3).zeta()))


def agree(f, g, basis):
    return all(f(key) == g(key) for key in basis)


def test_psi_values():
    gens = dual_generators(taft())
    psi = gens.psi(5)
    assert psi(TaftIdx(0, 0)) == 1
    assert psi(TaftIdx(2, 3)) == 5
    assert psi(TaftIdx(1, 6)) == 25
    assert psi(TaftIdx(0, 4)) == 0
    assert gens.psi(0)(TaftIdx(1, 0)) == 1


def test_psi_is_additive_under_convolution():
    algebra = taft()
    gens = dual_generators(algebra)
    basis = algebra.basis(6)
    assert agree(gens.psi(2) * gens.psi(3), gens.psi(5), basis)


def test_omega_has_order_n():
    algebra = taft()
    gens = dual_generators(algebra)
    basis = algebra.basis(4)
    assert agree(gens.omega() ** 3, gens.counit(), basis)
    assert not agree(gens.omega(), gens.counit(), basis)


def test_e1_is_nilpotent_of_order_m():
    algebra = taft()
    gens = dual_generators(algebra)
    basis = algebra.basis(5)
    cube = gens.e1() ** 3
    assert all(cube(key).is_zero() for key in basis)
    assert not all((gens.e1() ** 2)(key).is_zero() for key in basis)


def test_e2_is_primitive_on_products():
    algebra = taft()
    gens = dual_generators(algebra)
    e2 = gens.e2()
    a, b = TaftIdx(1, 3), TaftIdx(2, 0)
    assert dual_pair_eval(e2, a, b) == e2(a) * gens.counit()(b) + gens.counit()(a) * e2(b)


def test_power_zero_and_empty_product_are_the_counit():
    algebra = taft()
    structure = algebra.structure()
    gens = dual_generators(algebra)
    assert isinstance(gens.e2() ** 0, Counit)
    assert isinstance(product(structure, []), Counit)
    assert agree(product(structure, [gens.e1(), gens.e2()]), gens.e1() * gens.e2(), algebra.basis(4))


def test_convolution_across_algebras_is_rejected():
    left = dual_generators(taft(1)).e1()
    right = dual_generators(taft(2)).e1()
    with pytest.raises(FamilyMismatchError):
        convolve(left, right)
    with pytest.raises(FamilyMismatchError):
        left + right


def test_linear_combinations_evaluate_pointwise():
    algebra = taft()
    gens = dual_generators(algebra)
    combo = 2 * gens.psi(1) - gens.omega()
    key = TaftIdx(1, 0)
    assert combo(key) == 2 - algebra.params.xi


def test_liu_pairs():
    algebra = LiuAlgebra(LiuParams(2, 2, get_context(2).scalar(-1)))
    gens = dual_generators(algebra)
    assert gens.pair_over(3) == (3, 3)
    with pytest.raises(ParameterError):
        gens.pair(1, 2)
    psi = gens.psi(3, 3)
    assert psi(LiuIdx(1, 2, 0)) == 27
    assert psi(LiuIdx(0, 0, 1)) == 0


def test_liu_pair_over_needs_n_dividing_omega():
    algebra = LiuAlgebra(LiuParams(2, 3, get_context(2).scalar(-1)))
    with pytest.raises(ParameterError, match="divides omega"):
        dual_generators(algebra).pair_over(2)


def test_dihedral_has_no_e1():
    with pytest.raises(ParameterError):
        dual_generators(dihedral_algebra()).e1()


def test_make_generator():
    algebra = taft()
    omega = make_generator(algebra, DualGenSpec("taft", "omega"))
    assert omega(TaftIdx(1, 0)) == algebra.params.xi
    with pytest.raises(FamilyMismatchError):
        make_generator(algebra, DualGenSpec("liu", "psi", (1, 1)))
    with pytest.raises(ParameterError):
        make_generator(algebra, DualGenSpec("taft", "chi"))


def test_eval_elem_is_linear():
    algebra = taft()
    psi = dual_generators(algebra).psi(5)
    element = algebra.monomial(0, 3) + algebra.monomial(1, 0, algebra.ctx.scalar(2))
    assert eval_elem(psi, element) == 5 + 2
    assert eval_elem(psi, Element()) == 0
