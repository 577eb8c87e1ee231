from fractions import Fraction

import pytest

from hopfdual.duals.presented import presented_dual
from hopfdual.errors import ParameterError, UnsupportedSuiteError
from hopfdual.families.dmx import DAlgebra, DParams, dihedral_algebra
from hopfdual.families.liu import LiuAlgebra, LiuParams
from hopfdual.families.taft import TaftAlgebra, TaftParams
from hopfdual.linalg.matrix import det
from hopfdual.pairing.gram import GramSpec, gram_matrix, gram_rank
from hopfdual.pairing.hbullet import HBulletBasisSpec, hbullet_basis, verify_hbullet_closure, verify_pairing_axioms
from hopfdual.pairing.ideals import ideal_witness, taft_independence_rank, verify_ideal_vanishing
from hopfdual.pairing.proof_matrices import PROOF_IDS, proof_matrix
from hopfdual.scalars.cyclotomic import get_context


def taft():
    return TaftAlgebra(TaftParams(3, 1, get_context(3).zeta()))


def liu():
    return LiuAlgebra(LiuParams(2, 2, get_context(2).scalar(-1)))


def dmx():
    return DAlgebra(DParams(3, 1, get_context(6).zeta()))


# -- H-bullet -------------------------------------------------------------------------


def test_hbullet_basis_sizes():
    assert len(hbullet_basis(presented_dual(dihedral_algebra()), HBulletBasisSpec(1))) == 4
    assert len(hbullet_basis(presented_dual(taft()), HBulletBasisSpec(0))) == 9
    assert len(hbullet_basis(presented_dual(dmx()), HBulletBasisSpec(0))) == 18


def test_hbullet_is_closed_under_comultiplication():
    for algebra in (taft(), liu(), dmx(), dihedral_algebra()):
        report = verify_hbullet_closure(presented_dual(algebra), HBulletBasisSpec(1))
        assert report.passed, report.witnesses


def test_pairing_axioms_dihedral():
    algebra = dihedral_algebra()
    dual = presented_dual(algebra)
    functionals = hbullet_basis(dual, HBulletBasisSpec(1))
    report = verify_pairing_axioms(dual, functionals, algebra.basis(2), count=20, seed=1)
    assert report.passed, report.witnesses
    assert report.cases_total == 20 * 5


def test_pairing_axioms_taft():
    algebra = taft()
    dual = presented_dual(algebra)
    functionals = hbullet_basis(dual, HBulletBasisSpec(1))
    report = verify_pairing_axioms(dual, functionals, algebra.basis(4), count=20)
    assert report.passed, report.witnesses


def test_pairing_axioms_liu():
    algebra = liu()
    dual = presented_dual(algebra)
    functionals = hbullet_basis(dual, HBulletBasisSpec(1))
    report = verify_pairing_axioms(dual, functionals, algebra.basis(2), count=15)
    assert report.passed, report.witnesses
    assert report.cases_total == 15 * 5


def test_pairing_axioms_d():
    algebra = dmx()
    dual = presented_dual(algebra)
    functionals = hbullet_basis(dual, HBulletBasisSpec(1))
    report = verify_pairing_axioms(dual, functionals, algebra.basis(1), count=15, seed=2)
    assert report.passed, report.witnesses
    assert report.cases_total == 15 * 5


# -- Gram matrices --------------------------------------------------------------------


def test_gram_dihedral_is_full_rank():
    result = gram_rank(dihedral_algebra(), GramSpec(1))
    assert result.full_rank
    assert result.to_dict()["full_rank"] is True


def test_gram_taft_is_full_rank():
    result = gram_rank(taft(), GramSpec(1))
    assert result.matrix.shape == (18, 18)
    assert result.full_rank


def test_gram_liu_is_full_rank():
    result = gram_rank(liu(), GramSpec(1))
    assert result.matrix.shape == (24, 24)
    assert result.full_rank


def test_gram_d_is_full_rank():
    result = gram_rank(dmx(), GramSpec(1))
    assert result.matrix.shape == (162, 162)
    assert result.full_rank


@pytest.mark.parametrize("algebra, top", [(dihedral_algebra(), 3), (liu(), 2)])
def test_gram_rank_never_drops_with_truncation(algebra, top):
    ranks = [gram_rank(algebra, GramSpec(n)).rank for n in range(1, top + 1)]
    assert ranks == sorted(ranks)
    assert ranks[0] > 0


def test_gram_truncation_must_be_positive():
    with pytest.raises(ParameterError, match="N >= 1"):
        GramSpec(0)


def test_gram_matrix_is_deterministic():
    assert gram_matrix(dihedral_algebra(), GramSpec(1)) == gram_matrix(dihedral_algebra(), GramSpec(1))


# -- proof matrices -------------------------------------------------------------------


@pytest.mark.parametrize("lam", [0, 5])
def test_taft_proof_matrix(lam):
    result = proof_matrix(taft(), "P3.3", 1, lam=lam, cross_check=True)
    assert result.invertible
    assert result.kronecker_match is True
    assert result.matches_evaluation is True
    assert result.matrix.shape == (27, 27)
    assert result.passed


def test_liu_proof_matrix():
    result = proof_matrix(liu(), "P4.3", 2, alpha=3, cross_check=True)
    assert result.invertible
    assert result.matches_evaluation is True
    assert result.details["lambda"] == get_context(2).scalar(9).to_string()


@pytest.mark.parametrize("prop_id", ["P5.6-case1", "P5.6-case2", "P5.6-case3"])
def test_dihedral_proof_matrices(prop_id):
    result = proof_matrix(dihedral_algebra(), prop_id, 1, alpha=2 if prop_id == "P5.6-case1" else None)
    assert result.invertible
    assert result.details["block_criterion"] is True


def test_d_case1_rejects_lambda_plus_minus_one():
    with pytest.raises(ParameterError, match="lambda must not be 1 or -1"):
        proof_matrix(dihedral_algebra(), "P5.6-case1", 1, alpha=1)


def test_proof_matrix_errors():
    assert PROOF_IDS[0] == "P3.3"
    with pytest.raises(UnsupportedSuiteError):
        proof_matrix(liu(), "P3.3", 1)
    with pytest.raises(ParameterError):
        proof_matrix(taft(), "P3.3", 0)
    with pytest.raises(ParameterError):
        proof_matrix(taft(), "P9.9", 1)


def test_proof_result_serializes():
    data = proof_matrix(taft(), "P3.3", 1).to_dict()
    assert data["prop_id"] == "P3.3"
    assert data["invertible"] is True
    assert data["matches_evaluation"] is None


# -- ideals ---------------------------------------------------------------------------


def test_taft_ideal_witness_has_the_right_degree():
    algebra = taft()
    witness = ideal_witness(algebra, 1, (0, 0), lam=0)
    # (x^3)^3 = x^9 when lambda = 0
    assert witness == algebra.monomial(0, 9)


@pytest.mark.parametrize("lam", [0, 5])
def test_taft_ideal_vanishing(lam):
    report = verify_ideal_vanishing(taft(), 1, lam=lam, count=60)
    assert report.passed, report.witnesses
    assert report.details["functionals"] == 27


def test_liu_ideal_vanishing():
    report = verify_ideal_vanishing(liu(), 1, alpha=3, count=60)
    assert report.passed, report.witnesses


def test_dihedral_ideal_vanishing():
    report = verify_ideal_vanishing(dihedral_algebra(), 1, alpha=2, count=None)
    assert report.passed, report.witnesses


def test_taft_independence_over_distinct_lambdas():
    found, size = taft_independence_rank(taft(), [0, 5], 1)
    assert found == size == 18
    with pytest.raises(ParameterError):
        taft_independence_rank(taft(), [5, 5], 1)


def test_taft_proof_matrix_with_rational_lambda():
    result = proof_matrix(taft(), "P3.3", 1, lam=Fraction(1, 2))
    assert result.kronecker_match is True
    assert det(result.matrix) == result.determinant
    assert result.invertible
