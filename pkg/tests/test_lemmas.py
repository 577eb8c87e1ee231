import pytest

from hopfdual.duals.lemmas import available_lemmas, verify_dual_lemma
from hopfdual.errors import UnsupportedSuiteError
from hopfdual.families.dmx import DAlgebra, DParams, dihedral_algebra
from hopfdual.families.liu import LiuAlgebra, LiuParams
from hopfdual.families.taft import TaftAlgebra, TaftParams
from hopfdual.scalars.cyclotomic import get_context


def taft():
    return TaftAlgebra(TaftParams(3, 1, get_context(3).zeta()))


def liu():
    return LiuAlgebra(LiuParams(2, 2, get_context(2).scalar(-1)))


def dmx():
    return DAlgebra(DParams(3, 1, get_context(6).zeta()))


def test_lemma_registry():
    assert available_lemmas("taft") == ["L3.1", "L3.2"]
    assert available_lemmas("liu") == ["L4.1", "L4.2"]
    assert available_lemmas("dmx") == ["L5.2", "L5.3", "L5.4", "L5.5"]
    assert available_lemmas("dihedral") == ["R5.8"]
    assert available_lemmas("unknown") == []


def test_lemma_must_match_family():
    with pytest.raises(UnsupportedSuiteError):
        verify_dual_lemma(taft(), "L4.1", bound=2, samples=[1])
    with pytest.raises(UnsupportedSuiteError):
        verify_dual_lemma(taft(), "L9.9", bound=2, samples=[1])


@pytest.mark.parametrize("lemma_id", ["L3.1", "L3.2"])
def test_taft_lemmas(lemma_id):
    report = verify_dual_lemma(taft(), lemma_id, bound=4, samples=[0, 1, 2], pair_count=20)
    assert report.passed, report.witnesses
    assert report.suite == lemma_id


@pytest.mark.parametrize("lemma_id", ["L4.1", "L4.2"])
def test_liu_lemmas(lemma_id):
    report = verify_dual_lemma(liu(), lemma_id, bound=2, samples=[2], pair_count=20)
    assert report.passed, report.witnesses


@pytest.mark.parametrize("lemma_id", ["L5.2", "L5.3", "L5.4", "L5.5"])
def test_d_lemmas(lemma_id):
    report = verify_dual_lemma(dmx(), lemma_id, bound=1, samples=[2], pair_count=20)
    assert report.passed, report.witnesses


def test_dihedral_lemma():
    report = verify_dual_lemma(dihedral_algebra(), "R5.8", bound=2, samples=[2, 3], pair_count=20)
    assert report.passed, report.witnesses
    assert report.cases_total > 0
