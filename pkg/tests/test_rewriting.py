from hopfdual.duals.presented import presented_dual
from hopfdual.duals.rewriting import F1, F2, group, random_words, rewrite, verify_confluence
from hopfdual.families.dmx import DAlgebra, DParams, dihedral_algebra
from hopfdual.families.liu import LiuAlgebra, LiuParams
from hopfdual.families.taft import TaftAlgebra, TaftParams
from hopfdual.scalars.cyclotomic import get_context


def taft_dual():
    return presented_dual(TaftAlgebra(TaftParams(3, 1, get_context(3).zeta())))


def test_rewrite_moves_f1_past_omega():
    dual = taft_dual()
    omega = dual.word(j=1)
    (omega_key,) = omega.support()
    reduced = rewrite(dual, (group(dual.unit_key()), F1, group(omega_key)))
    assert reduced == dual.product(dual.f1(), omega)


def test_rewrite_kills_nilpotent_runs():
    dual = taft_dual()
    assert rewrite(dual, (group(dual.unit_key()), F1, F1, F1)).is_zero()


def test_rewrite_is_seed_independent():
    dual = taft_dual()
    word = (group(dual.unit_key()), F1, F2, F1, group(dual.unit_key()))
    results = [rewrite(dual, word, seed) for seed in range(4)]
    assert all(result == results[0] for result in results)


def test_random_words_are_seeded():
    dual = taft_dual()
    samples = [dual.ctx.scalar(1)]
    assert random_words(dual, samples, 4, 5, seed=2) == random_words(dual, samples, 4, 5, seed=2)
    assert all(len(word) == 4 for word in random_words(dual, samples, 4, 5, seed=2))


def test_confluence_taft():
    dual = taft_dual()
    words = random_words(dual, [dual.ctx.scalar(2)], 4, 8, seed=0)
    report = verify_confluence(dual, words, (0, 1, 2))
    assert report.passed, report.witnesses


def test_confluence_liu():
    dual = presented_dual(LiuAlgebra(LiuParams(2, 2, get_context(2).scalar(-1))))
    words = random_words(dual, [dual.ctx.scalar(2)], 4, 8, seed=1)
    report = verify_confluence(dual, words, (0, 1, 2))
    assert report.passed, report.witnesses


def test_confluence_d():
    dual = presented_dual(DAlgebra(DParams(3, 1, get_context(6).zeta())))
    words = random_words(dual, [dual.ctx.scalar(2)], 4, 6, seed=0)
    report = verify_confluence(dual, words, (0, 1))
    assert report.passed, report.witnesses


def test_confluence_dihedral():
    dual = presented_dual(dihedral_algebra())
    words = random_words(dual, [dual.ctx.scalar(3)], 5, 8, seed=0)
    report = verify_confluence(dual, words, (0, 1, 2))
    assert report.passed, report.witnesses
