from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfdual.errors import ContextMismatchError, DimensionMismatchError, ParameterError, SingularHypothesisError
from hopfdual.linalg.lemmas import verify_matrix_lemmas
from hopfdual.linalg.matrix import ExactMatrix, det, kronecker, rank
from hopfdual.linalg.structured import (
    assemble_block_matrix,
    binomial_triangle,
    build_shifted_matrix,
    power_matrix,
    verify_block_criterion,
)
from hopfdual.scalars.cyclotomic import get_context

Q = get_context(1)

small_ints = st.integers(min_value=-4, max_value=4)


def square(size):
    return st.lists(st.lists(small_ints, min_size=size, max_size=size), min_size=size, max_size=size)


def test_shifted_matrix_r1_base2():
    matrix = build_shifted_matrix(1, 2, 0)
    assert matrix == ExactMatrix.from_rows(Q, [[1, 2], [1, Fraction(1, 2)]])
    assert det(matrix) == Fraction(-3, 2)


def test_shifted_matrix_with_lambda_one_is_singular():
    assert det(build_shifted_matrix(1, 1, 0)).is_zero()
    assert det(build_shifted_matrix(2, 1, 0)).is_zero()


def test_shifted_matrix_is_invertible_for_generic_base():
    for r in (1, 2, 3):
        assert not det(build_shifted_matrix(r, 3, Fraction(1, 2))).is_zero()
        assert not det(build_shifted_matrix(r, 2, 0, 1, 3)).is_zero()


def test_shifted_matrix_rejects_bad_arguments():
    with pytest.raises(ParameterError):
        build_shifted_matrix(0, 2, 0)
    with pytest.raises(ParameterError):
        build_shifted_matrix(1, 0, 0)


def test_det_and_rank_of_small_matrices():
    matrix = ExactMatrix.from_rows(Q, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert det(matrix) == 0
    assert rank(matrix) == 2
    assert det(ExactMatrix.identity(Q, 4)) == 1
    assert rank(ExactMatrix.zeros(Q, 2, 3)) == 0


def test_det_needs_square_matrix():
    with pytest.raises(DimensionMismatchError):
        det(ExactMatrix.zeros(Q, 2, 3))


def test_vandermonde_over_roots_of_unity():
    ctx = get_context(3)
    nodes = [ctx.zeta(k) for k in range(3)]
    matrix = power_matrix(ctx, nodes, range(3))
    assert not det(matrix).is_zero()
    assert det(power_matrix(ctx, [ctx.one, ctx.one], range(2))).is_zero()


def test_binomial_triangle_is_unipotent():
    matrix = binomial_triangle(Q, 4, 5)
    assert det(matrix) == 1
    assert matrix[0, 3] == 125
    assert matrix[1, 3] == 75
    assert matrix[3, 0] == 0


@settings(max_examples=40)
@given(square(2), square(2))
def test_kronecker_determinant(a_rows, b_rows):
    a = ExactMatrix.from_rows(Q, a_rows)
    b = ExactMatrix.from_rows(Q, b_rows)
    # det(A (x) B) = det(A)^2 det(B)^2 for 2x2 factors
    assert det(kronecker(a, b)) == det(a) ** 2 * det(b) ** 2


@settings(max_examples=40)
@given(square(3), square(3))
def test_det_is_multiplicative(a_rows, b_rows):
    a = ExactMatrix.from_rows(Q, a_rows)
    b = ExactMatrix.from_rows(Q, b_rows)
    assert det(a @ b) == det(a) * det(b)
    assert rank(a) == rank(a.transpose())


def test_block_criterion_agrees_with_blocks():
    outer = ExactMatrix.from_rows(Q, [[1, 1], [0, 1]])
    good = ExactMatrix.from_rows(Q, [[2, 0], [0, 3]])
    bad = ExactMatrix.from_rows(Q, [[1, 1], [1, 1]])
    assert verify_block_criterion(outer, [good, good]) is True
    assert verify_block_criterion(outer, [good, bad]) is False
    assert assemble_block_matrix(outer, [good, bad]).shape == (4, 4)


def test_block_criterion_needs_invertible_outer():
    outer = ExactMatrix.from_rows(Q, [[1, 1], [1, 1]])
    block = ExactMatrix.identity(Q, 1)
    with pytest.raises(SingularHypothesisError):
        verify_block_criterion(outer, [block, block])


def test_block_sizes_must_match():
    outer = ExactMatrix.identity(Q, 2)
    with pytest.raises(DimensionMismatchError):
        assemble_block_matrix(outer, [ExactMatrix.identity(Q, 1), ExactMatrix.identity(Q, 2)])


def test_kronecker_rejects_factors_from_different_fields():
    with pytest.raises(ContextMismatchError):
        kronecker(ExactMatrix.identity(Q, 2), ExactMatrix.identity(get_context(3), 2))


def test_matrix_lemma_report_passes():
    report = verify_matrix_lemmas(r_values=(1, 2), count=8, seed=3)
    assert report.passed
    assert report.family == "-"


def test_csv_dump(tmp_path):
    path = build_shifted_matrix(1, 2, 0).to_csv(tmp_path / "shifted.csv")
    lines = path.read_text().splitlines()
    assert lines[0] == "N=1;[1],N=1;[2]"
    assert lines[1] == "N=1;[1],N=1;[1/2]"
