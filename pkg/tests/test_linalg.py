import random
from fractions import Fraction

import pytest
import sympy

from powerideals.errors import PreconditionError
from powerideals.linalg import (
    Matrix,
    kernel_basis,
    rank,
    reduce_against,
    row_basis,
    rowspace_contains,
    rref,
    subspace_sum,
    to_rational,
)

ROWS = [[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, -1, 2], [0, 1, Fraction(1, 3), 0]]


def as_fractions(sym):
    return [[Fraction(str(v)) for v in row] for row in sym.tolist()]


def test_rref_matches_sympy():
    reduced, r, pivots = rref(Matrix.from_rows(ROWS))
    expected, expected_pivots = sympy.Matrix([[sympy.Rational(str(v)) for v in row] for row in ROWS]).rref()
    assert reduced.to_rows() == as_fractions(expected)
    assert pivots == tuple(expected_pivots)
    assert r == 3


def test_rank_and_row_basis():
    m = Matrix.from_rows(ROWS)
    assert rank(m) == 3
    basis = row_basis(m)
    assert basis.rows == 3
    assert basis.cols == 4
    assert row_basis(basis) == basis


def test_kernel_basis_is_canonical():
    m = Matrix.from_rows([[1, 1, 0], [0, 0, 1]])
    kernel = kernel_basis(m)
    assert kernel == [(Fraction(-1), Fraction(1), Fraction(0))]
    for v in kernel:
        assert not any(m.matvec(v))


def test_kernel_dimension():
    m = Matrix.from_rows(ROWS)
    assert len(kernel_basis(m)) == m.cols - rank(m)


def test_rowspace_membership():
    m = Matrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert rowspace_contains(m, (2, 3, 5))
    assert not rowspace_contains(m, (0, 0, 1))
    assert not any(reduce_against(rref(m), (1, 1, 2)))
    with pytest.raises(PreconditionError):
        rowspace_contains(m, (1, 2))


def test_subspace_sum():
    a = Matrix.from_rows([[1, 0, 0]])
    b = Matrix.from_rows([[1, 1, 0], [2, 2, 0]])
    assert subspace_sum([a, b]) == Matrix.from_rows([[1, 0, 0], [0, 1, 0]])


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        to_rational(0.5)
    assert to_rational("3/6") == Fraction(1, 2)


def test_ragged_rows_are_rejected():
    with pytest.raises(PreconditionError):
        Matrix.from_rows([[1, 2], [3]])


def test_matmul_identity():
    m = Matrix.from_rows(ROWS)
    assert m.matmul(Matrix.identity(4)) == m


def random_matrix(rng, rows, cols):
    return Matrix.from_rows(
        ([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < 0.7 else 0 for _ in range(cols)]
         for _ in range(rows)),
        cols,
    )


@pytest.mark.parametrize("seed", range(30))
def test_random_matrices(seed):
    rng = random.Random(seed)
    m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
    reduced, r, pivots = rref(m)
    assert rref(reduced).reduced == reduced
    assert r == len(pivots) == rank(m)
    kernel = kernel_basis(m)
    assert r + len(kernel) == m.cols
    for v in kernel:
        assert not any(m.matvec(v))
    assert row_basis(m) == row_basis(row_basis(m))
