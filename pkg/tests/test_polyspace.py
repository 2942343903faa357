import random
from fractions import Fraction

import pytest
import sympy

from powerideals.errors import PreconditionError, SpaceMismatchError
from powerideals.linalg import Matrix, kernel_basis, row_basis
from powerideals.polyspace import (
    GradedPoly,
    SpaceTag,
    apolarity_gram,
    apply_diff,
    dual_solution,
    expand_power,
    monomial_count,
    monomial_exponents,
    multiples_in_degree,
    pairing_matrix,
    product_of_forms,
)

X, Y = SpaceTag.OPERATOR, SpaceTag.SOLUTION
y1, y2, y3 = sympy.symbols("y1 y2 y3")


def to_sympy(poly):
    variables = sympy.symbols(f"y1:{poly.ambient_dim + 1}")
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.prod([v ** a for v, a in zip(variables, e)])
         for e, c in poly.terms()),
        sympy.Integer(0),
    )


def test_monomial_order_is_graded_lex():
    assert monomial_exponents(3, 2) == (
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
    )
    assert monomial_count(4, 2) == 10
    assert monomial_count(3, -1) == 0


def test_expand_power_is_multinomial():
    assert expand_power((1, 1), 2, X).coefficients == (1, 2, 1)
    cube = expand_power((1, 2, 3), 3, Y)
    assert sympy.expand(to_sympy(cube) - (y1 + 2 * y2 + 3 * y3) ** 3) == 0


def test_expand_power_of_zero_vector():
    with pytest.raises(PreconditionError):
        expand_power((0, 0), 2, X)
    assert expand_power((0, 0), 0, X).coefficients == (1,)


def test_apply_diff_matches_sympy():
    op = GradedPoly.from_terms(3, 2, X, [((1, 1, 0), 1), ((0, 0, 2), 2)])
    f = expand_power((1, 2, 3), 4, Y)
    expected = sympy.diff(to_sympy(f), y1, y2) + 2 * sympy.diff(to_sympy(f), y3, 2)
    assert sympy.expand(to_sympy(apply_diff(op, f)) - expected) == 0


def test_apply_diff_checks_tags_and_degrees():
    op = expand_power((1, 0), 1, X)
    with pytest.raises(SpaceMismatchError):
        apply_diff(op, expand_power((1, 0), 1, X))
    with pytest.raises(PreconditionError):
        apply_diff(expand_power((1, 1), 3, X), expand_power((1, 0), 1, Y))


def test_operator_and_solution_do_not_mix():
    with pytest.raises(SpaceMismatchError):
        expand_power((1, 0), 1, X) * expand_power((0, 1), 1, Y)
    with pytest.raises(SpaceMismatchError):
        pairing_matrix([expand_power((1, 0), 1, Y)], 2)


def test_product_of_forms():
    assert product_of_forms([], 2, Y).coefficients == (1,)
    p = product_of_forms([(1, 0), (1, -1)], 2, Y)
    assert str(p) == "y1^2 - y1*y2"


def test_rendering():
    p = GradedPoly.from_terms(3, 3, Y, [((2, 1, 0), 2), ((0, 0, 3), -1)])
    assert str(p) == "2*y1^2*y2 - y3^3"
    assert str(GradedPoly.zero(2, 1, X)) == "0"
    assert str(GradedPoly.constant(2, Y)) == "1"


def test_apolarity_gram_is_diagonal_factorials():
    gram = apolarity_gram(2, 2)
    assert gram.to_rows() == [[2, 0, 0], [0, 1, 0], [0, 0, 2]]


def test_dual_solution_turns_pairing_into_dot_product():
    g = expand_power((1, 1), 2, X)
    v = (3, 5, 7)
    f = dual_solution(v, 2, 2)
    assert f.coefficients == (Fraction(3, 2), 5, Fraction(7, 2))
    assert apply_diff(g, f).coefficients[0] == sum(a * b for a, b in zip(g.coefficients, v))


def test_pairing_matrix_rows_are_multiples():
    g = expand_power((1, 0), 1, X)
    m = pairing_matrix([g], 2)
    assert m.rows == len(multiples_in_degree(g, 2)) == 2
    assert m.cols == 3
    assert pairing_matrix([], 1, ambient_dim=3).rows == 0


def test_evaluate():
    assert expand_power((1, 2), 2, Y).evaluate((1, 1)) == 9


def test_arithmetic():
    p = expand_power((1, 2), 2, Y)
    assert (p - p).is_zero()
    assert (p + p).coefficients == p.scaled(2).coefficients
    with pytest.raises(PreconditionError):
        p + expand_power((1, 2), 1, Y)


def random_form(rng, ambient_dim):
    while True:
        h = tuple(rng.randint(-3, 3) for _ in range(ambient_dim))
        if any(h):
            return h


@pytest.mark.parametrize("seed", range(20))
def test_expand_power_evaluates_to_the_power(seed):
    rng = random.Random(seed)
    ambient_dim = rng.randint(1, 4)
    h = random_form(rng, ambient_dim)
    e = rng.randint(0, 4)
    point = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(ambient_dim))
    assert expand_power(h, e, Y).evaluate(point) == sum(a * b for a, b in zip(h, point)) ** e


def test_apply_diff_is_bilinear():
    rng = random.Random(7)
    f1 = expand_power(random_form(rng, 3), 3, Y)
    f2 = product_of_forms([random_form(rng, 3) for _ in range(3)], 3, Y)
    op1 = expand_power(random_form(rng, 3), 2, X)
    op2 = GradedPoly.from_terms(3, 2, X, [((1, 0, 1), 3), ((0, 2, 0), -1)])
    a, b = Fraction(2, 3), Fraction(-5)
    assert apply_diff(op1, f1.scaled(a) + f2.scaled(b)) == apply_diff(op1, f1).scaled(a) + apply_diff(op1, f2).scaled(b)
    assert apply_diff(op1.scaled(a) + op2.scaled(b), f1) == apply_diff(op1, f1).scaled(a) + apply_diff(op2, f1).scaled(b)


@pytest.mark.parametrize("ambient_dim", [1, 2, 3])
@pytest.mark.parametrize("degree", [1, 2, 3, 4])
def test_gram_kernel_equals_rescaled_dot_kernel(ambient_dim, degree):
    rng = random.Random(f"{ambient_dim}:{degree}")
    ops = [expand_power(random_form(rng, ambient_dim), rng.randint(1, degree), X) for _ in range(ambient_dim)]
    m = pairing_matrix(ops, degree, ambient_dim)
    by_dot = [dual_solution(v, ambient_dim, degree).coefficients for v in kernel_basis(m)]
    by_gram = kernel_basis(m.matmul(apolarity_gram(ambient_dim, degree)))
    assert len(by_dot) == len(by_gram)
    if by_dot:
        assert row_basis(Matrix.from_rows(by_dot)) == row_basis(Matrix.from_rows(by_gram))
    for coefficients in by_dot:
        f = GradedPoly(ambient_dim, degree, Y, coefficients)
        assert all(apply_diff(g, f).is_zero() for g in ops if g.degree <= degree)
