"""Homogeneous polynomials in l variables, one degree at a time.

Operators live in C[V] and are written in x-variables; solutions live in
C[V*] and are written in y-variables. The two never mix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Sequence

from powerideals.errors import PreconditionError, SpaceMismatchError
from powerideals.linalg import Matrix, to_rational, to_vector


class SpaceTag(Enum):
    OPERATOR = "x"
    SOLUTION = "y"


def monomial_count(ambient_dim: int, degree: int) -> int:
    if ambient_dim < 1:
        raise PreconditionError("polynomial spaces need at least one variable")
    if degree < 0:
        return 0
    return comb(ambient_dim + degree - 1, degree)


@lru_cache(maxsize=None)
def monomial_exponents(ambient_dim: int, degree: int) -> tuple:
    """Exponent vectors of total ``degree``, graded-lex, largest first variable first."""
    if ambient_dim == 1:
        return ((degree,),)
    return tuple(
        (a,) + rest
        for a in range(degree, -1, -1)
        for rest in monomial_exponents(ambient_dim - 1, degree - a)
    )


@dataclass(frozen=True)
class MonomialIndex:
    ambient_dim: int
    degree: int
    order: tuple = field(repr=False)
    positions: dict = field(repr=False, compare=False, hash=False)

    def __len__(self):
        return len(self.order)


@lru_cache(maxsize=None)
def monomial_index(ambient_dim: int, degree: int) -> MonomialIndex:
    order = monomial_exponents(ambient_dim, degree)
    return MonomialIndex(ambient_dim, degree, order, {e: i for i, e in enumerate(order)})


@dataclass(frozen=True)
class GradedPoly:
    ambient_dim: int
    degree: int
    tag: SpaceTag
    coefficients: tuple

    def __post_init__(self):
        expected = monomial_count(self.ambient_dim, self.degree)
        if len(self.coefficients) != expected:
            raise PreconditionError(
                f"degree-{self.degree} polynomial in {self.ambient_dim} variables needs "
                f"{expected} coefficients, got {len(self.coefficients)}"
            )

    @classmethod
    def zero(cls, ambient_dim: int, degree: int, tag: SpaceTag) -> "GradedPoly":
        return cls(ambient_dim, degree, tag, (Fraction(0),) * monomial_count(ambient_dim, degree))

    @classmethod
    def from_terms(cls, ambient_dim: int, degree: int, tag: SpaceTag, terms) -> "GradedPoly":
        index = monomial_index(ambient_dim, degree)
        coefficients = [Fraction(0)] * len(index)
        for exponents, c in terms:
            coefficients[index.positions[tuple(exponents)]] += to_rational(c)
        return cls(ambient_dim, degree, tag, tuple(coefficients))

    @classmethod
    def monomial(cls, exponents: Sequence[int], tag: SpaceTag, coefficient=1) -> "GradedPoly":
        return cls.from_terms(len(exponents), sum(exponents), tag, [(tuple(exponents), coefficient)])

    @classmethod
    def constant(cls, ambient_dim: int, tag: SpaceTag, value=1) -> "GradedPoly":
        return cls(ambient_dim, 0, tag, (to_rational(value),))

    @property
    def index(self) -> MonomialIndex:
        return monomial_index(self.ambient_dim, self.degree)

    def terms(self):
        """Nonzero (exponents, coefficient) pairs in monomial order."""
        return [(e, c) for e, c in zip(self.index.order, self.coefficients) if c != 0]

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def _check_compatible(self, other: "GradedPoly"):
        if other.tag is not self.tag:
            raise SpaceMismatchError(f"cannot combine {self.tag.name.lower()} and {other.tag.name.lower()} polynomials")
        if other.ambient_dim != self.ambient_dim:
            raise PreconditionError(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim} differ")

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        self._check_compatible(other)
        if other.degree != self.degree:
            raise PreconditionError("graded polynomials of different degrees do not add")
        return GradedPoly(self.ambient_dim, self.degree, self.tag,
                          tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "GradedPoly":
        return self.scaled(-1)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-other)

    def scaled(self, factor) -> "GradedPoly":
        factor = to_rational(factor)
        return GradedPoly(self.ambient_dim, self.degree, self.tag, tuple(factor * c for c in self.coefficients))

    def __mul__(self, other: "GradedPoly") -> "GradedPoly":
        self._check_compatible(other)
        terms = [
            (tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
            for e1, c1 in self.terms()
            for e2, c2 in other.terms()
        ]
        return GradedPoly.from_terms(self.ambient_dim, self.degree + other.degree, self.tag, terms)

    def evaluate(self, point: Sequence) -> Fraction:
        point = to_vector(point)
        return sum((c * prod((p ** a for p, a in zip(point, e)), start=Fraction(1)) for e, c in self.terms()),
                   Fraction(0))

    def __str__(self):
        terms = self.terms()
        if not terms:
            return "0"
        pieces = []
        for exponents, c in terms:
            factors = [
                f"{self.tag.value}{i + 1}" + (f"^{a}" if a > 1 else "")
                for i, a in enumerate(exponents) if a
            ]
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            pieces.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def linear_form(h: Sequence, tag: SpaceTag) -> GradedPoly:
    return expand_power(h, 1, tag)


def expand_power(h: Sequence, e: int, tag: SpaceTag) -> GradedPoly:
    """(h1 v1 + ... + hl vl)^e by the multinomial theorem."""
    h = to_vector(h)
    if e < 0:
        raise PreconditionError("negative exponent")
    if e > 0 and not any(h):
        raise PreconditionError("the zero vector has no powers in the ideal (h != 0)")
    index = monomial_index(len(h), e)
    top = factorial(e)
    coefficients = []
    for exponents in index.order:
        c = Fraction(top, prod(factorial(a) for a in exponents))
        for hi, a in zip(h, exponents):
            if a:
                c *= hi ** a
        coefficients.append(c)
    return GradedPoly(len(h), e, tag, tuple(coefficients))


def product_of_forms(forms: Iterable[Sequence], ambient_dim: int, tag: SpaceTag) -> GradedPoly:
    """Product of linear forms; the empty product is the constant 1."""
    result = GradedPoly.constant(ambient_dim, tag)
    for form in forms:
        result = result * linear_form(form, tag)
    return result


def apply_diff(op: GradedPoly, f: GradedPoly) -> GradedPoly:
    """op(d/dy) applied to f."""
    if op.tag is not SpaceTag.OPERATOR or f.tag is not SpaceTag.SOLUTION:
        raise SpaceMismatchError("apply_diff needs an operator polynomial acting on a solution polynomial")
    if op.ambient_dim != f.ambient_dim:
        raise PreconditionError(f"ambient dimensions {op.ambient_dim} and {f.ambient_dim} differ")
    if op.degree > f.degree:
        raise PreconditionError(f"operator of degree {op.degree} exceeds solution degree {f.degree}")
    terms = []
    for alpha, a in op.terms():
        for beta, b in f.terms():
            if all(x >= y for x, y in zip(beta, alpha)):
                falling = prod(factorial(x) // factorial(x - y) for x, y in zip(beta, alpha))
                terms.append((tuple(x - y for x, y in zip(beta, alpha)), a * b * falling))
    return GradedPoly.from_terms(f.ambient_dim, f.degree - op.degree, SpaceTag.SOLUTION, terms)


def multiples_in_degree(g: GradedPoly, d: int) -> list[tuple]:
    """Coefficient vectors of m*g for every monomial m of degree d - deg g."""
    if g.degree > d:
        return []
    target = monomial_index(g.ambient_dim, d)
    terms = g.terms()
    rows = []
    for shift in monomial_exponents(g.ambient_dim, d - g.degree):
        row = [Fraction(0)] * len(target)
        for exponents, c in terms:
            row[target.positions[tuple(a + s for a, s in zip(exponents, shift))]] = c
        rows.append(tuple(row))
    return rows


def pairing_matrix(ops: Sequence[GradedPoly], d: int, ambient_dim: int | None = None) -> Matrix:
    """Rows spanning the degree-d part of the ideal generated by ``ops``.

    Its kernel under the coefficient dot product is the degree-d inverse
    system written in the divided-power basis y^a/a!; see :func:`dual_solution`.
    """
    if ambient_dim is None:
        if not ops:
            raise PreconditionError("pairing_matrix needs ambient_dim when no operators are given")
        ambient_dim = ops[0].ambient_dim
    for g in ops:
        if g.tag is not SpaceTag.OPERATOR:
            raise SpaceMismatchError("ideal generators must be operator polynomials")
        if g.ambient_dim != ambient_dim:
            raise PreconditionError("generators live in different ambient spaces")
    rows = [row for g in ops for row in multiples_in_degree(g, d)]
    return Matrix(len(rows), monomial_count(ambient_dim, d), tuple(x for r in rows for x in r))


def apolarity_gram(ambient_dim: int, degree: int) -> Matrix:
    """Differentiation pairing between the degree-d monomial bases of C[V] and C[V*]."""
    order = monomial_exponents(ambient_dim, degree)
    rows = []
    for alpha in order:
        op = GradedPoly.monomial(alpha, SpaceTag.OPERATOR)
        rows.append([apply_diff(op, GradedPoly.monomial(beta, SpaceTag.SOLUTION)).coefficients[0] for beta in order])
    return Matrix.from_rows(rows, len(order))


def dual_solution(vector: Sequence, ambient_dim: int, degree: int) -> GradedPoly:
    """Solution polynomial whose apolarity pairing with an operator is the plain dot product with ``vector``.

    The pairing is diagonal with entry a! on the monomial of exponent a, so
    the coefficient on y^a is vector[a] / a!.
    """
    order = monomial_exponents(ambient_dim, degree)
    vector = to_vector(vector)
    if len(vector) != len(order):
        raise PreconditionError(f"expected {len(order)} coordinates, got {len(vector)}")
    return GradedPoly(
        ambient_dim, degree, SpaceTag.SOLUTION,
        tuple(v / prod(factorial(a) for a in alpha) for v, alpha in zip(vector, order)),
    )
