"""Power ideals I_{A,k}, I'_{A,k} and their inverse systems, degree by degree.

The ideal I_{A,k} is generated by h^(rho_A(h)+k+1) over every nonzero h in
V. Every h lies in a unique minimal stratum X, where rho_A(h) = n - m_X, and
in characteristic 0 the powers h^e with h in X span all of Sym^e(X). So a
finite family generates the same ideal: for each stratum X, every monomial
of degree e_X = n - m_X + k + 1 in a basis of X.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement

from powerideals import config
from powerideals.arrangement import (
    Arrangement,
    Stratum,
    contract,
    delete,
    large_span,
    rho_min,
    rho_of,
    strata,
)
from powerideals.errors import AdmissibilityError, PreconditionError
from powerideals.linalg import Matrix, kernel_basis, rank, reduce_against, row_basis, rowspace_contains, rref
from powerideals.matroid import matroid_of
from powerideals.polyspace import (
    GradedPoly,
    SpaceTag,
    apply_diff,
    dual_solution,
    expand_power,
    monomial_count,
    monomial_exponents,
    pairing_matrix,
    product_of_forms,
)

logger = logging.getLogger(__name__)


class Variant(Enum):
    FULL = "full"
    LINES = "lines"


@dataclass(frozen=True)
class IdealSpec:
    arrangement: Arrangement
    k: int
    variant: Variant = Variant.FULL

    def __post_init__(self):
        bound = -(rho_min(self.arrangement) + 1)
        if self.k < bound:
            raise AdmissibilityError(
                f"k={self.k} is below -(rho+1)={bound}; power ideals are only defined for k >= -(rho+1)"
            )

    @property
    def max_degree(self) -> int:
        """n + k, the top degree in which the inverse system can be nonzero."""
        return self.arrangement.n + self.k

    def with_variant(self, variant: Variant) -> "IdealSpec":
        return IdealSpec(self.arrangement, self.k, variant)


@dataclass(frozen=True)
class GeneratorGroup:
    stratum: Stratum
    exponent: int
    polys: tuple


@dataclass(frozen=True)
class GeneratorFamily:
    spec: IdealSpec
    groups: tuple

    def polys(self, max_degree: int | None = None) -> list:
        return [
            g for group in self.groups for g in group.polys
            if max_degree is None or group.exponent <= max_degree
        ]

    @property
    def is_unit(self) -> bool:
        return any(group.exponent == 0 for group in self.groups)


@dataclass(frozen=True)
class GradedSubspace:
    ambient_dim: int
    degree: int
    tag: SpaceTag
    basis: Matrix

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def codim(self) -> int:
        return monomial_count(self.ambient_dim, self.degree) - self.dim

    def polys(self) -> list:
        return [GradedPoly(self.ambient_dim, self.degree, self.tag, row) for row in self.basis]

    def contains(self, poly: GradedPoly) -> bool:
        if poly.tag is not self.tag or poly.degree != self.degree:
            return False
        if not self.dim:
            return poly.is_zero()
        return rowspace_contains(self.basis, poly.coefficients)


@dataclass(frozen=True)
class HilbertFunction:
    dims: tuple

    def at(self, d: int) -> int:
        return self.dims[d] if 0 <= d < len(self.dims) else 0

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def support(self) -> tuple:
        """dims with trailing zero degrees dropped."""
        dims = list(self.dims)
        while dims and dims[-1] == 0:
            dims.pop()
        return tuple(dims)


@dataclass(frozen=True)
class AMonomialSpan:
    dims: tuple
    spanned: bool


@dataclass(frozen=True)
class Degree1Component:
    from_large_span: GradedSubspace
    from_inverse_system: GradedSubspace

    @property
    def agree(self) -> bool:
        return self.from_large_span.basis == self.from_inverse_system.basis

    @property
    def dim(self) -> int:
        return self.from_inverse_system.dim


def exponent_of(spec: IdealSpec, x: Stratum) -> int:
    return spec.arrangement.n - x.multiplicity + spec.k + 1


def _stratum_monomials(x: Stratum, e: int) -> tuple:
    """All degree-e products of the basis vectors of X, in ambient x-coordinates."""
    basis = list(x.basis)
    polys = []
    for exponents in monomial_exponents(x.dim, e):
        poly = GradedPoly.constant(x.basis.cols, SpaceTag.OPERATOR)
        for b, a in zip(basis, exponents):
            if a:
                poly = poly * expand_power(b, a, SpaceTag.OPERATOR)
        polys.append(poly)
    return tuple(polys)


@lru_cache(maxsize=256)
def generators(spec: IdealSpec) -> GeneratorFamily:
    groups = []
    for x in strata(spec.arrangement):
        if spec.variant is Variant.LINES and x.dim != 1:
            continue
        e = exponent_of(spec, x)
        if spec.variant is Variant.LINES:
            polys = (expand_power(x.direction(), e, SpaceTag.OPERATOR),)
        else:
            polys = _stratum_monomials(x, e)
        groups.append(GeneratorGroup(x, e, polys))
    family = GeneratorFamily(spec, tuple(groups))
    logger.debug("%s generators for k=%d: %d groups", spec.variant.value, spec.k, len(groups))
    return family


@lru_cache(maxsize=4096)
def ideal_degree_span(spec: IdealSpec, d: int) -> GradedSubspace:
    """RREF basis of the degree-d part of the ideal."""
    ambient = spec.arrangement.ambient_dim
    family = generators(spec)
    if any(g.exponent <= d and g.stratum.dim == ambient for g in family.groups):
        # Sym^e(V) is already everything in degree d >= e
        basis = Matrix.identity(monomial_count(ambient, d))
    else:
        basis = row_basis(pairing_matrix(family.polys(d), d, ambient))
    logger.debug("k=%d %s degree %d: ideal rank %d", spec.k, spec.variant.value, d, basis.rows)
    return GradedSubspace(ambient, d, SpaceTag.OPERATOR, basis)


def inverse_system_basis(spec: IdealSpec, d: int) -> list:
    span = ideal_degree_span(spec, d)
    return [dual_solution(v, span.ambient_dim, d) for v in kernel_basis(span.basis)]


def inverse_system_subspace(spec: IdealSpec, d: int) -> GradedSubspace:
    ambient = spec.arrangement.ambient_dim
    vectors = [p.coefficients for p in inverse_system_basis(spec, d)]
    basis = row_basis(Matrix.from_rows(vectors, monomial_count(ambient, d))) if vectors else \
        Matrix(0, monomial_count(ambient, d), ())
    return GradedSubspace(ambient, d, SpaceTag.SOLUTION, basis)


def _degree_dim(spec: IdealSpec, d: int) -> int:
    return ideal_degree_span(spec, d).codim


def hilbert_function(spec: IdealSpec) -> HilbertFunction:
    degrees = range(spec.max_degree + 1)
    if config.DEGREE_WORKERS > 1:
        with ThreadPoolExecutor(max_workers=config.DEGREE_WORKERS) as pool:
            dims = tuple(pool.map(lambda d: _degree_dim(spec, d), degrees))
    else:
        dims = tuple(_degree_dim(spec, d) for d in degrees)
    return HilbertFunction(dims)


def a_monomial_span(spec: IdealSpec) -> AMonomialSpan:
    """Span of the A-monomials that lie in the inverse system, per degree."""
    a = spec.arrangement
    hilbert = hilbert_function(spec)
    dims = []
    for d in range(spec.max_degree + 1):
        inverse = [p.coefficients for p in inverse_system_basis(spec, d)]
        if not inverse:
            dims.append(0)
            continue
        # rowspace test against the inverse-system basis, reduced once per degree
        reduction = rref(Matrix.from_rows(inverse))
        kept = [
            f.coefficients
            for f in (product_of_forms((a.forms[i] for i in chosen), a.ambient_dim, SpaceTag.SOLUTION)
                      for chosen in combinations_with_replacement(range(a.n), d))
            if not any(reduce_against(reduction, f.coefficients))
        ]
        dims.append(rank(Matrix.from_rows(kept)) if kept else 0)
    dims = tuple(dims)
    return AMonomialSpan(dims, dims == hilbert.dims)


def check_c_equals_cprime(a: Arrangement, k: int) -> bool:
    full = IdealSpec(a, k, Variant.FULL)
    lines_only = full.with_variant(Variant.LINES)
    return all(
        ideal_degree_span(full, d).basis == ideal_degree_span(lines_only, d).basis
        for d in range(full.max_degree + 1)
    )


def degree1_component(a: Arrangement) -> Degree1Component:
    """(C_{A,-rho})_1 two ways: as large_span^perp and from the inverse system."""
    spec = IdealSpec(a, -rho_min(a))
    perp = kernel_basis(large_span(a))
    ambient = a.ambient_dim
    by_span = GradedSubspace(
        ambient, 1, SpaceTag.SOLUTION,
        row_basis(Matrix.from_rows(perp, ambient)) if perp else Matrix(0, ambient, ()),
    )
    return Degree1Component(by_span, inverse_system_subspace(spec, 1))


def exact_sequence_defect(a: Arrangement, i: int, k: int) -> list:
    """dim(C_A)_d - dim(C_{A\\H})_{d-1} - dim(C_{A/H})_d for d = 0..n+k."""
    a.check_label(i)
    matroid = matroid_of(a)
    if matroid.is_loop(i):
        raise PreconditionError(f"hyperplane {i} is a loop")
    if matroid.is_coloop(i):
        raise PreconditionError(f"hyperplane {i} is a coloop")
    if a.ambient_dim < 2:
        raise PreconditionError("contracting a hyperplane of a line leaves a zero-dimensional space; "
                                "the defect needs ambient dimension >= 2")
    whole = hilbert_function(IdealSpec(a, k))
    deleted = hilbert_function(IdealSpec(delete(a, i), k))
    contracted = hilbert_function(IdealSpec(contract(a, i)[0], k))
    return [whole.at(d) - deleted.at(d - 1) - contracted.at(d) for d in range(a.n + k + 1)]


def annihilated_by_generators(spec: IdealSpec, d: int) -> bool:
    """Re-check the degree-d inverse system by differentiating with every generator."""
    basis = inverse_system_basis(spec, d)
    return all(
        apply_diff(g, f).is_zero()
        for f in basis
        for g in generators(spec).polys(d)
    )


def generator_membership(spec: IdealSpec, h) -> bool:
    """Whether h^(rho_A(h)+k+1) lies in the computed ideal span of its degree."""
    e = rho_of(spec.arrangement, h) + spec.k + 1
    return ideal_degree_span(spec, e).contains(expand_power(h, e, SpaceTag.OPERATOR))
