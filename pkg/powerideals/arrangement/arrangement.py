"""Central hyperplane arrangements over the rationals.

An arrangement is an ordered multiset of nonzero covectors; the position of
a form is its label. Contraction can produce zero restrictions, which are
dropped from ``forms`` and counted in ``loops`` so the matroid keeps them.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from powerideals.errors import PreconditionError
from powerideals.linalg import Matrix, kernel_basis, rank, row_basis, subspace_sum, to_vector

logger = logging.getLogger(__name__)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    forms: tuple
    loops: int = 0

    def __post_init__(self):
        forms = tuple(to_vector(f) for f in self.forms)
        for label, form in enumerate(forms):
            if len(form) != self.ambient_dim:
                raise PreconditionError(
                    f"form {label} has {len(form)} coefficients in a {self.ambient_dim}-dimensional space"
                )
            if not any(form):
                raise PreconditionError(f"form {label} is zero; zero forms are tracked as loops")
        if self.loops < 0:
            raise PreconditionError("negative loop count")
        object.__setattr__(self, "forms", forms)

    @classmethod
    def from_forms(cls, forms: Iterable[Sequence], ambient_dim: int | None = None) -> "Arrangement":
        forms = [to_vector(f) for f in forms]
        if ambient_dim is None:
            if not forms:
                raise PreconditionError("ambient dimension is required for an empty arrangement")
            ambient_dim = len(forms[0])
        return cls(ambient_dim, tuple(forms))

    @property
    def n(self) -> int:
        return len(self.forms)

    def form_matrix(self) -> Matrix:
        return Matrix(self.n, self.ambient_dim, tuple(x for f in self.forms for x in f))

    def check_label(self, i: int):
        if not 0 <= i < self.n:
            raise PreconditionError(f"invalid hyperplane label {i}; labels run 0..{self.n - 1}")


@dataclass(frozen=True)
class Stratum:
    """An intersection subspace X with the labels of the forms vanishing on it."""

    basis: Matrix
    containing: frozenset

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def multiplicity(self) -> int:
        return len(self.containing)

    def direction(self) -> tuple:
        """Canonical spanning vector of a line."""
        if self.dim != 1:
            raise PreconditionError(f"stratum of dimension {self.dim} is not a line")
        return self.basis.row(0)


def rho_of(a: Arrangement, h: Sequence) -> int:
    """Number of hyperplanes not containing h."""
    h = to_vector(h)
    if len(h) != a.ambient_dim:
        raise PreconditionError(f"vector of length {len(h)} in a {a.ambient_dim}-dimensional space")
    if not any(h):
        raise PreconditionError("rho is only defined for nonzero vectors")
    return sum(1 for form in a.forms if dot(form, h) != 0)


def _flat(a: Arrangement, labels: Iterable[int]) -> Stratum | None:
    labels = sorted(labels)
    if labels:
        vectors = kernel_basis(Matrix.from_rows((a.forms[i] for i in labels), a.ambient_dim))
        if not vectors:
            return None
        basis = row_basis(Matrix.from_rows(vectors, a.ambient_dim))
    else:
        if a.ambient_dim == 0:
            return None
        basis = Matrix.identity(a.ambient_dim)
    containing = frozenset(
        i for i, form in enumerate(a.forms) if all(dot(form, b) == 0 for b in basis)
    )
    return Stratum(basis, containing)


@lru_cache(maxsize=256)
def strata(a: Arrangement) -> tuple:
    """All intersection subspaces of dimension >= 1, V included.

    Built by incremental closure from V, intersecting with one hyperplane at
    a time and deduplicating on the canonical RREF basis.
    """
    root = _flat(a, ())
    if root is None:
        return ()
    seen = {root.basis: root}
    frontier = [root]
    while frontier:
        discovered = []
        for x in frontier:
            for i in range(a.n):
                if i in x.containing:
                    continue
                y = _flat(a, x.containing | {i})
                if y is None or y.basis in seen:
                    continue
                seen[y.basis] = y
                discovered.append(y)
        frontier = discovered
    found = sorted(seen.values(), key=lambda s: (-s.dim, s.basis.entries))
    logger.debug("%d strata for %d forms in dimension %d", len(found), a.n, a.ambient_dim)
    return tuple(found)


def lines(a: Arrangement) -> list:
    return [x for x in strata(a) if x.dim == 1]


def minimal_stratum(a: Arrangement, h: Sequence) -> Stratum:
    """The smallest stratum containing the nonzero vector h."""
    h = to_vector(h)
    if not any(h):
        raise PreconditionError("the zero vector lies in every stratum")
    return _flat(a, (i for i, form in enumerate(a.forms) if dot(form, h) == 0))


def max_multiplicity(a: Arrangement) -> int:
    found = strata(a)
    if not found:
        raise PreconditionError("rho is undefined in a zero-dimensional space")
    return max(x.multiplicity for x in found)


def rho_min(a: Arrangement) -> int:
    return a.n - max_multiplicity(a)


def large_strata(a: Arrangement) -> list:
    top = max_multiplicity(a)
    return [x for x in strata(a) if x.multiplicity == top]


def large_span(a: Arrangement) -> Matrix:
    """RREF basis of the span of all large vectors."""
    return subspace_sum([x.basis for x in large_strata(a)])


def delete(a: Arrangement, i: int) -> Arrangement:
    a.check_label(i)
    return Arrangement(a.ambient_dim, a.forms[:i] + a.forms[i + 1:], a.loops)


def contract(a: Arrangement, i: int) -> tuple:
    """Restrict the other forms to the hyperplane H_i.

    Returns the contracted arrangement and the embedding whose rows are the
    canonical kernel basis of l_i, so a restricted form is ``embedding @ l``.
    """
    a.check_label(i)
    embedding = Matrix.from_rows(kernel_basis(Matrix.from_rows([a.forms[i]])), a.ambient_dim)
    restricted = []
    loops = a.loops
    for j, form in enumerate(a.forms):
        if j == i:
            continue
        image = embedding.matvec(form)
        if any(image):
            restricted.append(image)
        else:
            loops += 1
    return Arrangement(a.ambient_dim - 1, tuple(restricted), loops), embedding


def with_form(a: Arrangement, form: Sequence) -> Arrangement:
    return Arrangement(a.ambient_dim, a.forms + (to_vector(form),), a.loops)


def transformed(a: Arrangement, g: Matrix) -> Arrangement:
    """Change coordinates on V by the invertible matrix g: each form l becomes l*g."""
    if g.rows != a.ambient_dim or g.cols != a.ambient_dim:
        raise PreconditionError(f"change of coordinates must be {a.ambient_dim}x{a.ambient_dim}")
    if rank(g) != a.ambient_dim:
        raise PreconditionError("change of coordinates is not invertible")
    if not a.forms:
        return a
    return Arrangement(a.ambient_dim, tuple(Matrix.from_rows(a.forms, a.ambient_dim).matmul(g)), a.loops)


def random_invertible(ambient_dim: int, rng: random.Random, bound: int = 3) -> Matrix:
    while True:
        g = Matrix.from_rows(
            ([rng.randint(-bound, bound) for _ in range(ambient_dim)] for _ in range(ambient_dim)),
            ambient_dim,
        )
        if rank(g) == ambient_dim:
            return g


def generic_point(a: Arrangement, x: Stratum, rng: random.Random, bound: int = 7) -> tuple:
    """A point of X lying on no hyperplane outside the ones containing X."""
    outside = [f for i, f in enumerate(a.forms) if i not in x.containing]
    while True:
        coefficients = [rng.randint(-bound, bound) for _ in range(x.dim)]
        point = tuple(
            sum((c * b[j] for c, b in zip(coefficients, x.basis)), Fraction(0)) for j in range(a.ambient_dim)
        )
        if any(point) and all(dot(f, point) != 0 for f in outside):
            return point
        bound += 1
