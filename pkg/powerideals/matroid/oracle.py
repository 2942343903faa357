"""The matroid of an arrangement, given by its rank function."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from powerideals import config
from powerideals.arrangement import Arrangement
from powerideals.errors import GroundSetMismatchError, GroundSetTooLargeError
from powerideals.linalg import Matrix, rank


def bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def to_mask(labels) -> int:
    mask = 0
    for i in labels:
        mask |= 1 << i
    return mask


@lru_cache(maxsize=1 << 16)
def _rank(vectors: tuple, ambient_dim: int, mask: int) -> int:
    rows = [vectors[i] for i in bits(mask)]
    if not rows or ambient_dim == 0:
        return 0
    return rank(Matrix.from_rows(rows, ambient_dim))


@dataclass(frozen=True)
class MatroidOracle:
    """Rank oracle on labels 0..n-1; loop labels carry zero vectors."""

    vectors: tuple
    ambient_dim: int

    @property
    def ground_size(self) -> int:
        return len(self.vectors)

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    def rank(self, subset=None) -> int:
        """Rank of a label set, given as a bitmask or an iterable of labels."""
        if subset is None:
            mask = self.full_mask
        elif isinstance(subset, int):
            mask = subset
        else:
            mask = to_mask(subset)
        return _rank(self.vectors, self.ambient_dim, mask)

    def is_loop(self, i: int) -> bool:
        return self.rank(1 << i) == 0

    def is_coloop(self, i: int) -> bool:
        return self.rank(self.full_mask & ~(1 << i)) < self.rank()

    def closure(self, mask: int) -> int:
        r = self.rank(mask)
        return to_mask(i for i in range(self.ground_size) if self.rank(mask | (1 << i)) == r)

    def bases(self) -> list:
        r = self.rank()
        return [
            to_mask(chosen)
            for chosen in combinations(range(self.ground_size), r)
            if self.rank(to_mask(chosen)) == r
        ]

    def independent_sets(self) -> int:
        return sum(1 for mask in range(1 << self.ground_size) if self.rank(mask) == bin(mask).count("1"))


def matroid_of(a: Arrangement) -> MatroidOracle:
    zero = (0,) * a.ambient_dim
    return MatroidOracle(tuple(a.forms) + (zero,) * a.loops, a.ambient_dim)


def check_ground(m: MatroidOracle, cap: int | None = None):
    cap = config.MAX_GROUND if cap is None else cap
    if m.ground_size > cap:
        raise GroundSetTooLargeError(f"ground set of {m.ground_size} labels exceeds the cap of {cap}")


def same_rank_function(m1: MatroidOracle, m2: MatroidOracle) -> bool:
    if m1.ground_size != m2.ground_size:
        raise GroundSetMismatchError(f"ground sets of size {m1.ground_size} and {m2.ground_size} differ")
    return all(m1.rank(mask) == m2.rank(mask) for mask in range(1 << m1.ground_size))


def same_matroid(a1: Arrangement, a2: Arrangement) -> bool:
    """Labeled equality: the rank functions agree on every subset."""
    return same_rank_function(matroid_of(a1), matroid_of(a2))


def _permuted(mask: int, perm) -> int:
    return to_mask(perm[i] for i in bits(mask))


def isomorphic_matroids(m1: MatroidOracle, m2: MatroidOracle) -> bool:
    """Brute-force search for a label permutation carrying bases to bases."""
    if m1.ground_size != m2.ground_size:
        return False
    check_ground(m1, config.ISOMORPHISM_MAX_GROUND)
    if m1.rank() != m2.rank():
        return False
    bases1, bases2 = set(m1.bases()), m2.bases()
    if len(bases1) != len(bases2):
        return False
    if sorted(m1.rank(1 << i) for i in range(m1.ground_size)) != sorted(
        m2.rank(1 << i) for i in range(m2.ground_size)
    ):
        return False
    return any(
        all(_permuted(b, perm) in bases1 for b in bases2)
        for perm in permutations(range(m1.ground_size))
    )
