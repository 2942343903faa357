"""Seeded pencil arrangements in dimension 3.

Three lines L1, L2, L3 through the origin, and m planes through each line.
Genericity is not assumed: every draw is checked, and redrawn from the same
seeded stream until it passes or the budget runs out.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from powerideals import config
from powerideals.arrangement import Arrangement, large_strata, rho_min, with_form
from powerideals.errors import GenericityError, PreconditionError
from powerideals.linalg import Matrix, kernel_basis, rank, row_basis, to_vector
from powerideals.matroid import bits, matroid_of, same_matroid

logger = logging.getLogger(__name__)

COPLANAR_DIRECTIONS = ((1, 0, 0), (0, 1, 0), (1, 1, 0))
GENERIC_DIRECTIONS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
COEFFICIENT_BOUND = 5


@dataclass(frozen=True)
class PencilConfig:
    directions: tuple
    m: int
    coplanar: bool
    seed: int
    strict_large_lines: bool = True

    def __post_init__(self):
        directions = tuple(to_vector(d) for d in self.directions)
        if len(directions) != 3 or any(len(d) != 3 for d in directions):
            raise PreconditionError("a pencil configuration needs three directions in dimension 3")
        for i in range(3):
            for j in range(i + 1, 3):
                if rank(Matrix.from_rows([directions[i], directions[j]])) != 2:
                    raise PreconditionError(f"directions L{i + 1} and L{j + 1} are dependent")
        expected = 2 if self.coplanar else 3
        if rank(Matrix.from_rows(directions)) != expected:
            raise PreconditionError(
                f"directions have rank {rank(Matrix.from_rows(directions))}, "
                f"coplanar={self.coplanar} requires {expected}"
            )
        if self.m < 0:
            raise PreconditionError("pencil size must be non-negative")
        object.__setattr__(self, "directions", directions)

    @classmethod
    def coplanar_pencils(cls, m: int, seed: int, strict_large_lines: bool | None = None) -> "PencilConfig":
        strict = m >= 3 if strict_large_lines is None else strict_large_lines
        return cls(COPLANAR_DIRECTIONS, m, True, seed, strict)

    @classmethod
    def generic_pencils(cls, m: int, seed: int, strict_large_lines: bool | None = None) -> "PencilConfig":
        strict = m >= 3 if strict_large_lines is None else strict_large_lines
        return cls(GENERIC_DIRECTIONS, m, False, seed, strict)

    def line_bases(self) -> list:
        return [row_basis(Matrix.from_rows([d])) for d in self.directions]


def coefficient_bound(m: int, attempt: int) -> int:
    """Coincidences between pencils fall off like m^3 / bound^2; the bound grows with both."""
    return COEFFICIENT_BOUND * max(m, 1) ** 2 * attempt


def _draw(rng: random.Random, pencil: list, others: list, bound: int) -> tuple:
    """A plane through the pencil's line that contains none of the other directions."""
    while True:
        a = rng.randint(-bound, bound)
        b = rng.randint(-bound, bound)
        if not (a or b):
            continue
        form = tuple(a * u + b * v for u, v in zip(*pencil))
        if all(sum(f * x for f, x in zip(form, d)) for d in others):
            return form


def _is_pencil_matroid(a: Arrangement, m: int) -> bool:
    """rank(S) = min(3, sum over pencils of min(|S cap pencil|, 2))."""
    matroid = matroid_of(a)
    for mask in range(1 << a.n):
        counts = [0, 0, 0]
        for i in bits(mask):
            counts[i // m] += 1
        if matroid.rank(mask) != min(3, sum(min(c, 2) for c in counts)):
            return False
    return True


def post_check_failures(a: Arrangement, cfg: PencilConfig) -> list:
    failures = []
    if rho_min(a) != 2 * cfg.m:
        failures.append(f"rho={rho_min(a)} != 2m")
    top = {x.basis for x in large_strata(a)}
    wanted = set(cfg.line_bases())
    if cfg.strict_large_lines and top != wanted:
        failures.append("large strata are not exactly L1, L2, L3")
    if not cfg.strict_large_lines and not wanted <= top:
        failures.append("some L_i is not large")
    if any(
        rank(Matrix.from_rows([a.forms[i], a.forms[j]])) < 2
        for i in range(a.n) for j in range(i + 1, a.n)
    ):
        failures.append("proportional forms")
    if not failures and cfg.m and not _is_pencil_matroid(a, cfg.m):
        failures.append("matroid is not the generic pencil matroid")
    return failures


def build_pencil_arrangement(cfg: PencilConfig, budget: int | None = None) -> Arrangement:
    budget = config.REDRAW_BUDGET if budget is None else budget
    rng = random.Random(cfg.seed)
    pencils = [kernel_basis(Matrix.from_rows([d])) for d in cfg.directions]
    failures = []
    for attempt in range(1, budget + 1):
        bound = coefficient_bound(cfg.m, attempt)
        forms = tuple(
            _draw(rng, pencil, [d for j, d in enumerate(cfg.directions) if j != i], bound)
            for i, pencil in enumerate(pencils)
            for _ in range(cfg.m)
        )
        a = Arrangement(3, forms)
        failures = post_check_failures(a, cfg)
        if not failures:
            logger.debug("pencil arrangement m=%d coplanar=%s accepted on draw %d", cfg.m, cfg.coplanar, attempt)
            return a
        logger.info("pencil draw %d rejected: %s", attempt, "; ".join(failures))
    raise GenericityError(
        f"no admissible pencil arrangement for m={cfg.m} after {budget} draws ({'; '.join(failures)})"
    )


def extend_with_generic_plane(arrangements, seed: int, exact_large_strata: bool = True,
                              budget: int | None = None) -> tuple:
    """Add one common seeded plane that raises rho by one and keeps the large strata large.

    With ``exact_large_strata`` no new stratum may become large. When several
    arrangements are given they must still share a matroid afterwards.
    """
    budget = config.REDRAW_BUDGET if budget is None else budget
    rng = random.Random(f"{seed}:generic-plane")
    ambient = arrangements[0].ambient_dim
    # a plane avoids each of the ~n^2 lines with probability about 1 - 1/bound
    n = max(a.n for a in arrangements)
    for attempt in range(1, budget + 1):
        bound = COEFFICIENT_BOUND * n * n * attempt
        plane = tuple(rng.randint(-bound, bound) for _ in range(ambient))
        if not any(plane):
            continue
        extended = tuple(with_form(a, plane) for a in arrangements)
        ok = all(
            rho_min(b) == rho_min(a) + 1
            and _large_bases_kept(a, b, exact_large_strata)
            and all(rank(Matrix.from_rows([f, plane])) == 2 for f in a.forms)
            for a, b in zip(arrangements, extended)
        )
        if ok and all(same_matroid(extended[0], b) for b in extended[1:]):
            return extended
        logger.info("generic plane draw %d rejected", attempt)
    raise GenericityError(f"no generic plane found after {budget} draws")


def _large_bases_kept(before: Arrangement, after: Arrangement, exact: bool) -> bool:
    old = {x.basis for x in large_strata(before)}
    new = {x.basis for x in large_strata(after)}
    return new == old if exact else old <= new
