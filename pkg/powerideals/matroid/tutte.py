"""Tutte polynomials by deletion-contraction and by basis activities."""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from powerideals.errors import PreconditionError, TutteMismatchError
from powerideals.linalg import to_rational
from powerideals.matroid.oracle import MatroidOracle, bits, check_ground

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TuttePolynomial:
    """coefficients[i][j] is the coefficient of x^i y^j."""

    coefficients: tuple

    @classmethod
    def from_terms(cls, terms: dict) -> "TuttePolynomial":
        terms = {key: c for key, c in terms.items() if c}
        if not terms:
            return cls(((0,),))
        width = max(i for i, _ in terms) + 1
        height = max(j for _, j in terms) + 1
        return cls(tuple(tuple(terms.get((i, j), 0) for j in range(height)) for i in range(width)))

    def terms(self) -> dict:
        return {(i, j): c for i, row in enumerate(self.coefficients) for j, c in enumerate(row) if c}

    def __str__(self):
        pieces = []
        for (i, j), c in sorted(self.terms().items(), key=lambda t: (-t[0][0] - t[0][1], -t[0][0])):
            factors = [f"{v}^{e}" if e > 1 else v for v, e in (("x", i), ("y", j)) if e]
            pieces.append("*".join(([str(c)] if c != 1 or not factors else []) + factors))
        return " + ".join(pieces) or "0"


def _shift(poly: dict, dx: int, dy: int) -> dict:
    return {(i + dx, j + dy): c for (i, j), c in poly.items()}


def tutte_deletion_contraction(m: MatroidOracle) -> TuttePolynomial:
    """Recursion on the lowest surviving label.

    The memo is keyed by the surviving label set and the closure of the
    contracted labels, which together determine the minor.
    """
    check_ground(m)
    memo = {}

    def solve(surviving: int, flat: int) -> dict:
        if not surviving:
            return {(0, 0): 1}
        key = (surviving, flat)
        if key in memo:
            return memo[key]
        low = surviving & -surviving
        rest = surviving & ~low
        base = m.rank(flat)
        if m.rank(flat | low) == base:
            result = _shift(solve(rest, flat), 0, 1)
        elif m.rank(rest | flat) < m.rank(surviving | flat):
            result = _shift(solve(rest, m.closure(flat | low)), 1, 0)
        else:
            result = defaultdict(int, solve(rest, flat))
            for key2, c in solve(rest, m.closure(flat | low)).items():
                result[key2] += c
            result = dict(result)
        memo[key] = result
        return result

    poly = solve(m.full_mask, m.closure(0))
    logger.debug("deletion-contraction visited %d minors", len(memo))
    return TuttePolynomial.from_terms(poly)


def tutte_basis_activity(m: MatroidOracle) -> TuttePolynomial:
    """Sum over bases of x^internal y^external with the label order."""
    check_ground(m)
    bases = m.bases()
    is_basis = set(bases)
    terms = defaultdict(int)
    for b in bases:
        inside = list(bits(b))
        outside = [f for f in range(m.ground_size) if not b >> f & 1]
        internal = sum(
            1 for e in inside
            if not any(((b & ~(1 << e)) | (1 << f)) in is_basis for f in outside if f < e)
        )
        external = sum(
            1 for e in outside
            if not any(((b & ~(1 << f)) | (1 << e)) in is_basis for f in inside if f < e)
        )
        terms[internal, external] += 1
    return TuttePolynomial.from_terms(terms)


def tutte(m: MatroidOracle) -> TuttePolynomial:
    by_recursion = tutte_deletion_contraction(m)
    by_activity = tutte_basis_activity(m)
    if by_recursion != by_activity:
        raise TutteMismatchError(f"deletion-contraction gave {by_recursion}, basis activities gave {by_activity}")
    return by_recursion


def tutte_eval(t: TuttePolynomial, x0, y0) -> Fraction:
    x0, y0 = to_rational(x0), to_rational(y0)
    return sum((c * x0 ** i * y0 ** j for (i, j), c in t.terms().items()), Fraction(0))


def _poly_mul(p: list, q: list) -> list:
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


ZONOTOPAL_X = {-2: [], -1: [1], 0: [1, 1]}


def zonotopal_hilbert_series(t: TuttePolynomial, ground_size: int, rank: int, k: int) -> list:
    """Per-degree coefficients of q^(n-r) T(x(q), 1/q) for the zonotopal spaces.

    x(q) is 0 for the internal space (k=-2), 1 for the central space (k=-1)
    and 1+q for the external space (k=0).
    """
    if k not in ZONOTOPAL_X:
        raise PreconditionError(f"no zonotopal Tutte specialisation for k={k}; use k in -2, -1, 0")
    shift = ground_size - rank
    series = defaultdict(int)
    for (i, j), c in t.terms().items():
        power = [1]
        for _ in range(i):
            power = _poly_mul(power, ZONOTOPAL_X[k])
        for d, coefficient in enumerate(power):
            series[d + shift - j] += c * coefficient
    if any(d < 0 and c for d, c in series.items()):
        raise PreconditionError("Tutte coefficients exceed the corank")
    top = max((d for d, c in series.items() if c), default=-1)
    return [series[d] for d in range(top + 1)]
