"""Exact rational matrices and the row-reduction kernel.

Everything here is immutable and works over :class:`fractions.Fraction`,
so ranks and bases are exact and reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from powerideals.errors import PreconditionError

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not exact; pass a Fraction or 'p/q'")
    return Fraction(value)


def to_vector(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise PreconditionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> "Matrix":
        rows = [to_vector(r) for r in rows]
        if cols is None:
            if not rows:
                raise PreconditionError("column count is ambiguous for an empty row list")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise PreconditionError(f"row of length {len(r)} in a matrix with {cols} columns")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows(([Fraction(int(i == j)) for j in range(n)] for i in range(n)), n)

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __iter__(self):
        return (self.row(i) for i in range(self.rows))

    def matvec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise PreconditionError(f"vector of length {len(v)} against {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise PreconditionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [tuple(other.entries[j::other.cols]) for j in range(other.cols)]
        return Matrix.from_rows(
            ([sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in columns] for r in self),
            other.cols,
        )


class RowReduction(NamedTuple):
    reduced: Matrix
    rank: int
    pivot_columns: tuple


def rref(m: Matrix) -> RowReduction:
    """Reduced row echelon form by Gauss-Jordan elimination.

    The reduced matrix keeps the shape of ``m``; zero rows sink to the bottom.
    """
    rows = m.to_rows()
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        pivot_row = rows[r]
        support = [j for j in range(c, m.cols) if pivot_row[j] != 0]
        for i in range(m.rows):
            if i == r:
                continue
            factor = rows[i][c]
            if factor != 0:
                target = rows[i]
                for j in support:
                    target[j] -= factor * pivot_row[j]
        pivots.append(c)
        r += 1
    return RowReduction(Matrix.from_rows(rows, m.cols) if m.rows else m, r, tuple(pivots))


def rank(m: Matrix) -> int:
    return rref(m).rank


def row_basis(m: Matrix) -> Matrix:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    reduction = rref(m)
    return Matrix(reduction.rank, m.cols, reduction.reduced.entries[: reduction.rank * m.cols])


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space, one vector per free column.

    Each vector carries a 1 in its free column and zeros in the other free
    columns, so the output is deterministic.
    """
    reduced, r, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced.entries[i * m.cols + f]
        basis.append(tuple(v))
    return basis


def reduce_against(reduction: RowReduction, v: Sequence) -> list[Fraction]:
    """Residue of ``v`` after clearing the pivot columns of an RREF."""
    cols = reduction.reduced.cols
    residue = list(to_vector(v))
    for i, c in enumerate(reduction.pivot_columns):
        factor = residue[c]
        if factor != 0:
            row = reduction.reduced.entries[i * cols:(i + 1) * cols]
            for j in range(c, cols):
                if row[j] != 0:
                    residue[j] -= factor * row[j]
    return residue


def rowspace_contains(m: Matrix, v: Sequence) -> bool:
    if len(v) != m.cols:
        raise PreconditionError(f"vector of length {len(v)} against {m.cols} columns")
    return not any(reduce_against(rref(m), v))


def subspace_sum(bases: Sequence[Matrix]) -> Matrix:
    """RREF basis of the sum of the row spaces of ``bases``."""
    if not bases:
        raise PreconditionError("subspace_sum needs at least one basis to fix the column count")
    cols = bases[0].cols
    if any(b.cols != cols for b in bases):
        raise PreconditionError("subspace_sum over matrices with different column counts")
    entries = tuple(x for b in bases for x in b.entries)
    return row_basis(Matrix(len(entries) // cols if cols else 0, cols, entries))
