from powerideals.linalg.matrix import (
    Matrix,
    Rational,
    RowReduction,
    kernel_basis,
    rank,
    reduce_against,
    row_basis,
    rowspace_contains,
    rref,
    subspace_sum,
    to_rational,
    to_vector,
)

__all__ = [
    "Matrix",
    "Rational",
    "RowReduction",
    "kernel_basis",
    "rank",
    "reduce_against",
    "row_basis",
    "rowspace_contains",
    "rref",
    "subspace_sum",
    "to_rational",
    "to_vector",
]
