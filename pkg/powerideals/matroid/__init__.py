from powerideals.matroid.oracle import (
    MatroidOracle,
    bits,
    isomorphic_matroids,
    matroid_of,
    same_matroid,
    same_rank_function,
    to_mask,
)
from powerideals.matroid.tutte import (
    TuttePolynomial,
    tutte,
    tutte_basis_activity,
    tutte_deletion_contraction,
    tutte_eval,
    zonotopal_hilbert_series,
)

__all__ = [
    "MatroidOracle",
    "TuttePolynomial",
    "bits",
    "isomorphic_matroids",
    "matroid_of",
    "same_matroid",
    "same_rank_function",
    "to_mask",
    "tutte",
    "tutte_basis_activity",
    "tutte_deletion_contraction",
    "tutte_eval",
    "zonotopal_hilbert_series",
]
