from powerideals.polyspace.graded import (
    GradedPoly,
    MonomialIndex,
    SpaceTag,
    apolarity_gram,
    apply_diff,
    dual_solution,
    expand_power,
    linear_form,
    monomial_count,
    monomial_exponents,
    monomial_index,
    multiples_in_degree,
    pairing_matrix,
    product_of_forms,
)

__all__ = [
    "GradedPoly",
    "MonomialIndex",
    "SpaceTag",
    "apolarity_gram",
    "apply_diff",
    "dual_solution",
    "expand_power",
    "linear_form",
    "monomial_count",
    "monomial_exponents",
    "monomial_index",
    "multiples_in_degree",
    "pairing_matrix",
    "product_of_forms",
]
