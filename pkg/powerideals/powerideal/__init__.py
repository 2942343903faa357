from powerideals.powerideal.ideal import (
    AMonomialSpan,
    Degree1Component,
    GeneratorFamily,
    GeneratorGroup,
    GradedSubspace,
    HilbertFunction,
    IdealSpec,
    Variant,
    a_monomial_span,
    annihilated_by_generators,
    check_c_equals_cprime,
    degree1_component,
    exact_sequence_defect,
    exponent_of,
    generator_membership,
    generators,
    hilbert_function,
    ideal_degree_span,
    inverse_system_basis,
    inverse_system_subspace,
)

__all__ = [
    "AMonomialSpan",
    "Degree1Component",
    "GeneratorFamily",
    "GeneratorGroup",
    "GradedSubspace",
    "HilbertFunction",
    "IdealSpec",
    "Variant",
    "a_monomial_span",
    "annihilated_by_generators",
    "check_c_equals_cprime",
    "degree1_component",
    "exact_sequence_defect",
    "exponent_of",
    "generator_membership",
    "generators",
    "hilbert_function",
    "ideal_degree_span",
    "inverse_system_basis",
    "inverse_system_subspace",
]
