from powerideals.arrangement.arrangement import (
    Arrangement,
    Stratum,
    contract,
    delete,
    dot,
    generic_point,
    large_span,
    large_strata,
    lines,
    max_multiplicity,
    minimal_stratum,
    random_invertible,
    rho_min,
    rho_of,
    strata,
    transformed,
    with_form,
)

__all__ = [
    "Arrangement",
    "Stratum",
    "contract",
    "delete",
    "dot",
    "generic_point",
    "large_span",
    "large_strata",
    "lines",
    "max_multiplicity",
    "minimal_stratum",
    "random_invertible",
    "rho_min",
    "rho_of",
    "strata",
    "transformed",
    "with_form",
]
