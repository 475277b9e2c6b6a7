"""McKay quivers, dimension counting and invariant rings for gradings of k<u,v>/(u^2 - v^2)."""

from ._core import (
    CoactionPair,
    Group,
    InternalError,
    ParseError,
    ResourceLimitError,
    ValidationError,
    analyze,
    auslander_check,
    coaction,
    enumerate_group,
    gamma_m,
    graded_dimension,
    hilbert_basis,
    hilbert_series,
    quotient_dimension,
    regularity_check,
    relators,
    survey_csv,
    toroidal_grid,
)

__all__ = [
    "CoactionPair",
    "Group",
    "InternalError",
    "ParseError",
    "ResourceLimitError",
    "ValidationError",
    "analyze",
    "auslander_check",
    "coaction",
    "enumerate_group",
    "gamma_m",
    "graded_dimension",
    "hilbert_basis",
    "hilbert_series",
    "quotient_dimension",
    "regularity_check",
    "relators",
    "survey_csv",
    "toroidal_grid",
]
