"""Signed simplex-volume coefficients for n+2 points in R^n.

For points A_0..A_{n+1} the library computes the coefficients
Delta_i = det M_i (n! times the signed volume of the simplex omitting A_i)
and checks, exactly over rationals or approximately over doubles, that

    sum_i (-1)^(i(n+1)) * Delta_i * A_i = 0
    sum_i (-1)^(i(n+1)) * Delta_i       = 0

Barycentric coordinates, degeneracy predicates and dependence certificates
are derived from the same coefficients.

Exact values cross the boundary as canonical strings ("p/q", or "p" when the
denominator is 1). Coordinates may be Python ints, strings ("3", "1/4",
"0.25" -- parsed exactly) or floats (contributing their exact binary value).
"""

from ._core import (
    AllDegenerateError,
    DegenerateSimplexError,
    DimensionMismatchError,
    NonFiniteError,
    ParseError,
    RankDeficientError,
    barycentric,
    coefficients,
    delta,
    delta_expanded,
    dependence_certificate,
    generate_configuration,
    is_degenerate_simplex,
    nullspace_oracle,
    run_suite,
    verify,
)

__all__ = [
    "AllDegenerateError",
    "DegenerateSimplexError",
    "DimensionMismatchError",
    "NonFiniteError",
    "ParseError",
    "RankDeficientError",
    "barycentric",
    "coefficients",
    "delta",
    "delta_expanded",
    "dependence_certificate",
    "generate_configuration",
    "is_degenerate_simplex",
    "nullspace_oracle",
    "run_suite",
    "verify",
]
