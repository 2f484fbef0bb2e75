"""
Exact univariate polynomial arithmetic and the analytic property suite:
palindromicity, unimodality, gamma-vectors, log-concavity, Sturm-based
real-rootedness, root isolation and interlacing.
"""
from chowlab.polyalg.families import (
    derangement_by_ascents,
    derangement_by_excedances,
    derangement_number,
    derangement_poly,
    eulerian,
    eulerian_by_ascents,
    eulerian_by_descents,
    refined_derangement,
    refined_eulerian,
)
from chowlab.polyalg.interlacing import (
    InterlacingFailure,
    first_interlacing_failure,
    interlaces,
    is_interlacing_sequence,
)
from chowlab.polyalg.polynomial import IntPolynomial, sum_polynomials, to_text
from chowlab.polyalg.properties import (
    gamma_vector,
    is_gamma_positive,
    is_log_concave,
    is_palindromic,
    is_unimodal,
)
from chowlab.polyalg.roots import RootIsolation, is_real_rooted, isolate_real_roots, real_root_count

__all__ = [
    "IntPolynomial",
    "InterlacingFailure",
    "RootIsolation",
    "derangement_by_ascents",
    "derangement_by_excedances",
    "derangement_number",
    "derangement_poly",
    "eulerian",
    "eulerian_by_ascents",
    "eulerian_by_descents",
    "first_interlacing_failure",
    "gamma_vector",
    "interlaces",
    "is_gamma_positive",
    "is_interlacing_sequence",
    "is_log_concave",
    "is_palindromic",
    "is_real_rooted",
    "is_unimodal",
    "isolate_real_roots",
    "real_root_count",
    "sum_polynomials",
    "to_text",
]
