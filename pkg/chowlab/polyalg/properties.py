"""
Coefficient-level properties of polynomials: palindromicity, unimodality,
log-concavity and the gamma-vector of a palindromic polynomial.
"""
from __future__ import annotations

from chowlab.core.errors import InvalidObjectError, InvariantViolation
from chowlab.polyalg.polynomial import IntPolynomial

_ONE_PLUS_T = IntPolynomial((1, 1))


def is_palindromic(p: IntPolynomial, center_degree: int | None = None) -> bool:
    """
    Checks ``c_i = c_{D - i}`` for all ``i``.

    Args:
        p: The polynomial.
        center_degree: The symmetry degree ``D``; defaults to
            ``low_degree + degree`` so that ``t + 7t^2 + t^3`` counts as
            palindromic about ``D = 4``.
    """
    if p.is_zero():
        return True
    center = p.low_degree + p.degree if center_degree is None else center_degree
    top = max(p.degree, center)
    return all(p[i] == (p[center - i] if center - i >= 0 else 0) for i in range(top + 1))


def gamma_vector(p: IntPolynomial) -> list[int]:
    """
    Expands a palindromic ``p`` of degree ``d`` as
    ``sum gamma_i t^i (1 + t)^(d - 2i)``.

    Raises:
        InvalidObjectError: If ``p`` is not palindromic about its degree.
        InvariantViolation: If the expansion leaves a nonzero remainder.
    """
    if p.is_zero():
        return []
    d = p.degree
    if not is_palindromic(p, d):
        raise InvalidObjectError(f"gamma vector needs a palindromic polynomial, got {p}")
    remainder = p
    gamma: list[int] = []
    for i in range(d // 2 + 1):
        g = remainder[i]
        gamma.append(g)
        if g:
            remainder = remainder - (_ONE_PLUS_T ** (d - 2 * i)).shift(i) * g
    if not remainder.is_zero():
        raise InvariantViolation(f"gamma expansion of {p} left remainder {remainder}")
    return gamma


def is_gamma_positive(p: IntPolynomial) -> bool:
    return all(g >= 0 for g in gamma_vector(p))


def is_unimodal(p: IntPolynomial) -> bool:
    """Coefficients weakly increase then weakly decrease."""
    c = p.coeffs
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i + 1 >= len(c)


def has_internal_zeros(p: IntPolynomial) -> bool:
    if p.is_zero():
        return False
    return any(p[i] == 0 for i in range(p.low_degree, p.degree + 1))


def is_log_concave(p: IntPolynomial) -> bool:
    """
    ``c_i^2 >= c_{i-1} c_{i+1}`` for nonnegative coefficients without
    internal zeros.
    """
    c = p.coeffs
    if any(x < 0 for x in c) or has_internal_zeros(p):
        return False
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))
