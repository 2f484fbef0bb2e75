"""
Statistic generating functions computed by exhaustive enumeration: Eulerian
and derangement polynomials and their refinements by the last entry of the
inversion sequence.

The two-route functions (``eulerian``, ``derangement_poly``) compute the
polynomial over inversion sequences and again over permutations, and raise
``InvariantViolation`` if the routes disagree.
"""
from __future__ import annotations

from chowlab.core.enumerate import (
    enumerate_derangement_seqs,
    enumerate_inversion_sequences,
    enumerate_permutations,
)
from chowlab.core.errors import InvalidObjectError, InvariantViolation, ResourceGuardError
from chowlab.core.ground import GroundSet
from chowlab.core.statistics import ascent_count, descent_count, excedance_count, is_fixed_point_free
from chowlab.polyalg.polynomial import IntPolynomial


def check_budget(n: int, max_n: int | None, what: str) -> None:
    """Raises ``ResourceGuardError`` when ``n`` exceeds ``max_n``."""
    if max_n is not None and n > max_n:
        raise ResourceGuardError(f"{what} for n={n} exceeds the enumeration budget n <= {max_n}")


def eulerian_by_ascents(n: int) -> IntPolynomial:
    return IntPolynomial.from_exponents(ascent_count(e) for e in enumerate_inversion_sequences(n))


def eulerian_by_descents(n: int) -> IntPolynomial:
    return IntPolynomial.from_exponents(descent_count(p) for p in enumerate_permutations(GroundSet.canonical(n)))


def eulerian(n: int, max_n: int | None = None) -> IntPolynomial:
    """
    The Eulerian polynomial ``A_n``.

    Raises:
        InvalidObjectError: If ``n < 1``.
        ResourceGuardError: If ``n > max_n``.
        InvariantViolation: If the ascent and descent routes disagree.
    """
    if n < 1:
        raise InvalidObjectError(f"Eulerian polynomial needs n >= 1, got {n}")
    check_budget(n, max_n, "Eulerian polynomial")
    by_ascents = eulerian_by_ascents(n)
    by_descents = eulerian_by_descents(n)
    if by_ascents != by_descents:
        raise InvariantViolation(f"A_{n}: ascents give {by_ascents}, descents give {by_descents}")
    return by_ascents


def derangement_by_ascents(n: int) -> IntPolynomial:
    return IntPolynomial.from_exponents(ascent_count(e) for e in enumerate_derangement_seqs(n))


def derangement_by_excedances(n: int) -> IntPolynomial:
    return IntPolynomial.from_exponents(
        excedance_count(p)
        for p in enumerate_permutations(GroundSet.canonical(n))
        if is_fixed_point_free(p)
    )


def derangement_poly(n: int, max_n: int | None = None) -> IntPolynomial:
    """
    The derangement polynomial ``d_n``.

    Raises:
        InvalidObjectError: If ``n < 2``.
        ResourceGuardError: If ``n > max_n``.
        InvariantViolation: If the excedance and ascent routes disagree.
    """
    if n < 2:
        raise InvalidObjectError(f"derangement polynomial needs n >= 2, got {n}")
    check_budget(n, max_n, "derangement polynomial")
    by_ascents = derangement_by_ascents(n)
    by_excedances = derangement_by_excedances(n)
    if by_ascents != by_excedances:
        raise InvariantViolation(f"d_{n}: ascents give {by_ascents}, excedances give {by_excedances}")
    return by_ascents


def refined_eulerian(n: int, max_n: int | None = None) -> list[IntPolynomial]:
    """``[A^0_n, ..., A^{n-1}_n]`` where ``A^i_n`` sums over ``e_n = i``."""
    if n < 1:
        raise InvalidObjectError(f"refined Eulerian polynomials need n >= 1, got {n}")
    check_budget(n, max_n, "refined Eulerian polynomials")
    buckets: list[list[int]] = [[] for _ in range(n)]
    for e in enumerate_inversion_sequences(n):
        buckets[e[-1]].append(ascent_count(e))
    return [IntPolynomial.from_exponents(b) for b in buckets]


def refined_derangement(n: int, max_n: int | None = None) -> list[IntPolynomial]:
    """
    ``[d^1_n, ..., d^{n-1}_n]`` where ``d^i_n`` sums over ``e in D_n`` with
    ``e_n = i``. The ``i = 0`` part is always zero and is left out.
    """
    if n < 2:
        raise InvalidObjectError(f"refined derangement polynomials need n >= 2, got {n}")
    check_budget(n, max_n, "refined derangement polynomials")
    buckets: list[list[int]] = [[] for _ in range(n)]
    for e in enumerate_derangement_seqs(n):
        buckets[e[-1]].append(ascent_count(e))
    return [IntPolynomial.from_exponents(b) for b in buckets[1:]]


def derangement_number(n: int) -> int:
    """``D_n`` from ``D_n = (n - 1)(D_{n-1} + D_{n-2})``, ``D_0 = 1``, ``D_1 = 0``."""
    a, b = 1, 0
    if n == 0:
        return 1
    for m in range(2, n + 1):
        a, b = b, (m - 1) * (a + b)
    return b
