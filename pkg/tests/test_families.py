"""Tests for Eulerian and derangement polynomials and their refinements."""
from math import factorial

import pytest

from chowlab.core.errors import InvalidObjectError, ResourceGuardError
from chowlab.polyalg.families import (
    derangement_number,
    derangement_poly,
    eulerian,
    eulerian_by_ascents,
    eulerian_by_descents,
    refined_derangement,
    refined_eulerian,
)
from chowlab.polyalg.polynomial import IntPolynomial, sum_polynomials
from chowlab.polyalg.properties import is_palindromic


def P(*coeffs):
    return IntPolynomial(coeffs)


@pytest.mark.parametrize(
    "n, expected",
    [(1, P(1)), (2, P(1, 1)), (3, P(1, 4, 1)), (4, P(1, 11, 11, 1))],
)
def test_eulerian(n, expected):
    assert eulerian(n) == expected


@pytest.mark.parametrize(
    "n", [*range(1, 8), pytest.param(8, marks=pytest.mark.slow), pytest.param(9, marks=pytest.mark.slow)]
)
def test_descents_and_ascents_give_the_same_polynomial(n):
    by_descents = eulerian_by_descents(n)
    assert by_descents == eulerian_by_ascents(n)
    assert is_palindromic(by_descents)
    assert by_descents.value_sum() == factorial(n)


@pytest.mark.parametrize(
    "n, expected",
    [(2, P(0, 1)), (3, P(0, 1, 1)), (4, P(0, 1, 7, 1))],
)
def test_derangement_poly(n, expected):
    assert derangement_poly(n) == expected


def test_derangement_numbers_match_polynomials():
    assert [derangement_number(n) for n in range(7)] == [1, 0, 1, 2, 9, 44, 265]
    for n in range(2, 6):
        assert derangement_poly(n).value_sum() == derangement_number(n)


def test_refined_eulerian_n3():
    assert refined_eulerian(3) == [P(1, 1), P(0, 2), P(0, 1, 1)]
    assert sum_polynomials(refined_eulerian(5)) == eulerian(5)


def test_refined_derangement():
    assert refined_derangement(3) == [P(0, 1), P(0, 0, 1)]
    assert sum_polynomials(refined_derangement(5)) == derangement_poly(5)


def test_small_n_is_rejected():
    with pytest.raises(InvalidObjectError):
        eulerian(0)
    with pytest.raises(InvalidObjectError):
        derangement_poly(1)


def test_budget_guard():
    with pytest.raises(ResourceGuardError):
        eulerian(6, max_n=5)
    with pytest.raises(ResourceGuardError):
        refined_derangement(8, max_n=7)
