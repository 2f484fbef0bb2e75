"""Tests for IntPolynomial arithmetic, text rendering and coefficient properties."""
from fractions import Fraction

import pytest

from chowlab.core.errors import InvalidObjectError
from chowlab.polyalg.polynomial import IntPolynomial, sum_polynomials, to_text
from chowlab.polyalg.properties import (
    gamma_vector,
    has_internal_zeros,
    is_gamma_positive,
    is_log_concave,
    is_palindromic,
    is_unimodal,
)


def P(*coeffs):
    return IntPolynomial(coeffs)


def test_trailing_zeros_are_stripped():
    assert P(1, 2, 0, 0) == P(1, 2)
    assert P(0, 0).is_zero()
    assert P().degree == -1
    assert P(0, 0, 3).low_degree == 2


def test_arithmetic():
    a = P(1, 1)
    assert a * a == P(1, 2, 1)
    assert a ** 3 == P(1, 3, 3, 1)
    assert a + P(0, 0, 1) == P(1, 1, 1)
    assert a - a == IntPolynomial.zero()
    assert 3 * a == P(3, 3)
    assert a.shift(2) == P(0, 0, 1, 1)
    assert P(0, 0, 1, 1).divide_by_t(2) == a
    assert a(Fraction(1, 2)) == Fraction(3, 2)
    assert P(1, 4, 1).value_sum() == 6


def test_divide_by_t_requires_divisibility():
    with pytest.raises(InvalidObjectError):
        P(1, 1).divide_by_t(1)


def test_from_exponents_is_a_histogram():
    assert IntPolynomial.from_exponents([0, 1, 1, 1, 1, 2]) == P(1, 4, 1)
    assert IntPolynomial.from_exponents([]) == IntPolynomial.zero()


def test_sympy_conversion():
    p = P(1, 11, 11, 1)
    assert IntPolynomial.from_sympy(p.to_sympy()) == p


@pytest.mark.parametrize(
    "poly, text",
    [
        (P(1, 4, 1), "1 + 4t + t^2"),
        (P(0, 1, 7, 1), "t + 7t^2 + t^3"),
        (P(1), "1"),
        (P(), "0"),
        (P(0, -1), "-t"),
        (P(2, 0, -3), "2 - 3t^2"),
    ],
)
def test_to_text(poly, text):
    assert to_text(poly) == text
    assert str(poly) == text


def test_sum_polynomials():
    assert sum_polynomials([P(1), P(0, 1), P(0, 1)]) == P(1, 2)
    assert sum_polynomials([]) == IntPolynomial.zero()


def test_palindromic():
    assert is_palindromic(P(1, 4, 1))
    assert is_palindromic(P(0, 1, 7, 1))
    assert not is_palindromic(P(1, 2))
    assert is_palindromic(P(1, 2), center_degree=2) is False
    assert is_palindromic(P(0, 1, 1), center_degree=3)


@pytest.mark.parametrize(
    "poly, gamma",
    [
        (P(1, 4, 1), [1, 2]),
        (P(1, 11, 11, 1), [1, 8]),
        (P(1, 1), [1]),
        (P(1), [1]),
    ],
)
def test_gamma_vector(poly, gamma):
    assert gamma_vector(poly) == gamma
    assert is_gamma_positive(poly)


def test_gamma_vector_rejects_non_palindromic():
    with pytest.raises(InvalidObjectError):
        gamma_vector(P(1, 2))


def test_unimodal_and_log_concave():
    assert is_unimodal(P(1, 4, 1)) and is_log_concave(P(1, 4, 1))
    assert is_unimodal(P(1, 3, 3, 1)) and is_log_concave(P(1, 3, 3, 1))
    assert not is_unimodal(P(2, 1, 2))
    assert not is_log_concave(P(1, 0, 1))
    assert has_internal_zeros(P(1, 0, 1))
    assert not has_internal_zeros(P(0, 0, 1, 2))
