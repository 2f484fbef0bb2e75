"""Tests for exact root counting, isolation and interlacing."""
from fractions import Fraction

import pytest

from chowlab.core.errors import InvalidObjectError, NotRealRootedError
from chowlab.polyalg.interlacing import first_interlacing_failure, interlaces, is_interlacing_sequence
from chowlab.polyalg.polynomial import IntPolynomial
from chowlab.polyalg.roots import isolate_real_roots, is_real_rooted, real_root_count


def P(*coeffs):
    return IntPolynomial(coeffs)


def linear(root):
    """``t - root`` for an integer root."""
    return P(-root, 1)


def from_roots(*roots):
    p = IntPolynomial.one()
    for r in roots:
        p = p * linear(r)
    return p


def test_real_rootedness_examples():
    assert not is_real_rooted(P(1, 0, 1))
    assert is_real_rooted(P(1, 4, 1))
    assert is_real_rooted(P(0, 1, 7, 1))
    assert is_real_rooted(P(5))
    assert is_real_rooted(IntPolynomial.zero())


def test_real_root_count_with_multiplicity():
    p = from_roots(-1, -1, -3, 2)
    assert real_root_count(p) == 4
    assert real_root_count(p, (Fraction(-2), Fraction(3))) == 3
    assert real_root_count(p, (Fraction(-1), Fraction(0))) == 2
    assert real_root_count(p, (Fraction(-1), Fraction(0)), left_closed=False) == 0


def test_real_root_count_is_additive():
    p = from_roots(-4, -2, -2, 0, 1, 3)
    a, b, c = Fraction(-5), Fraction(-2), Fraction(7, 2)
    left = real_root_count(p, (a, b))
    right = real_root_count(p, (b, c), left_closed=False)
    assert left + right == real_root_count(p, (a, c))


@pytest.mark.parametrize(
    "p, q",
    [
        (from_roots(-2, 1), from_roots(1, 3)),
        (P(1, 0, 1), from_roots(0, 0, -1)),
        (P(1, 11, 11, 1), P(2, -1)),
        (from_roots(-1, -1, 2) * P(1, 0, 1), P(1, 4, 1)),
    ],
)
@pytest.mark.parametrize(
    "interval",
    [None, (Fraction(-3), Fraction(0)), (Fraction(-1, 2), None), (None, Fraction(1))],
)
def test_real_root_count_of_a_product_is_the_sum(p, q, interval):
    assert real_root_count(p * q, interval) == real_root_count(p, interval) + real_root_count(q, interval)


def test_real_root_count_rejects_zero_and_empty_interval():
    with pytest.raises(InvalidObjectError):
        real_root_count(IntPolynomial.zero())
    with pytest.raises(InvalidObjectError):
        real_root_count(P(1, 1), (Fraction(2), Fraction(1)))


def test_isolation_separates_roots():
    p = from_roots(-3, -1, -1, 0)
    iso = isolate_real_roots(p)
    assert iso.root_count == 4
    assert iso.multiplicities == (1, 2, 1)
    for (lo, hi), root in zip(iso.intervals, (-3, -1, 0)):
        assert lo < root <= hi
    for (_, hi), (lo, _) in zip(iso.intervals, iso.intervals[1:]):
        assert hi <= lo


def test_isolation_of_quadratic_irrational_roots():
    iso = isolate_real_roots(P(1, 4, 1))
    assert len(iso.intervals) == 2
    assert iso.intervals[1][1] <= 0


def test_interlacing_examples():
    assert interlaces(from_roots(-2), from_roots(-1, -3))
    assert not interlaces(from_roots(-4), from_roots(-1, -2))
    assert interlaces(from_roots(-1), from_roots(-1))
    assert interlaces(IntPolynomial.zero(), from_roots(-1, -2))
    assert interlaces(P(0, 1), P(0, 0, 1))


def test_interlacing_rejects_non_real_rooted():
    with pytest.raises(NotRealRootedError):
        interlaces(P(1, 0, 1), P(1, 1))


def test_interlacing_sequence():
    assert is_interlacing_sequence([P(1, 1)])
    assert is_interlacing_sequence([from_roots(-2), from_roots(-1, -3)])
    # refined Eulerian polynomials of n = 3
    assert is_interlacing_sequence([P(1, 1), P(0, 2), P(0, 1, 1)])
    failure = first_interlacing_failure([from_roots(-4), from_roots(-1, -2), from_roots(-3)])
    assert (failure.i, failure.j) == (0, 1)
