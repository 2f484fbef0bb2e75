"""
Exact real-root counting and isolation.

Counting uses Sturm sequences of the squarefree factors returned by
``sympy.Poly.sqf_list``; isolation bisects a Cauchy-bounded interval with
rational endpoints until every piece holds one root. No floating point is
involved anywhere.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from chowlab.core.errors import InvalidObjectError
from chowlab.polyalg.polynomial import IntPolynomial

logger = logging.getLogger(__name__)

Bound = Fraction | None


@dataclass(frozen=True)
class RootIsolation:
    """
    Disjoint left-open intervals ``(a, b]``, sorted increasingly, each holding
    exactly one distinct real root, with the root's multiplicity.
    """
    intervals: tuple[tuple[Fraction, Fraction], ...]
    multiplicities: tuple[int, ...]

    @property
    def root_count(self) -> int:
        return sum(self.multiplicities)


def _fraction(c: sympy.Expr) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


class _Sturm:
    """Sturm sequence of a squarefree polynomial, evaluated with ``Fraction``."""

    def __init__(self, poly: sympy.Poly):
        self.chain = [[_fraction(c) for c in s.all_coeffs()] for s in poly.sturm()]

    @staticmethod
    def _eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
        value = Fraction(0)
        for c in coeffs:
            value = value * x + c
        return value

    @staticmethod
    def _changes(signs: list[int]) -> int:
        signs = [s for s in signs if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def variations(self, x: Bound, at_minus_infinity: bool = False) -> int:
        if x is None:
            signs = []
            for coeffs in self.chain:
                lead = (coeffs[0] > 0) - (coeffs[0] < 0)
                degree = len(coeffs) - 1
                signs.append(-lead if at_minus_infinity and degree % 2 else lead)
            return self._changes(signs)
        values = (self._eval(coeffs, x) for coeffs in self.chain)
        return self._changes([(v > 0) - (v < 0) for v in values])

    def count(self, lo: Bound, hi: Bound) -> int:
        """Distinct roots in ``(lo, hi]``; ``None`` means infinite."""
        return self.variations(lo, at_minus_infinity=True) - self.variations(hi)

    def is_root(self, x: Fraction) -> bool:
        return self._eval(self.chain[0], x) == 0


def _factors(p: IntPolynomial) -> list[tuple[sympy.Poly, int]]:
    _, factors = p.to_sympy().sqf_list()
    return [(f, k) for f, k in factors if f.degree() > 0]


def real_root_count(
    p: IntPolynomial,
    interval: tuple[Bound, Bound] | None = None,
    *,
    left_closed: bool = True,
) -> int:
    """
    Counts real roots with multiplicity.

    Args:
        p: A nonzero polynomial.
        interval: ``(lo, hi)`` with ``None`` for an infinite end; ``None``
            counts over the whole real line.
        left_closed: Whether ``lo`` itself belongs to the interval; the right
            end is always included.

    Raises:
        InvalidObjectError: For the zero polynomial or an empty interval.
    """
    if p.is_zero():
        raise InvalidObjectError("the zero polynomial has infinitely many roots")
    lo, hi = interval if interval is not None else (None, None)
    if lo is not None and hi is not None and lo > hi:
        raise InvalidObjectError(f"empty interval [{lo}, {hi}]")
    total = 0
    for factor, multiplicity in _factors(p):
        sturm = _Sturm(factor)
        count = sturm.count(lo, hi)
        if left_closed and lo is not None and sturm.is_root(lo):
            count += 1
        total += count * multiplicity
    return total


def is_real_rooted(p: IntPolynomial) -> bool:
    """
    True iff every root of ``p`` is real. Constants qualify, and so does the
    zero polynomial, which interlacing treats as compatible with everything.
    """
    if p.is_zero():
        return True
    return real_root_count(p) == p.degree


def cauchy_bound(coeffs: Sequence[int]) -> Fraction:
    """A rational ``B`` with every root inside ``(-B, B)``."""
    lead = abs(coeffs[-1])
    return 1 + Fraction(max((abs(c) for c in coeffs[:-1]), default=0), lead)


def isolate_real_roots(p: IntPolynomial) -> RootIsolation:
    """
    Isolates the distinct real roots of ``p`` by rational bisection.

    The squarefree part of ``p`` is isolated first; each interval then takes
    its multiplicity from the squarefree factor that vanishes inside it.
    """
    if p.is_zero():
        raise InvalidObjectError("cannot isolate the roots of the zero polynomial")
    factors = _factors(p)
    if not factors:
        return RootIsolation((), ())
    radical = factors[0][0]
    for f, _ in factors[1:]:
        radical = radical * f
    sturm = _Sturm(radical)
    bound = cauchy_bound([int(c) for c in reversed(radical.all_coeffs())])
    intervals: list[tuple[Fraction, Fraction]] = []
    pending = [(-bound, bound)]
    while pending:
        lo, hi = pending.pop()
        count = sturm.count(lo, hi)
        if count == 0:
            continue
        if count == 1:
            intervals.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        pending.append((lo, mid))
        pending.append((mid, hi))
    intervals.sort()
    factor_sturms = [(_Sturm(f), k) for f, k in factors]
    multiplicities = []
    for lo, hi in intervals:
        multiplicities.append(next(k for s, k in factor_sturms if s.count(lo, hi) == 1))
    logger.debug("isolated %d real roots of %s", len(intervals), p)
    return RootIsolation(tuple(intervals), tuple(multiplicities))
