"""
Dense univariate polynomials with exact integer coefficients.

``IntPolynomial`` carries every generating function in the package: Hilbert
series, Eulerian and derangement polynomials and their refinements. Heavy
algebra (gcd, squarefree decomposition, Sturm sequences) is delegated to
``sympy.Poly`` through ``to_sympy``/``from_sympy``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import sympy

from chowlab.core.errors import InvalidObjectError

T = sympy.Symbol("t")


@dataclass(frozen=True)
class IntPolynomial:
    """
    An integer polynomial ``c_0 + c_1 t + ... + c_d t^d``.

    Trailing zero coefficients are stripped on construction, so the zero
    polynomial is ``coeffs == ()`` and equality is structural.

    Attributes:
        coeffs: Coefficients ``c_0..c_d``; the last one is nonzero.
    """
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        if degree < 0:
            raise InvalidObjectError(f"negative degree {degree}")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "IntPolynomial":
        """
        Builds ``sum t^k`` over a stream of exponents, i.e. the histogram of a
        statistic.
        """
        counts = Counter(exponents)
        if not counts:
            return cls.zero()
        if min(counts) < 0:
            raise InvalidObjectError(f"negative exponent {min(counts)}")
        return cls(tuple(counts.get(k, 0) for k in range(max(counts) + 1)))

    @classmethod
    def from_sympy(cls, poly: sympy.Poly) -> "IntPolynomial":
        """Converts a univariate ``sympy.Poly`` with integral coefficients."""
        coeffs = []
        for c in reversed(poly.all_coeffs()):
            c = sympy.Rational(c)
            if c.q != 1:
                raise InvalidObjectError(f"coefficient {c} is not an integer")
            coeffs.append(int(c.p))
        return cls(tuple(coeffs))

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coeffs)) or [0], T, domain="ZZ")

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        """Index of the lowest nonzero coefficient, ``-1`` for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(size)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        result = IntPolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiplication by ``t^k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divide_by_t(self, k: int) -> "IntPolynomial":
        """
        Exact division by ``t^k``.

        Raises:
            InvalidObjectError: If one of the ``k`` lowest coefficients is nonzero.
        """
        if any(self[i] for i in range(k)):
            raise InvalidObjectError(f"{self} is not divisible by t^{k}")
        return IntPolynomial(self.coeffs[k:])

    def __call__(self, x: Fraction | int) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def value_sum(self) -> int:
        """The coefficient sum ``p(1)``."""
        return sum(self.coeffs)

    def __str__(self) -> str:
        return to_text(self)


def to_text(p: IntPolynomial) -> str:
    """
    Renders ``p`` in increasing degree as ``1 + 4t + t^2``; unit coefficients
    are omitted except on the constant term.
    """
    terms: list[str] = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            power = "t" if k == 1 else f"t^{k}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


def sum_polynomials(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    total = IntPolynomial.zero()
    for p in polys:
        total = total + p
    return total
