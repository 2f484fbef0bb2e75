"""
Text forms used on the command line and in reports.

- permutation and inversion sequence: ``5,1,4,3,2``
- subset: ``{2,3,4}``
- monomial: ``h{1,2,4,5}*h{1,4}``, or ``1`` for the empty monomial
- polynomial: ``1 + 4t + t^2`` (``4*t`` is accepted on input)
- integer range: ``4..10``
"""
from __future__ import annotations

import re

from chowlab.core.errors import InvalidObjectError
from chowlab.core.ground import GroundSet, InversionSequence, Permutation, Subset
from chowlab.chow.boolean import NormalMonomial
from chowlab.chow.rewrite import RewriteResult, ZERO
from chowlab.polyalg.polynomial import IntPolynomial, to_text

_INT_LIST = re.compile(r"^\s*[\[(]?\s*(-?\d+(\s*,\s*-?\d+)*)?\s*[\])]?\s*$")
_PART = re.compile(r"([hgx])\{([^}]*)\}")
_TERM = re.compile(r"^([+-]?\d*)\s*\*?\s*(t(\^(\d+))?)?$")
_RANGE = re.compile(r"^\s*(\d+)\s*(\.\.\s*(\d+))?\s*$")


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parses ``1,2,3`` (optionally bracketed); the empty string gives ``()``."""
    match = _INT_LIST.match(text)
    if not match:
        raise InvalidObjectError(f"expected comma-separated integers, got {text!r}")
    body = match.group(1)
    return tuple(int(part) for part in body.split(",")) if body else ()


def parse_permutation(text: str) -> Permutation:
    return Permutation(parse_int_list(text))


def parse_inversion_sequence(text: str) -> InversionSequence:
    return InversionSequence(parse_int_list(text))


def parse_subset(text: str, ground: GroundSet) -> Subset:
    return ground.subset(parse_int_list(text.strip().strip("{}")))


def parse_monomial(text: str, ground: GroundSet) -> NormalMonomial:
    """
    Parses ``h{1,2}*h{1,2,3}`` into a validated ``NormalMonomial``.

    Raises:
        InvalidObjectError: On malformed text or labels outside ``ground``.
        NotNormalError: If the parts do not form a normal monomial.
    """
    body = text.strip()
    if body in {"", "1"}:
        return NormalMonomial(ground, ())
    factors = [f.strip() for f in body.split("*")]
    parts = []
    for factor in factors:
        match = _PART.fullmatch(factor)
        if not match:
            raise InvalidObjectError(f"cannot parse monomial factor {factor!r}")
        parts.append(parse_int_list(match.group(2)))
    return NormalMonomial.from_parts(ground, parts)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parses ``1 + 4t + t^2``, ``3t^2 - t`` or ``0``."""
    compact = text.replace(" ", "")
    if not compact:
        raise InvalidObjectError("empty polynomial")
    coeffs: dict[int, int] = {}
    for raw in re.findall(r"[+-]?[^+-]+", compact):
        match = _TERM.match(raw)
        if not match or raw in {"+", "-"}:
            raise InvalidObjectError(f"cannot parse polynomial term {raw!r}")
        sign_digits, variable, _, power = match.groups()
        if variable is None:
            if sign_digits in {"", "+", "-"}:
                raise InvalidObjectError(f"cannot parse polynomial term {raw!r}")
            degree, coeff = 0, int(sign_digits)
        else:
            degree = int(power) if power else 1
            coeff = int(sign_digits + "1") if sign_digits in {"", "+", "-"} else int(sign_digits)
        coeffs[degree] = coeffs.get(degree, 0) + coeff
    top = max(coeffs)
    return IntPolynomial(tuple(coeffs.get(d, 0) for d in range(top + 1)))


def parse_range(text: str) -> range:
    """``4..10`` gives ``range(4, 11)``; a single integer gives a one-element range."""
    match = _RANGE.match(text)
    if not match:
        raise InvalidObjectError(f"expected a range like 4..10, got {text!r}")
    lo = int(match.group(1))
    hi = int(match.group(3)) if match.group(3) else lo
    if hi < lo:
        raise InvalidObjectError(f"empty range {text!r}")
    return range(lo, hi + 1)


def format_sequence(values: tuple[int, ...]) -> str:
    return ",".join(str(v) for v in values)


def format_rewrite_result(result: RewriteResult) -> str:
    return str(ZERO) if result is ZERO else format_sequence(result)


def format_polynomial(p: IntPolynomial) -> str:
    return to_text(p)
