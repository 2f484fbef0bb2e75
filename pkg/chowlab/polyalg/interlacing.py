"""
Interlacing of real-rooted polynomials.

``interlaces(p, q)`` holds when, after cancelling ``gcd(p, q)``, the
remaining real roots of ``p`` and ``q`` (with multiplicity) strictly alternate
and the largest of them is a root of ``q``. Equivalently the reduced root
counts satisfy ``#q - #p in {0, 1}`` and no two consecutive roots in the
merged order belong to the same polynomial. Shared roots are always
compatible. The zero polynomial interlaces everything.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy

from chowlab.core.errors import NotRealRootedError
from chowlab.polyalg.polynomial import IntPolynomial
from chowlab.polyalg.roots import is_real_rooted, isolate_real_roots, real_root_count


@dataclass(frozen=True)
class InterlacingFailure:
    """The first pair ``(i, j)``, ``i < j``, of a sequence that fails to interlace."""
    i: int
    j: int
    p: IntPolynomial
    q: IntPolynomial


def _reduce(p: IntPolynomial, q: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    sp, sq = p.to_sympy(), q.to_sympy()
    g = sympy.gcd(sp, sq)
    return IntPolynomial.from_sympy(sympy.exquo(sp, g)), IntPolynomial.from_sympy(sympy.exquo(sq, g))


def root_owners(p: IntPolynomial, q: IntPolynomial) -> list[str]:
    """
    Labels the roots of ``p * q`` in decreasing order by owner, ``"p"`` or
    ``"q"``, repeated by multiplicity. ``p`` and ``q`` must be coprime.
    """
    product = p * q
    if product.degree <= 0:
        return []
    isolation = isolate_real_roots(product)
    owners: list[str] = []
    for (lo, hi), multiplicity in zip(reversed(isolation.intervals), reversed(isolation.multiplicities)):
        in_p = p.degree > 0 and real_root_count(p, (lo, hi), left_closed=False) > 0
        owners.extend(["p" if in_p else "q"] * multiplicity)
    return owners


def interlaces(p: IntPolynomial, q: IntPolynomial) -> bool:
    """
    Tests whether ``q`` interlaces ``p`` in the sense of this module.

    Raises:
        NotRealRootedError: If a nonzero argument has nonreal roots.
    """
    if p.is_zero() or q.is_zero():
        return True
    for name, poly in (("p", p), ("q", q)):
        if not is_real_rooted(poly):
            raise NotRealRootedError(f"{name} = {poly} is not real-rooted")
    rp, rq = _reduce(p, q)
    owners = root_owners(rp, rq)
    if not owners:
        return True
    if owners[0] != "q":
        return False
    return all(a != b for a, b in zip(owners, owners[1:]))


def first_interlacing_failure(ps: Sequence[IntPolynomial]) -> InterlacingFailure | None:
    """The lexicographically first failing pair ``i < j``, or ``None``."""
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if not interlaces(ps[i], ps[j]):
                return InterlacingFailure(i, j, ps[i], ps[j])
    return None


def is_interlacing_sequence(ps: Sequence[IntPolynomial]) -> bool:
    """True iff ``interlaces(ps[i], ps[j])`` for every ``i < j``."""
    return first_interlacing_failure(ps) is None
