"""
Chains of flats.

Monomials in the generators ``x_F`` survive modulo the incomparability ideal
exactly when their flats form a multichain; such monomials are stored as
tuples of flat masks sorted by ``(cardinality, mask)``. The same chains give
the closed-form count of Chow ring dimensions used as a second oracle.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from chowlab.oracle.lattice import FlatsLattice
from chowlab.polyalg.polynomial import IntPolynomial

Monomial = tuple[int, ...]


def _key(mask: int) -> tuple[int, int]:
    return mask.bit_count(), mask


def sort_chain(masks: Iterable[int]) -> Monomial:
    return tuple(sorted(masks, key=_key))


def is_chain(monomial: Monomial) -> bool:
    """True iff the sorted masks are weakly increasing under inclusion."""
    return all(a & b == a for a, b in zip(monomial, monomial[1:]))


def comparable_with_all(mask: int, monomial: Monomial) -> bool:
    return all(mask & m == mask or mask & m == m for m in monomial)


def chain_monomials(lattice: FlatsLattice, degree: int) -> list[Monomial]:
    """All multichains of nonempty flats of length ``degree``, sorted."""
    flats = lattice.nonempty_masks
    out: list[Monomial] = []

    def extend(prefix: list[int], start: int) -> None:
        if len(prefix) == degree:
            out.append(tuple(prefix))
            return
        last = prefix[-1] if prefix else 0
        for idx in range(start, len(flats)):
            f = flats[idx]
            if f & last == last:
                prefix.append(f)
                extend(prefix, idx)
                prefix.pop()

    extend([], 0)
    return sorted(out, key=lambda m: tuple(_key(x) for x in m))


def strict_chains(lattice: FlatsLattice) -> Iterator[tuple[int, ...]]:
    """Chains ``F_1 ⊊ ... ⊊ F_k`` of nonempty flats, including the empty chain."""
    flats = lattice.nonempty_masks

    def walk(prefix: tuple[int, ...], start: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        last = prefix[-1] if prefix else 0
        for idx in range(start, len(flats)):
            f = flats[idx]
            if f != last and f & last == last:
                yield from walk(prefix + (f,), idx + 1)

    yield from walk((), 0)


def fy_chain_count(lattice: FlatsLattice) -> IntPolynomial:
    """
    Counts the monomials ``x_{F_1}^{a_1} ... x_{F_k}^{a_k}`` over chains
    ``∅ ⊊ F_1 ⊊ ... ⊊ F_k`` with ``1 <= a_i <= rk F_i - rk F_{i-1} - 1``,
    graded by ``sum a_i``.

    Computed by dynamic programming over the lattice: ``ending[G]`` is the
    generating function of admissible chains whose top flat is ``G``.
    """
    rank = lattice.rank_of
    ending: dict[int, IntPolynomial] = {0: IntPolynomial.one()}
    total = IntPolynomial.one()
    for g in lattice.nonempty_masks:
        acc = IntPolynomial.zero()
        for f, poly in ending.items():
            if f & g != f or f == g:
                continue
            gap = rank[g] - rank[f] - 1
            if gap >= 1:
                acc = acc + poly * IntPolynomial((0,) + (1,) * gap)
        ending[g] = acc
        total = total + acc
    return total
