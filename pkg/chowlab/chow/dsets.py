"""
The sets ``D^k_n`` of inversion sequences, built two ways: as iterated
``g_map`` images of ``I_n`` and by the first-peak recursion, and the uniform
Chow polynomials they produce.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from chowlab.core.enumerate import enumerate_derangement_seqs, enumerate_inversion_sequences
from chowlab.core.errors import InvalidObjectError, InvariantViolation
from chowlab.core.ground import InversionSequence
from chowlab.core.statistics import ascent_count, first_peak, is_derangement_seq
from chowlab.chow.rewrite import ZERO, g_map
from chowlab.polyalg.polynomial import IntPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DSet:
    """
    A set ``D^k_n`` of inversion sequences of length ``n``.

    Attributes:
        n: Sequence length.
        k: Iteration depth, or the power of ``g_E`` the set indexes.
        elements: The member sequences.
    """
    n: int
    k: int
    elements: frozenset[InversionSequence]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: object) -> bool:
        return e in self.elements

    def __iter__(self) -> Iterator[InversionSequence]:
        return iter(self.sorted_elements())

    def sorted_elements(self) -> list[InversionSequence]:
        return sorted(self.elements)

    def min_ascents(self) -> int | None:
        return min((ascent_count(e) for e in self.elements), default=None)

    def ascent_polynomial(self) -> IntPolynomial:
        """``sum t^asc(e)`` over the elements."""
        return IntPolynomial.from_exponents(ascent_count(e) for e in self.elements)


def g_images(sequences: Iterable[InversionSequence]) -> Counter[InversionSequence]:
    """Non-``ZERO`` ``g_map`` images of ``sequences`` with their preimage counts."""
    images: Counter[InversionSequence] = Counter()
    for e in sequences:
        image = g_map(e)
        if image is not ZERO:
            images[image] += 1
    return images


def g_power_images(n: int, k: int) -> DSet:
    """
    ``D^0 = I_n`` and ``D^j = {g_map(e) : e in D^{j-1}} \\ {ZERO}``.

    Raises:
        InvalidObjectError: If ``n < 2`` or ``k < 0``.
    """
    return g_power_tower(n, k)[-1]


def g_power_tower(n: int, k: int) -> list[DSet]:
    """``[D^0, D^1, ..., D^k]`` of ``g_power_images``."""
    if n < 2 or k < 0:
        raise InvalidObjectError(f"g_power_images needs n >= 2 and k >= 0, got n={n}, k={k}")
    current = frozenset(enumerate_inversion_sequences(n))
    tower = [DSet(n, 0, current)]
    for j in range(1, k + 1):
        current = frozenset(g_images(current))
        tower.append(DSet(n, j, current))
        logger.debug("|D^%d_%d| via g_map = %d", j, n, len(current))
    return tower


def preimage_multiplicities(n: int, k: int) -> Counter[int]:
    """
    Histogram ``{count: how many elements of g_power_images(n, k) have
    exactly count preimages in g_power_images(n, k - 1)}``.
    """
    if k < 1:
        raise InvalidObjectError(f"preimages need k >= 1, got {k}")
    previous = g_power_images(n, k - 1)
    return Counter(g_images(previous.elements).values())


def is_in_dset(e: tuple[int, ...], k: int) -> bool:
    """
    Membership in the recursively defined ``D^k_n``: ``e in D_n`` (with
    ``D_1`` empty) and, for ``k >= 2``, ``fp(e) in D^{k-1}``.
    """
    if k < 1:
        raise InvalidObjectError(f"D^k_n is defined for k >= 1, got {k}")
    if len(e) < 2 or not is_derangement_seq(e):
        return False
    if k == 1:
        return True
    return is_in_dset(first_peak(e), k - 1)


def dset_recursive(n: int, k: int) -> DSet:
    """
    ``D^k_n`` by the first-peak recursion.

    Raises:
        InvalidObjectError: If ``n < 1`` or ``k < 1``.
    """
    if n < 1 or k < 1:
        raise InvalidObjectError(f"dset_recursive needs n >= 1 and k >= 1, got n={n}, k={k}")
    if n == 1:
        return DSet(n, k, frozenset())
    return DSet(n, k, frozenset(e for e in enumerate_derangement_seqs(n) if is_in_dset(e, k)))


def _check_corank(n: int, k: int) -> None:
    if n < 2 or not 1 <= k <= n - 1:
        raise InvalidObjectError(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")


def chow_uniform_via_dsets(n: int, k: int, dset: DSet | None = None) -> IntPolynomial:
    """
    The Chow polynomial of ``U_{n-k,n}`` as ``sum t^(asc(e) - k)`` over
    ``D^k_n``.

    Args:
        n: Size of the ground set.
        k: Corank, ``1 <= k <= n - 1``.
        dset: A precomputed ``D^k_n``; built recursively when omitted.

    Raises:
        InvalidObjectError: On parameters out of range.
        InvariantViolation: If an element has fewer than ``k`` ascents.
    """
    _check_corank(n, k)
    dset = dset_recursive(n, k) if dset is None else dset
    exponents = []
    for e in dset.sorted_elements():
        a = ascent_count(e)
        if a < k:
            raise InvariantViolation(f"{e} in D^{k}_{n} has only {a} ascents")
        exponents.append(a - k)
    return IntPolynomial.from_exponents(exponents)


def dki_polynomial(n: int, k: int, i: int) -> IntPolynomial:
    """
    ``d^{k,i}_n``: ``sum t^asc(e)`` over ``e in D^k_n`` with ``e_n = i`` for
    ``i >= 1``, and over all of ``D^k_{n-1}`` for ``i = 0``.

    Raises:
        InvalidObjectError: On parameters out of range.
    """
    _check_corank(n, k)
    if not 0 <= i <= n - 1:
        raise InvalidObjectError(f"need 0 <= i <= n-1, got i={i}")
    if i == 0:
        return dset_recursive(n - 1, k).ascent_polynomial()
    return IntPolynomial.from_exponents(
        ascent_count(e) for e in dset_recursive(n, k).elements if e[-1] == i
    )


def dki_family(n: int, k: int) -> list[IntPolynomial]:
    """``[d^{k,0}_n, ..., d^{k,n-1}_n]`` from a single pass over ``D^k_n``."""
    _check_corank(n, k)
    buckets: list[list[int]] = [[] for _ in range(n)]
    for e in dset_recursive(n, k).elements:
        buckets[e[-1]].append(ascent_count(e))
    family = [IntPolynomial.from_exponents(b) for b in buckets]
    family[0] = dset_recursive(n - 1, k).ascent_polynomial()
    return family


def dset_depth(e: tuple[int, ...]) -> int:
    """Largest ``k`` with ``e in D^k_n``, or 0 when ``e`` is in no ``D^k_n``."""
    depth = 0
    while len(e) >= 2 and is_derangement_seq(e):
        depth += 1
        e = first_peak(e)
    return depth


def uniform_chow_by_corank(n: int) -> dict[int, IntPolynomial]:
    """
    ``{k: chow_uniform_via_dsets(n, k)}`` for ``1 <= k <= n - 1`` from one
    pass over ``D_n``, using ``e in D^k_n`` exactly when ``dset_depth(e) >= k``.
    """
    _check_corank(n, 1)
    exponents: dict[int, list[int]] = {k: [] for k in range(1, n)}
    for e in enumerate_derangement_seqs(n):
        a = ascent_count(e)
        for k in range(1, min(dset_depth(e), n - 1) + 1):
            if a < k:
                raise InvariantViolation(f"{e} in D^{k}_{n} has only {a} ascents")
            exponents[k].append(a - k)
    return {k: IntPolynomial.from_exponents(v) for k, v in exponents.items()}
