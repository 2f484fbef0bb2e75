"""
Normal monomials of the quadratic Gröbner basis of the Chow ring of a boolean
matroid in its simplicial presentation, the order ``⊲`` on their parts, and
the bijection ``psi`` between permutations and normal monomials.

A monomial ``h_{S_1} ... h_{S_k}`` is normal iff every pair of its parts is.
A pair ``{A, B}`` is normal iff, for one of the two role assignments, ``A`` is
the smallest initial segment ``I`` of ``S = A ∪ B`` with ``I ∪ B = S`` and
``|S \\ B| >= 2`` unless ``B = S \\ {max S}``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Iterator

from chowlab.core.errors import InvalidObjectError, NotNormalError
from chowlab.core.ground import GroundSet, Permutation, Subset
from chowlab.polyalg.polynomial import IntPolynomial

logger = logging.getLogger(__name__)


def _normal_role(a: int, b: int) -> bool:
    """Pair normality with ``a`` as the initial-segment part, on bit masks."""
    union = a | b
    outside = union & ~b
    if not outside:
        return False
    if union & ((1 << outside.bit_length()) - 1) != a:
        return False
    if outside.bit_count() >= 2:
        return True
    return b == union & ~(1 << (union.bit_length() - 1))


def quad_normal_masks(a: int, b: int) -> bool:
    return a != b and (_normal_role(a, b) or _normal_role(b, a))


def quad_normal(s1: Subset, s2: Subset) -> bool:
    """
    Whether ``h_{s1} h_{s2}`` is a quadratic normal monomial.

    Raises:
        InvalidObjectError: If a part has fewer than two elements.
    """
    if len(s1) < 2 or len(s2) < 2:
        raise InvalidObjectError(f"parts of a normal monomial need at least two elements: {s1}, {s2}")
    s1._same_ground(s2)
    return quad_normal_masks(s1.mask, s2.mask)


def triangle_less_masks(a: int, b: int) -> bool:
    union = a | b
    top = a.bit_length()
    return union & ((1 << top) - 1) == a and not b >> (top - 1) & 1


def triangle_less(s1: Subset, s2: Subset) -> bool:
    """
    ``s1 ⊲ s2``: ``s1`` is an initial segment of ``s1 ∪ s2`` and ``max s1``
    is not in ``s2``.

    Raises:
        InvalidObjectError: If ``s1 == s2``; the order is strict.
    """
    if s1 == s2:
        raise InvalidObjectError(f"⊲ is irreflexive, got {s1} twice")
    s1._same_ground(s2)
    if not s1.mask:
        return False
    return triangle_less_masks(s1.mask, s2.mask)


def _triangle_cmp(a: Subset, b: Subset) -> int:
    return -1 if triangle_less_masks(a.mask, b.mask) else 1


def is_normal(parts: Iterable[Subset]) -> bool:
    """True iff the parts are pairwise distinct and every pair is normal."""
    parts = list(parts)
    if any(len(p) < 2 for p in parts):
        return False
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if not quad_normal(parts[i], parts[j]):
                return False
    return True


@dataclass(frozen=True)
class NormalMonomial:
    """
    A squarefree product of generators indexed by subsets, stored ``⊲``-sorted.

    Use ``from_parts`` for untrusted input; the plain constructor expects
    parts that are already normal and sorted.

    Attributes:
        ground: The ground set the parts live in.
        parts: The indexing subsets in ``⊲`` order.
    """
    ground: GroundSet
    parts: tuple[Subset, ...] = ()

    @classmethod
    def from_parts(cls, ground: GroundSet, parts: Iterable[Subset | Iterable[int]]) -> "NormalMonomial":
        """
        Validates and sorts the given parts.

        Raises:
            NotNormalError: If the parts repeat or some pair is not normal.
        """
        subsets = [p.relabel(ground) if isinstance(p, Subset) else ground.subset(p) for p in parts]
        if len(set(subsets)) != len(subsets):
            raise NotNormalError(f"monomial repeats a part: {[str(s) for s in subsets]}")
        if not is_normal(subsets):
            raise NotNormalError(f"monomial is not normal: {[str(s) for s in subsets]}")
        return cls(ground, tuple(sorted(subsets, key=cmp_to_key(_triangle_cmp))))

    @property
    def degree(self) -> int:
        return len(self.parts)

    def label_lists(self) -> list[list[int]]:
        return [list(p.labels) for p in self.parts]

    def text(self, prefix: str = "h") -> str:
        """``h{1,2}*h{1,2,3}``, or ``1`` for the empty monomial."""
        if not self.parts:
            return "1"
        return "*".join(f"{prefix}{p}" for p in self.parts)

    def __str__(self) -> str:
        return self.text()


def _candidates(n: int) -> list[int]:
    return [m for m in range(1 << n) if m.bit_count() >= 2]


def _adjacency(candidates: list[int]) -> list[int]:
    adjacency = []
    for i, a in enumerate(candidates):
        row = 0
        for j, b in enumerate(candidates):
            if i != j and quad_normal_masks(a, b):
                row |= 1 << j
        adjacency.append(row)
    return adjacency


def _cliques(n: int, first: int | None = None) -> Iterator[list[int]]:
    """
    Depth-first walk over pairwise-normal mask sets. Each set is produced
    once, with its masks in increasing candidate order.
    """
    candidates = _candidates(n)
    adjacency = _adjacency(candidates)
    chosen: list[int] = []

    def walk(allowed: int) -> Iterator[list[int]]:
        yield chosen
        while allowed:
            low = allowed & -allowed
            j = low.bit_length() - 1
            allowed ^= low
            chosen.append(candidates[j])
            yield from walk(allowed & adjacency[j])
            chosen.pop()

    if first is None:
        yield from walk((1 << len(candidates)) - 1)
        return
    if first not in candidates:
        raise InvalidObjectError(f"first part {first:#b} has fewer than two elements")
    j = candidates.index(first)
    chosen.append(first)
    yield from walk(adjacency[j] & ~((1 << (j + 1)) - 1))


def enumerate_normal_monomials(g: GroundSet, first: Subset | None = None) -> Iterator[NormalMonomial]:
    """
    Streams every normal monomial over ``g`` exactly once, the empty
    monomial first.

    Args:
        g: The ground set.
        first: Restricts the stream to monomials whose mask-smallest part is
            ``first``; the streams for all subsets of size at least two
            partition the non-empty monomials.
    """
    key = cmp_to_key(lambda a, b: -1 if triangle_less_masks(a, b) else 1)
    start = None if first is None else first.relabel(g).mask
    for masks in _cliques(g.n, start):
        if len(set(masks)) != len(masks):
            raise NotNormalError(f"enumeration produced a repeated part in {masks}")
        yield NormalMonomial(g, tuple(Subset(g, m) for m in sorted(masks, key=key)))


def normal_monomial_histogram(n: int) -> IntPolynomial:
    """Counts normal monomials over ``[n]`` by degree without building them."""
    return IntPolynomial.from_exponents(len(masks) for masks in _cliques(n))


def hilbert_boolean(n: int) -> IntPolynomial:
    """
    The Chow polynomial of the boolean matroid on ``[n]``.

    Raises:
        InvalidObjectError: If ``n < 1``.
    """
    if n < 1:
        raise InvalidObjectError(f"boolean Chow polynomial needs n >= 1, got {n}")
    series = normal_monomial_histogram(n)
    logger.debug("hilbert_boolean(%d) = %s", n, series)
    return series


def psi(p: Permutation) -> NormalMonomial:
    """
    Sends ``p`` to the monomial with one part per descent ``i``, namely
    ``{p(j) : j >= i, p(j) <= p(i)}``; parts are listed by descent position,
    which is their ``⊲`` order.
    """
    g = p.ground
    parts = []
    for i in range(len(p) - 1):
        if p[i] > p[i + 1]:
            parts.append(g.subset(v for v in p[i:] if v <= p[i]))
    return NormalMonomial(g, tuple(parts))


def phi(m: NormalMonomial, g: GroundSet | None = None) -> Permutation:
    """
    Inverse of ``psi``.

    With ``X_i = E_{<= max S_i} \\ (S_i \\ {max S_i})`` the permutation lists
    ``X_1``, then ``X_2 \\ X_1``, and so on, then the remaining labels, each
    block in increasing order.

    Raises:
        NotNormalError: If ``m`` is not normal.
    """
    g = m.ground if g is None else g
    parts = [s.relabel(g) for s in m.parts]
    if len(set(parts)) != len(parts) or not is_normal(parts):
        raise NotNormalError(f"phi needs a normal monomial, got {m}")
    parts.sort(key=cmp_to_key(_triangle_cmp))
    covered = g.empty()
    values: list[int] = []
    for s in parts:
        top = s.max
        block = g.at_most(top) - s.discard(top)
        values.extend((block - covered).labels)
        covered = covered | block
    values.extend((g.full() - covered).labels)
    return Permutation._trusted(values)
