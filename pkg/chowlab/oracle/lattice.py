"""
Lattices of flats of small loopless matroids.

A ``FlatsLattice`` is validated on construction: it must contain the empty
set and the full ground set, be closed under intersection, and satisfy the
partition axiom (the flats covering any flat ``F`` partition ``E \\ F``).
Ranks are the lengths of maximal chains from the empty flat.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from chowlab.core.errors import InvalidObjectError
from chowlab.core.ground import GroundSet, Subset


@dataclass(frozen=True)
class FlatsLattice:
    """
    The lattice of flats of a loopless matroid.

    Attributes:
        ground: The ground set ``E``.
        masks: Flats as bit masks, sorted by ``(cardinality, mask)`` so that
            every flat comes after all of its subsets.
        name: Human-readable label used in reports.
    """
    ground: GroundSet
    masks: tuple[int, ...]
    name: str = ""
    rank_of: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        masks = tuple(sorted(set(self.masks), key=lambda m: (m.bit_count(), m)))
        object.__setattr__(self, "masks", masks)
        _validate(self.ground, masks)
        object.__setattr__(self, "rank_of", _ranks(masks))

    @classmethod
    def from_flats(cls, ground: GroundSet, flats: Iterable[Subset | Iterable[int]], name: str = "") -> "FlatsLattice":
        masks = []
        for flat in flats:
            subset = flat.relabel(ground) if isinstance(flat, Subset) else ground.subset(flat)
            masks.append(subset.mask)
        return cls(ground, tuple(masks), name)

    @property
    def full_mask(self) -> int:
        return (1 << self.ground.n) - 1

    @property
    def rank(self) -> int:
        return self.rank_of[self.full_mask]

    @property
    def flats(self) -> list[Subset]:
        return [Subset(self.ground, m) for m in self.masks]

    @property
    def nonempty_masks(self) -> tuple[int, ...]:
        return self.masks[1:]

    def is_flat(self, s: Subset) -> bool:
        return s.relabel(self.ground).mask in self.rank_of

    def is_boolean(self) -> bool:
        return len(self.masks) == 1 << self.ground.n

    def closure(self, mask: int) -> int:
        """Smallest flat containing ``mask``."""
        for m in self.masks:
            if m & mask == mask:
                return m
        raise InvalidObjectError(f"no flat contains {mask:#b}")

    def __len__(self) -> int:
        return len(self.masks)


def _validate(ground: GroundSet, masks: tuple[int, ...]) -> None:
    full = (1 << ground.n) - 1
    present = set(masks)
    if any(m < 0 or m & ~full for m in masks):
        raise InvalidObjectError("a flat uses labels outside the ground set")
    if 0 not in present:
        raise InvalidObjectError("the empty set must be a flat (loopless matroid)")
    if full not in present:
        raise InvalidObjectError("the ground set must be a flat")
    for a, b in combinations(masks, 2):
        if a & b not in present:
            raise InvalidObjectError(f"flats {a:#b} and {b:#b} intersect in a non-flat")
    for f in masks:
        above = [g for g in masks if g != f and g & f == f]
        covers = [g for g in above if not any(h != g and g & h == h for h in above)]
        covered = 0
        for g in covers:
            if (g & ~f) & covered:
                raise InvalidObjectError(f"flats covering {f:#b} overlap outside it")
            covered |= g & ~f
        if covered != full & ~f:
            raise InvalidObjectError(f"flats covering {f:#b} do not cover the rest of E")


def _ranks(masks: tuple[int, ...]) -> dict[int, int]:
    rank = {0: 0}
    for m in masks[1:]:
        rank[m] = 1 + max(rank[s] for s in rank if s & m == s and s != m)
    return rank


def boolean_lattice(n: int) -> FlatsLattice:
    """All subsets of ``[n]``; ``rank(F) = |F|``."""
    if n < 1:
        raise InvalidObjectError(f"boolean matroid needs n >= 1, got {n}")
    return FlatsLattice(GroundSet.canonical(n), tuple(range(1 << n)), f"B_{n}")


def uniform_lattice(k: int, n: int) -> FlatsLattice:
    """
    Flats of ``U_{k,n}``: ``[n]`` and every subset of size at most ``k - 1``;
    ``rank(F) = min(|F|, k)``.

    Raises:
        InvalidObjectError: Unless ``1 <= k <= n``.
    """
    if not 1 <= k <= n:
        raise InvalidObjectError(f"uniform matroid U_{{k,n}} needs 1 <= k <= n, got k={k}, n={n}")
    full = (1 << n) - 1
    masks = tuple(m for m in range(1 << n) if m.bit_count() <= k - 1 or m == full)
    return FlatsLattice(GroundSet.canonical(n), masks, f"U_{k},{n}")
