"""
Value types for finite linearly ordered ground sets.

A ``GroundSet`` holds strictly increasing integer labels, so that removing
labels (``E \\ F``) keeps the same type. ``Subset`` stores its members as a bit
mask indexed by label position, which makes max/min/containment O(1) at the
sizes this package works with. ``Permutation`` and ``InversionSequence`` are
immutable tuple subclasses, cheap enough to be produced by the million during
exhaustive enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from chowlab.core.errors import InvalidObjectError


@dataclass(frozen=True)
class GroundSet:
    """
    A finite linearly ordered set of integer labels.

    Attributes:
        labels: Strictly increasing tuple of distinct labels.
    """
    labels: tuple[int, ...]
    _index: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(int(label) for label in self.labels)
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise InvalidObjectError(f"ground set labels must be strictly increasing: {labels}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {label: pos for pos, label in enumerate(labels)})

    @classmethod
    def canonical(cls, n: int) -> "GroundSet":
        """Returns ``[n] = {1, ..., n}``."""
        if n < 0:
            raise InvalidObjectError(f"ground set size must be nonnegative, got {n}")
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def is_canonical(self) -> bool:
        return self.labels == tuple(range(1, self.n + 1))

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def position(self, label: int) -> int:
        """Returns the 0-based position of ``label``."""
        try:
            return self._index[label]
        except KeyError:
            raise InvalidObjectError(f"label {label} is not in ground set {self.labels}") from None

    @property
    def max(self) -> int:
        if not self.labels:
            raise InvalidObjectError("empty ground set has no maximum")
        return self.labels[-1]

    def subset(self, labels: Iterable[int]) -> "Subset":
        """Builds the subset with the given labels."""
        mask = 0
        for label in labels:
            mask |= 1 << self.position(label)
        return Subset(self, mask)

    def full(self) -> "Subset":
        return Subset(self, (1 << self.n) - 1)

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def at_most(self, label: int) -> "Subset":
        """``E_{<=label}``; ``label`` need not belong to the ground set."""
        return self.subset(x for x in self.labels if x <= label)

    def above(self, label: int) -> "Subset":
        """``E_{>label}``."""
        return self.subset(x for x in self.labels if x > label)

    def without(self, labels: Iterable[int]) -> "GroundSet":
        """Returns the ground set with the given labels removed."""
        removed = set(labels)
        return GroundSet(tuple(x for x in self.labels if x not in removed))

    def subsets(self, min_size: int = 0) -> list["Subset"]:
        """All subsets of cardinality at least ``min_size``, ordered by mask."""
        return [Subset(self, m) for m in range(1 << self.n) if m.bit_count() >= min_size]


@dataclass(frozen=True)
class Subset:
    """
    A subset of a ``GroundSet``, stored as a bit mask over label positions.

    Attributes:
        ground: The parent ground set.
        mask: Bit ``i`` is set iff ``ground.labels[i]`` is a member.
    """
    ground: GroundSet
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.ground.n:
            raise InvalidObjectError(f"mask {self.mask:#b} does not fit ground set of size {self.ground.n}")

    @property
    def labels(self) -> tuple[int, ...]:
        labels = self.ground.labels
        return tuple(labels[i] for i in range(self.ground.n) if self.mask >> i & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        pos = self.ground._index.get(label)  # type: ignore[arg-type]
        return pos is not None and bool(self.mask >> pos & 1)

    @property
    def max(self) -> int:
        if not self.mask:
            raise InvalidObjectError("empty subset has no maximum")
        return self.ground.labels[self.mask.bit_length() - 1]

    @property
    def min(self) -> int:
        if not self.mask:
            raise InvalidObjectError("empty subset has no minimum")
        return self.ground.labels[(self.mask & -self.mask).bit_length() - 1]

    def _same_ground(self, other: "Subset") -> None:
        if self.ground != other.ground:
            raise InvalidObjectError("subsets live on different ground sets")

    def __or__(self, other: "Subset") -> "Subset":
        self._same_ground(other)
        return Subset(self.ground, self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self._same_ground(other)
        return Subset(self.ground, self.mask & other.mask)

    def __sub__(self, other: "Subset") -> "Subset":
        self._same_ground(other)
        return Subset(self.ground, self.mask & ~other.mask)

    def issubset(self, other: "Subset") -> bool:
        self._same_ground(other)
        return self.mask & other.mask == self.mask

    def at_most(self, label: int) -> "Subset":
        """``S_{<=label}``."""
        return self & self.ground.at_most(label)

    def above(self, label: int) -> "Subset":
        """``S_{>label}``."""
        return self & self.ground.above(label)

    def discard(self, label: int) -> "Subset":
        return Subset(self.ground, self.mask & ~(1 << self.ground.position(label)))

    def is_initial_segment_of(self, other: "Subset") -> bool:
        """
        True iff ``self`` is a nonempty initial segment of ``other``: every
        element of ``other`` up to ``max(self)`` belongs to ``self``.
        """
        if not self.mask or not self.issubset(other):
            return False
        below = (1 << self.mask.bit_length()) - 1
        return other.mask & below == self.mask

    def relabel(self, ground: GroundSet) -> "Subset":
        """The subset with the same labels, viewed inside another ground set."""
        return ground.subset(self.labels)

    def sort_key(self) -> tuple[int, ...]:
        return self.labels

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.labels) + "}"


class Permutation(tuple):
    """
    A bijection ``[n] -> E`` stored as its list of values.

    The ground set ``E`` is the set of values, so any tuple of distinct
    integers is a valid permutation of its own sorted values.
    """
    __slots__ = ()

    def __new__(cls, values: Iterable[int]) -> "Permutation":
        values = tuple(int(v) for v in values)
        if len(set(values)) != len(values):
            raise InvalidObjectError(f"permutation values must be distinct: {values}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Iterable[int]) -> "Permutation":
        return tuple.__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def ground(self) -> GroundSet:
        return GroundSet(tuple(sorted(self)))

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"

    def __str__(self) -> str:
        return ",".join(str(v) for v in self)


class InversionSequence(tuple):
    """
    A sequence ``e_1..e_n`` of integers with ``0 <= e_i <= i-1``.
    """
    __slots__ = ()

    def __new__(cls, entries: Iterable[int]) -> "InversionSequence":
        entries = tuple(int(v) for v in entries)
        for i, value in enumerate(entries):
            if not 0 <= value <= i:
                raise InvalidObjectError(
                    f"entry e_{i + 1} = {value} is outside [0, {i}] in {entries}"
                )
        return super().__new__(cls, entries)

    @classmethod
    def _trusted(cls, entries: Iterable[int]) -> "InversionSequence":
        return tuple.__new__(cls, entries)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"InversionSequence({list(self)})"

    def __str__(self) -> str:
        return ",".join(str(v) for v in self)
