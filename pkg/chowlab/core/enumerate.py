"""
Deterministic lexicographic streams of inversion sequences, permutations and
derangement sequences.

Every stream accepts a ``prefix`` and yields only the objects that start with
it, in the same order the full stream would. Concatenating the streams for
all prefixes of a given depth (as returned by ``inversion_prefixes``)
reproduces the full stream, which is how the verification workers partition
their work.
"""
from __future__ import annotations

from itertools import permutations, product
from typing import Iterator, Sequence

from chowlab.core.errors import InvalidObjectError
from chowlab.core.ground import GroundSet, InversionSequence, Permutation


def _check_inversion_prefix(n: int, prefix: Sequence[int]) -> tuple[int, ...]:
    if n < 0:
        raise InvalidObjectError(f"length must be nonnegative, got {n}")
    if len(prefix) > n:
        raise InvalidObjectError(f"prefix {tuple(prefix)} is longer than {n}")
    return tuple(InversionSequence(prefix))


def enumerate_inversion_sequences(n: int, prefix: Sequence[int] = ()) -> Iterator[InversionSequence]:
    """Yields the ``n!`` inversion sequences of length ``n`` lexicographically."""
    head = _check_inversion_prefix(n, prefix)
    ranges = [range(i) for i in range(len(head) + 1, n + 1)]
    for tail in product(*ranges):
        yield InversionSequence._trusted(head + tail)


def enumerate_permutations(g: GroundSet, prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """Yields the permutations of ``g`` ordered lexicographically by values."""
    head = tuple(Permutation(prefix))
    if any(value not in g for value in head):
        raise InvalidObjectError(f"prefix {head} is not drawn from {g.labels}")
    rest = [label for label in g.labels if label not in head]
    for tail in permutations(rest):
        yield Permutation._trusted(head + tail)


def enumerate_derangement_seqs(n: int, prefix: Sequence[int] = ()) -> Iterator[InversionSequence]:
    """
    Yields the elements of ``D_n`` lexicographically.

    Branches that already contain two consecutive zeros are cut, so the walk
    only visits prefixes of derangement sequences.
    """
    head = _check_inversion_prefix(n, prefix)
    if n == 0 or any(head[i] == 0 and head[i + 1] == 0 for i in range(len(head) - 1)):
        return
    if len(head) == n:
        if head[-1] != 0:
            yield InversionSequence._trusted(head)
        return
    entries = list(head)

    def walk(i: int) -> Iterator[InversionSequence]:
        if i == n:
            if entries[-1] != 0:
                yield InversionSequence._trusted(entries)
            return
        previous_zero = i > 0 and entries[i - 1] == 0
        for value in range(1 if previous_zero else 0, i + 1):
            entries.append(value)
            yield from walk(i + 1)
            entries.pop()

    yield from walk(len(head))


def inversion_prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    """All inversion-sequence prefixes of length ``min(depth, n)``, in order."""
    depth = max(0, min(depth, n))
    return [tuple(p) for p in product(*(range(i) for i in range(1, depth + 1)))]


def permutation_prefixes(g: GroundSet, depth: int) -> list[tuple[int, ...]]:
    """All value prefixes of length ``min(depth, g.n)`` of permutations of ``g``."""
    depth = max(0, min(depth, g.n))
    return list(permutations(g.labels, depth))
