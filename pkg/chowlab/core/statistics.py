"""
Lehmer coding and the elementary permutation and inversion-sequence
statistics: descents, ascents, excedances, derangement sequences and the
first-zero / first-peak pair used by the recursive ``D^k_n`` sets.
"""
from __future__ import annotations

from chowlab.core.errors import InvalidObjectError
from chowlab.core.ground import GroundSet, InversionSequence, Permutation


def lehmer_code(p: Permutation) -> InversionSequence:
    """
    Computes ``e_i = #{j < i : p(j) > p(i)}``.

    Args:
        p: A permutation on any ground set.

    Returns:
        The inversion sequence of the same length.
    """
    entries = []
    for i, value in enumerate(p):
        entries.append(sum(1 for j in range(i) if p[j] > value))
    return InversionSequence._trusted(entries)


def lehmer_inverse(e: InversionSequence, g: GroundSet) -> Permutation:
    """
    Rebuilds the permutation of ``g`` whose Lehmer code is ``e``.

    Positions are filled from the right: ``p(i)`` is the ``e_i``-th largest
    label among those not yet placed.

    Raises:
        InvalidObjectError: If ``len(e) != g.n``.
    """
    if len(e) != g.n:
        raise InvalidObjectError(f"inversion sequence of length {len(e)} does not match ground set of size {g.n}")
    remaining = sorted(g.labels, reverse=True)
    values = [0] * g.n
    for i in range(g.n - 1, -1, -1):
        values[i] = remaining.pop(e[i])
    return Permutation._trusted(values)


def descent_set(p: Permutation) -> frozenset[int]:
    """1-based positions ``i`` with ``p(i) > p(i+1)``."""
    return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def ascent_set(e: InversionSequence) -> frozenset[int]:
    """1-based positions ``i`` with ``e_i < e_{i+1}``."""
    return frozenset(i + 1 for i in range(len(e) - 1) if e[i] < e[i + 1])


def descent_count(p: Permutation) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def ascent_count(e: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(e) - 1) if e[i] < e[i + 1])


def excedance_count(p: Permutation) -> int:
    """
    Number of positions with ``p(i) > i``.

    Raises:
        InvalidObjectError: If ``p`` is not a permutation of ``[n]``.
    """
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidObjectError(f"excedances need a permutation of [n], got {tuple(p)}")
    return sum(1 for i, value in enumerate(p, start=1) if value > i)


def is_fixed_point_free(p: Permutation) -> bool:
    """True for a permutation of ``[n]`` with no ``p(i) = i``."""
    return all(value != i for i, value in enumerate(p, start=1))


def is_derangement_seq(e: tuple[int, ...]) -> bool:
    """
    Membership in ``D_n``: ``e_n != 0`` and no two consecutive zeros.

    The empty sequence and ``(0,)`` are not derangement sequences.
    """
    if not e or e[-1] == 0:
        return False
    return all(e[i] or e[i + 1] for i in range(len(e) - 1))


def first_zero(e: tuple[int, ...]) -> int:
    """1-based index of the first zero after position 1, or ``n + 1``."""
    for i in range(1, len(e)):
        if e[i] == 0:
            return i + 1
    return len(e) + 1


def first_peak(e: tuple[int, ...]) -> InversionSequence:
    """
    Shifts down the run before the first zero: ``fp(e)_i = e_{i+1} - 1`` for
    ``1 <= i <= fz(e) - 2``.

    Raises:
        InvalidObjectError: If ``n < 2`` or ``e_2 != 1``.
    """
    if len(e) < 2 or e[1] != 1:
        raise InvalidObjectError(f"first peak needs n >= 2 and e_2 = 1, got {tuple(e)}")
    fz = first_zero(e)
    return InversionSequence._trusted(e[i + 1] - 1 for i in range(fz - 2))
