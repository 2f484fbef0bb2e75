"""Tests for Lehmer coding, the elementary statistics and the enumeration streams."""
import math

import pytest

from chowlab.core.enumerate import (
    enumerate_derangement_seqs,
    enumerate_inversion_sequences,
    enumerate_permutations,
    inversion_prefixes,
    permutation_prefixes,
)
from chowlab.core.errors import InvalidObjectError
from chowlab.core.ground import GroundSet, InversionSequence, Permutation
from chowlab.core.statistics import (
    ascent_count,
    ascent_set,
    descent_count,
    descent_set,
    excedance_count,
    first_peak,
    first_zero,
    is_derangement_seq,
    is_fixed_point_free,
    lehmer_code,
    lehmer_inverse,
)


@pytest.mark.parametrize(
    "perm, code",
    [
        ((1, 2, 3), (0, 0, 0)),
        ((3, 2, 1), (0, 1, 2)),
        ((5, 1, 4, 3, 2), (0, 1, 1, 2, 3)),
        ((3, 5, 2, 4, 1), (0, 0, 2, 1, 4)),
    ],
)
def test_lehmer_code_and_inverse(perm, code):
    p = Permutation(perm)
    assert lehmer_code(p) == code
    assert lehmer_inverse(InversionSequence(code), p.ground) == p


def test_lehmer_inverse_length_mismatch():
    with pytest.raises(InvalidObjectError):
        lehmer_inverse(InversionSequence((0, 1)), GroundSet.canonical(3))


def test_lehmer_inverse_on_relabelled_ground():
    g = GroundSet((2, 5, 7))
    assert lehmer_inverse(InversionSequence((0, 1, 2)), g) == (7, 5, 2)


def test_descents_and_ascents():
    p = Permutation((5, 1, 4, 3, 2))
    assert descent_set(p) == {1, 3, 4}
    assert descent_count(p) == 3
    e = lehmer_code(p)
    assert ascent_set(e) == {1, 3, 4}
    assert ascent_count(e) == 3


def test_excedances():
    assert excedance_count(Permutation((2, 1))) == 1
    assert excedance_count(Permutation((2, 3, 1))) == 2
    assert excedance_count(Permutation((3, 1, 2))) == 1
    with pytest.raises(InvalidObjectError):
        excedance_count(Permutation((2, 5)))


def test_fixed_point_free():
    assert is_fixed_point_free(Permutation((2, 3, 1)))
    assert not is_fixed_point_free(Permutation((1, 3, 2)))


@pytest.mark.parametrize(
    "seq, expected",
    [
        ((0, 1), True),
        ((0, 1, 0, 1), True),
        ((0, 0, 1), False),
        ((0, 1, 0), False),
        ((0,), False),
        ((), False),
    ],
)
def test_is_derangement_seq(seq, expected):
    assert is_derangement_seq(seq) is expected


def test_first_zero_and_peak():
    assert first_zero((0, 1, 2, 0, 1)) == 4
    assert first_zero((0, 1, 2)) == 4
    assert first_peak((0, 1, 2, 0, 1)) == (0, 1)
    assert first_peak((0, 1, 1)) == (0, 0)
    assert first_peak((0, 1, 2)) == (0, 1)


def test_first_peak_needs_a_peak():
    with pytest.raises(InvalidObjectError):
        first_peak((0, 0, 1))
    with pytest.raises(InvalidObjectError):
        first_peak((0,))


def test_inversion_sequence_stream():
    seqs = list(enumerate_inversion_sequences(3))
    assert len(seqs) == 6
    assert seqs[0] == (0, 0, 0) and seqs[-1] == (0, 1, 2)
    assert seqs == sorted(seqs)


def test_prefix_streams_partition_the_full_stream():
    full = list(enumerate_inversion_sequences(5))
    parts = [e for prefix in inversion_prefixes(5, 3) for e in enumerate_inversion_sequences(5, prefix)]
    assert parts == full
    g = GroundSet.canonical(4)
    perms = [p for prefix in permutation_prefixes(g, 1) for p in enumerate_permutations(g, prefix)]
    assert perms == list(enumerate_permutations(g))
    assert len(perms) == 24


def test_derangement_stream_matches_filter():
    for n in range(1, 7):
        expected = [e for e in enumerate_inversion_sequences(n) if is_derangement_seq(e)]
        assert list(enumerate_derangement_seqs(n)) == expected


def test_derangement_count_matches_fixed_point_free_permutations():
    for n in range(2, 7):
        fixed_point_free = sum(1 for p in enumerate_permutations(GroundSet.canonical(n)) if is_fixed_point_free(p))
        assert sum(1 for _ in enumerate_derangement_seqs(n)) == fixed_point_free


def test_descent_transport_through_lehmer_code():
    g = GroundSet.canonical(5)
    for p in enumerate_permutations(g):
        assert ascent_count(lehmer_code(p)) == descent_count(p)
    assert sum(1 for _ in enumerate_permutations(g)) == math.factorial(5)
