"""Tests for the D^k_n sets and the uniform Chow polynomials they give."""
from collections import Counter

import pytest

from chowlab.chow.dsets import (
    chow_uniform_via_dsets,
    dki_family,
    dki_polynomial,
    dset_depth,
    dset_recursive,
    g_power_images,
    g_power_tower,
    is_in_dset,
    preimage_multiplicities,
    uniform_chow_by_corank,
)
from chowlab.core.errors import InvalidObjectError
from chowlab.core.ground import InversionSequence
from chowlab.polyalg.families import derangement_poly
from chowlab.polyalg.polynomial import IntPolynomial
from chowlab.polyalg.properties import is_palindromic
from chowlab.polyalg.roots import is_real_rooted


def P(*coeffs):
    return IntPolynomial(coeffs)


def seqs(*items):
    return {InversionSequence(e) for e in items}


def test_small_dsets():
    assert set(dset_recursive(3, 1).elements) == seqs((0, 1, 1), (0, 1, 2))
    assert set(dset_recursive(3, 2).elements) == seqs((0, 1, 2))
    assert set(dset_recursive(4, 2).elements) == seqs((0, 1, 2, 2), (0, 1, 2, 3))
    assert set(dset_recursive(4, 3).elements) == seqs((0, 1, 2, 3))
    assert len(dset_recursive(2, 2)) == 0
    assert len(dset_recursive(1, 1)) == 0
    assert len(dset_recursive(4, 1)) == 9


def test_recursive_and_image_constructions_agree():
    for n in range(2, 6):
        for k in range(1, n):
            assert g_power_images(n, k).elements == dset_recursive(n, k).elements


def test_tower_starts_at_all_inversion_sequences():
    tower = g_power_tower(3, 2)
    assert [len(d) for d in tower] == [6, 2, 1]
    assert [d.k for d in tower] == [0, 1, 2]


def test_preimage_multiplicities():
    assert preimage_multiplicities(3, 1) == Counter({1: 1, 2: 1})
    with pytest.raises(InvalidObjectError):
        preimage_multiplicities(3, 0)


def test_membership():
    assert is_in_dset((0, 1, 2, 3), 3)
    assert not is_in_dset((0, 1, 2, 2), 3)
    assert is_in_dset((0, 1, 2, 2), 2)
    assert not is_in_dset((0, 1, 0), 1)
    with pytest.raises(InvalidObjectError):
        is_in_dset((0, 1), 0)


@pytest.mark.parametrize(
    "e, depth",
    [((0, 1, 2, 3), 3), ((0, 1, 2, 2), 2), ((0, 1, 0, 1), 1), ((0, 0, 1), 0), ((0,), 0)],
)
def test_dset_depth(e, depth):
    assert dset_depth(e) == depth


@pytest.mark.parametrize(
    "n, k, expected",
    [
        (3, 1, P(1, 1)),
        (3, 2, P(1)),
        (4, 1, P(1, 7, 1)),
        (4, 2, P(1, 1)),
        (4, 3, P(1)),
    ],
)
def test_chow_uniform_via_dsets(n, k, expected):
    assert chow_uniform_via_dsets(n, k) == expected
    assert uniform_chow_by_corank(n)[k] == expected


@pytest.mark.parametrize("n", [*range(2, 8), pytest.param(8, marks=pytest.mark.slow)])
def test_corank_one_is_shifted_derangement_polynomial(n):
    corank_one = uniform_chow_by_corank(n)[1]
    assert corank_one.shift(1) == derangement_poly(n)
    assert chow_uniform_via_dsets(n, 1) == corank_one


@pytest.mark.parametrize("n", [*range(2, 8), *(pytest.param(n, marks=pytest.mark.slow) for n in (8, 9))])
def test_uniform_chow_polynomials_are_real_rooted(n):
    for k, p in uniform_chow_by_corank(n).items():
        assert is_real_rooted(p), (n, k, p)
        assert is_palindromic(p)


def test_corank_out_of_range():
    with pytest.raises(InvalidObjectError):
        chow_uniform_via_dsets(3, 3)
    with pytest.raises(InvalidObjectError):
        chow_uniform_via_dsets(1, 1)


def test_dki_family():
    assert dki_family(3, 1) == [P(0, 1), P(0, 1), P(0, 0, 1)]
    assert dki_family(4, 2) == [P(0, 0, 1), P(), P(0, 0, 1), P(0, 0, 0, 1)]
    for i in range(4):
        assert dki_polynomial(4, 2, i) == dki_family(4, 2)[i]
    with pytest.raises(InvalidObjectError):
        dki_polynomial(4, 2, 4)
