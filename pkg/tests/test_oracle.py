"""Tests for lattices of flats and the linear-algebra Chow ring model."""
from fractions import Fraction

import pytest

from chowlab.chow.boolean import psi
from chowlab.chow.dsets import chow_uniform_via_dsets
from chowlab.chow.rewrite import ZERO, g_map
from chowlab.core.enumerate import enumerate_inversion_sequences
from chowlab.core.errors import InvalidObjectError, ResourceGuardError
from chowlab.core.ground import GroundSet
from chowlab.core.statistics import lehmer_inverse
from chowlab.oracle.chains import chain_monomials, fy_chain_count, is_chain, strict_chains
from chowlab.oracle.lattice import FlatsLattice, boolean_lattice, uniform_lattice
from chowlab.oracle.ring import ChowRing, Reduction, hilbert_series, principal_ideal_hilbert
from chowlab.polyalg.families import eulerian
from chowlab.polyalg.polynomial import IntPolynomial


def P(*coeffs):
    return IntPolynomial(coeffs)


def test_boolean_and_uniform_lattices():
    b = boolean_lattice(3)
    assert len(b) == 8 and b.rank == 3 and b.is_boolean()
    u = uniform_lattice(2, 4)
    assert len(u) == 6 and u.rank == 2 and not u.is_boolean()
    assert uniform_lattice(4, 4).masks == boolean_lattice(4).masks
    assert u.closure(0b0011) == 0b1111
    with pytest.raises(InvalidObjectError):
        uniform_lattice(5, 4)


def test_lattice_validation():
    g = GroundSet.canonical(3)
    with pytest.raises(InvalidObjectError):
        FlatsLattice.from_flats(g, [[1, 2, 3]])
    with pytest.raises(InvalidObjectError):
        FlatsLattice.from_flats(g, [[], [1, 2], [2, 3], [1, 2, 3]])
    # the rank-2 matroid with 1 and 2 parallel
    lattice = FlatsLattice.from_flats(g, [[], [1, 2], [3], [1, 2, 3]], name="parallel")
    assert lattice.rank == 2


def test_chains():
    b = boolean_lattice(2)
    assert len(chain_monomials(b, 1)) == 3
    assert all(is_chain(m) for m in chain_monomials(b, 2))
    assert sum(1 for _ in strict_chains(b)) == 6


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_boolean_hilbert_series_is_eulerian(n):
    lattice = boolean_lattice(n)
    assert hilbert_series(lattice) == eulerian(n)
    assert fy_chain_count(lattice) == eulerian(n)


@pytest.mark.parametrize(
    "rank, n, expected",
    [(1, 3, P(1)), (2, 3, P(1, 1)), (2, 4, P(1, 1)), (3, 4, P(1, 7, 1))],
)
def test_uniform_hilbert_series(rank, n, expected):
    lattice = uniform_lattice(rank, n)
    assert hilbert_series(lattice) == expected
    assert fy_chain_count(lattice) == expected
    assert chow_uniform_via_dsets(n, n - rank) == expected


def test_generators_and_relations_in_boolean_ring():
    ring = ChowRing(boolean_lattice(3))
    g = ring.lattice.ground
    full = g.full()
    assert ring.g_element(full) == ring.h_element(full)
    assert ring.g_element(g.subset([1, 3])) == ring.x_element(g.subset([1, 3]))
    for i in g.labels:
        assert ring.h_element(g.subset([i])).is_zero()
    assert ring.simplicial_relation(g.subset([1, 2]), g.subset([1, 3])).is_zero()
    assert ring.dimension(3) == 0
    assert ring.dimension(-1) == 0


def test_g_monomials_span_each_degree():
    ring = ChowRing(boolean_lattice(3))
    g = ring.lattice.ground
    degree_one = [ring.g_monomial([g.subset(s)]) for s in ([1, 2], [1, 3], [2, 3], [1, 2, 3])]
    assert ring.span_dimension(degree_one, 1) == 4
    top = ring.g_monomial([g.subset([1, 2, 3]), g.subset([1, 2])])
    assert not top.is_zero()
    assert ring.span_dimension([top], 2) == 1


def test_canonical_form_is_linear():
    ring = ChowRing(boolean_lattice(3))
    full_mask = ring.lattice.full_mask
    twice = ring.canonical_form({(full_mask,): 2})
    once = ring.canonical_form({(full_mask,): 1})
    assert ring.add(twice, once, -2).is_zero()
    assert twice.as_expression() == {m: 2 * c for m, c in once.coords}
    with pytest.raises(InvalidObjectError):
        ring.canonical_form({(full_mask,): 1, (full_mask, full_mask): Fraction(1)})


def test_incomparable_product_vanishes():
    ring = ChowRing(boolean_lattice(3))
    g = ring.lattice.ground
    a = ring.x_element(g.subset([1, 2]))
    b = ring.x_element(g.subset([1, 3]))
    assert ring.multiply(a, b).is_zero()


@pytest.mark.parametrize(
    "n, power",
    [(n, p) for n in range(1, 5) for p in range(n)]
    + [pytest.param(5, p, marks=pytest.mark.slow) for p in range(5)],
)
def test_principal_ideals_match_uniform(n, power):
    ideal = principal_ideal_hilbert(boolean_lattice(n), power)
    assert ideal == hilbert_series(uniform_lattice(n - power, n)).shift(power)


def test_principal_ideal_needs_boolean():
    with pytest.raises(InvalidObjectError):
        principal_ideal_hilbert(uniform_lattice(2, 3), 1)


def test_slice_budget():
    with pytest.raises(ResourceGuardError):
        ChowRing(boolean_lattice(4), max_columns=5).hilbert_series()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_nested_basis_dimensions_are_eulerian(n):
    ring = ChowRing(boolean_lattice(n), reduction=Reduction.NESTED_BASIS)
    assert ring.hilbert_series() == eulerian(n)


@pytest.mark.parametrize(
    "lattice",
    [boolean_lattice(3), boolean_lattice(4), boolean_lattice(5), uniform_lattice(2, 4), uniform_lattice(3, 5)],
    ids=["B_3", "B_4", "B_5", "U_2_4", "U_3_5"],
)
def test_nested_basis_kills_the_linear_ideal(lattice):
    ring = ChowRing(lattice, reduction=Reduction.NESTED_BASIS)
    assert ring.hilbert_series() == ChowRing(lattice).hilbert_series()
    for degree in range(1, ring.top_degree + 1):
        for m in chain_monomials(lattice, degree - 1):
            for i in range(lattice.ground.n):
                form = {m + (f,): 1 for f in lattice.nonempty_masks if f >> i & 1}
                assert ring.canonical_form(form).is_zero()


@pytest.mark.parametrize("reduction", list(Reduction))
def test_small_products_in_both_engines(reduction):
    two = ChowRing(boolean_lattice(2), reduction=reduction)
    g2 = two.lattice.ground
    assert two.add(two.x_element(g2.subset([1])), two.x_element(g2.full())).is_zero()

    three = ChowRing(boolean_lattice(3), reduction=reduction)
    g3 = three.lattice.ground
    x12 = three.x_element(g3.subset([1, 2]))
    assert three.multiply(x12, three.x_element(g3.full())).is_zero()
    assert three.multiply(x12, three.x_element(g3.subset([1, 3]))).is_zero()
    assert not three.power(three.x_element(g3.full()), 2).is_zero()


@pytest.mark.parametrize("reduction", list(Reduction))
def test_g_map_agrees_with_ring_product(reduction):
    ring = ChowRing(boolean_lattice(4), reduction=reduction)
    g = ring.lattice.ground
    g_full = ring.g_element(g.full())
    for e in enumerate_inversion_sequences(4):
        product = ring.multiply(g_full, ring.g_monomial(psi(lehmer_inverse(e, g)).parts))
        image = g_map(e)
        if image is ZERO:
            assert product.is_zero()
        else:
            assert product == ring.g_monomial(psi(lehmer_inverse(image, g)).parts)


def test_nested_basis_slice_budget():
    with pytest.raises(ResourceGuardError):
        ChowRing(boolean_lattice(4), max_columns=5, reduction=Reduction.NESTED_BASIS).hilbert_series()
