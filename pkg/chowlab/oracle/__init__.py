"""
The slow, trusted oracle: Chow rings of small loopless matroids built from
their lattices of flats and analysed by exact row reduction, or by nested-set
rewriting where the slices get too large.
"""
from chowlab.oracle.chains import chain_monomials, fy_chain_count, is_chain, sort_chain, strict_chains
from chowlab.oracle.lattice import FlatsLattice, boolean_lattice, uniform_lattice
from chowlab.oracle.ring import (
    ChowRing,
    Reduction,
    RingElement,
    canonical_form,
    hilbert_series,
    principal_ideal_hilbert,
)

__all__ = [
    "ChowRing",
    "FlatsLattice",
    "Reduction",
    "RingElement",
    "boolean_lattice",
    "canonical_form",
    "chain_monomials",
    "fy_chain_count",
    "hilbert_series",
    "is_chain",
    "principal_ideal_hilbert",
    "sort_chain",
    "strict_chains",
    "uniform_lattice",
]
