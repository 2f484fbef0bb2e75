"""
Chow rings of boolean matroids through their normal monomials: the
simplicial-presentation basis and its bijection with permutations, the
g-presentation rewriting on inversion sequences, and the ``D^k_n`` sets that
give Chow polynomials of uniform matroids.
"""
from chowlab.chow.boolean import (
    NormalMonomial,
    enumerate_normal_monomials,
    hilbert_boolean,
    is_normal,
    phi,
    psi,
    quad_normal,
    triangle_less,
)
from chowlab.chow.dsets import (
    DSet,
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
from chowlab.chow.rewrite import (
    ZERO,
    GGenerator,
    RewriteCase,
    RewriteResult,
    RewriteStep,
    Zero,
    g_expand,
    g_map,
    psi_f_image,
    rewrite_case,
    rewrite_trace,
)

__all__ = [
    "DSet",
    "GGenerator",
    "NormalMonomial",
    "RewriteCase",
    "RewriteResult",
    "RewriteStep",
    "ZERO",
    "Zero",
    "chow_uniform_via_dsets",
    "dki_family",
    "dki_polynomial",
    "dset_depth",
    "dset_recursive",
    "enumerate_normal_monomials",
    "g_expand",
    "g_map",
    "g_power_images",
    "g_power_tower",
    "hilbert_boolean",
    "is_in_dset",
    "is_normal",
    "phi",
    "preimage_multiplicities",
    "psi",
    "psi_f_image",
    "quad_normal",
    "rewrite_case",
    "rewrite_trace",
    "triangle_less",
    "uniform_chow_by_corank",
]
