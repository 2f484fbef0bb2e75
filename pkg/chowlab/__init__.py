"""
Chowlab: exact computation and cross-verification of Chow polynomials of
boolean and uniform matroids.

This top-level package exposes the main user-facing functions: the three
routes to a Chow polynomial (normal monomials, inversion-sequence rewriting
and the quotient-ring oracle), the bijection between permutations and normal
monomials, the ``D^k_n`` sets, and the polynomial toolkit for real-rootedness
and interlacing.
"""
from chowlab.chow import (
    ZERO,
    NormalMonomial,
    chow_uniform_via_dsets,
    dset_recursive,
    enumerate_normal_monomials,
    g_map,
    g_power_images,
    hilbert_boolean,
    phi,
    psi,
)
from chowlab.core import GroundSet, InversionSequence, Permutation, Subset, lehmer_code, lehmer_inverse
from chowlab.core.errors import (
    ChowlabError,
    InvalidObjectError,
    InvariantViolation,
    NotNormalError,
    NotRealRootedError,
    ResourceGuardError,
)
from chowlab.oracle import ChowRing, FlatsLattice, boolean_lattice, hilbert_series, uniform_lattice
from chowlab.polyalg import (
    IntPolynomial,
    derangement_poly,
    eulerian,
    interlaces,
    is_interlacing_sequence,
    is_real_rooted,
)
from chowlab.verify import ChowlabSettings, get_settings, run_interlace, run_suite
from importlib.metadata import PackageNotFoundError, version

__all__ = [
    "ChowRing",
    "ChowlabError",
    "ChowlabSettings",
    "FlatsLattice",
    "GroundSet",
    "IntPolynomial",
    "InvalidObjectError",
    "InvariantViolation",
    "InversionSequence",
    "NormalMonomial",
    "NotNormalError",
    "NotRealRootedError",
    "Permutation",
    "ResourceGuardError",
    "Subset",
    "ZERO",
    "boolean_lattice",
    "chow_uniform_via_dsets",
    "derangement_poly",
    "dset_recursive",
    "enumerate_normal_monomials",
    "eulerian",
    "g_map",
    "g_power_images",
    "get_settings",
    "hilbert_boolean",
    "hilbert_series",
    "interlaces",
    "is_interlacing_sequence",
    "is_real_rooted",
    "lehmer_code",
    "lehmer_inverse",
    "phi",
    "psi",
    "run_interlace",
    "run_suite",
    "uniform_lattice",
]

try:
    # Retrieve the package version from installed metadata.
    __version__ = version("chowlab")
except PackageNotFoundError:
    # Running from a source checkout.
    __version__ = "0.0.0"
