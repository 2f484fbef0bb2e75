"""
Ground sets, subsets, permutations and inversion sequences, together with the
elementary statistics and the enumeration streams built on them.
"""
from chowlab.core.enumerate import (
    enumerate_derangement_seqs,
    enumerate_inversion_sequences,
    enumerate_permutations,
    inversion_prefixes,
    permutation_prefixes,
)
from chowlab.core.errors import (
    ChowlabError,
    InvalidObjectError,
    InvariantViolation,
    NotNormalError,
    NotRealRootedError,
    ResourceGuardError,
)
from chowlab.core.ground import GroundSet, InversionSequence, Permutation, Subset
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

__all__ = [
    "ChowlabError",
    "GroundSet",
    "InvalidObjectError",
    "InvariantViolation",
    "InversionSequence",
    "NotNormalError",
    "NotRealRootedError",
    "Permutation",
    "ResourceGuardError",
    "Subset",
    "ascent_count",
    "ascent_set",
    "descent_count",
    "descent_set",
    "enumerate_derangement_seqs",
    "enumerate_inversion_sequences",
    "enumerate_permutations",
    "excedance_count",
    "first_peak",
    "first_zero",
    "inversion_prefixes",
    "is_derangement_seq",
    "is_fixed_point_free",
    "lehmer_code",
    "lehmer_inverse",
    "permutation_prefixes",
]
