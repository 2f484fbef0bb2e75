"""
Verification and experiment layer behind the command line: settings, logging,
report models, the worker pool, the verification suites and the interlacing
experiments.
"""
from chowlab.verify.config import ChowlabSettings, get_settings
from chowlab.verify.experiments import CLAIMED, FAMILIES, family_indices, family_members, interlace_row, run_interlace
from chowlab.verify.jobs import WorkerPool
from chowlab.verify.logging import RingBufferHandler, create_logger, enable_stderr, ring_buffer
from chowlab.verify.models import (
    BijectionResult,
    CheckResult,
    CheckStatus,
    ChowResult,
    DSetModel,
    FamilyResult,
    InterlaceReport,
    InterlaceRow,
    MonomialModel,
    PolynomialModel,
    Report,
    RewriteModel,
)
from chowlab.verify.suites import SUITES, SuiteRunner, run_suite

__all__ = [
    "BijectionResult",
    "CLAIMED",
    "CheckResult",
    "CheckStatus",
    "ChowResult",
    "ChowlabSettings",
    "DSetModel",
    "FAMILIES",
    "FamilyResult",
    "InterlaceReport",
    "InterlaceRow",
    "MonomialModel",
    "PolynomialModel",
    "Report",
    "RewriteModel",
    "RingBufferHandler",
    "SUITES",
    "SuiteRunner",
    "WorkerPool",
    "create_logger",
    "enable_stderr",
    "family_indices",
    "family_members",
    "get_settings",
    "interlace_row",
    "ring_buffer",
    "run_interlace",
    "run_suite",
]
