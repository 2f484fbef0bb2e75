"""
Exception hierarchy shared by every chowlab sub-package.

Errors about malformed input derive from ``ValueError`` so callers that only
know the builtin types can still catch them.
"""
from __future__ import annotations


class ChowlabError(Exception):
    """Base class for all chowlab errors."""
    pass


class InvalidObjectError(ChowlabError, ValueError):
    """Raised when a permutation, sequence, subset, monomial or lattice is malformed."""
    pass


class NotNormalError(InvalidObjectError):
    """Raised when a monomial is not normal for the quadratic Gröbner basis."""
    pass


class NotRealRootedError(InvalidObjectError):
    """Raised when an operation needs a real-rooted polynomial and gets another one."""
    pass


class ResourceGuardError(ChowlabError, RuntimeError):
    """Raised when a computation would exceed the configured enumeration budget."""
    pass


class InvariantViolation(ChowlabError, AssertionError):
    """Raised when an identity that must hold is found to fail."""
    pass
