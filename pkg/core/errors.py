# errors.py
"""
Exception hierarchy for ceheis.

Every error raised by the library derives from CEHeisError and from
ValueError, so callers can catch either the project base or the builtin.
"""
from __future__ import annotations


class CEHeisError(Exception):
    """Base class for all library errors."""


class TrivialExtensionError(CEHeisError, ValueError):
    """Raised when z = 0 (or (c, b) = (0, 0)): the extension splits."""


class DimensionMismatchError(CEHeisError, ValueError):
    """Raised when elements or operators live in different spaces."""


class DomainError(CEHeisError, ValueError):
    """Raised for out-of-domain inputs: 2Ls+1 <= 0, bad margins, non-finite data."""


class RepresentationParamsError(CEHeisError, ValueError):
    """Raised for inconsistent representation parameters."""


def require_nonzero(z: complex, what: str = "z") -> None:
    """Reject the trivial extension."""
    if z == 0:
        raise TrivialExtensionError(f"{what} = 0 gives the trivial extension; need {what} != 0")


def require_same_dim(left: int, right: int, what: str = "dimension") -> None:
    if left != right:
        raise DimensionMismatchError(f"{what} mismatch: {left} != {right}")
