# utils.py
"""
utils.py - Common utility functions for ceheis

Provides shared, stateless helpers for complex scalars, JSON-safe
encodings and seeded random draws used across modules.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

import numpy as np

from core.errors import DomainError

ComplexPair = Tuple[float, float]


def as_complex(value: complex | float | Sequence[float]) -> complex:
    """Coerce a scalar or an (re, im) pair into a Python complex.

    Example: (2.0, 4.0) -> (2+4j)
    """
    if isinstance(value, (tuple, list, np.ndarray)):
        if len(value) != 2:
            raise DomainError(f"complex pair needs two reals, got {len(value)}")
        z = complex(float(value[0]), float(value[1]))
    else:
        z = complex(value)
    if not np.isfinite(z.real) or not np.isfinite(z.imag):
        raise DomainError(f"non-finite complex value {z!r}")
    return z


def complex_pair(z: complex) -> List[float]:
    """Encode a complex number as [re, im] for JSON output."""
    z = complex(z)
    return [float(z.real), float(z.imag)]


def matrix_pairs(matrix: np.ndarray) -> List[List[List[float]]]:
    """Row-major nested [re, im] pairs for a complex matrix."""
    return [[complex_pair(entry) for entry in row] for row in np.asarray(matrix)]


def frozen_array(values, dtype=complex) -> np.ndarray:
    """Copy into a read-only numpy array."""
    arr = np.array(values, dtype=dtype, copy=True)
    arr.flags.writeable = False
    return arr


def require_finite(arr: np.ndarray, what: str = "array") -> None:
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{what} has non-finite entries")


# =============================================================================
# Random draws (seeded, reproducible)
# =============================================================================

def random_complex(rng: np.random.Generator, size: int | Tuple[int, ...],
                   scale: float = 1.0) -> np.ndarray:
    """Uniform draws on the square [-scale, scale]^2 of the complex plane."""
    return rng.uniform(-scale, scale, size) + 1j * rng.uniform(-scale, scale, size)


def format_sig(value: float, digits: int) -> str:
    """Format a float with a fixed number of significant digits.

    Example: format_sig(1/3, 17) -> '0.33333333333333331'
    """
    return f"{value:.{digits}g}"
