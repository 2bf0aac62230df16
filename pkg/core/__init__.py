# core/__init__.py
"""
Core module: configuration, errors, logging setup and shared helpers.

Provides:
- Numerical tolerances, dimensions and grids (from config.py)
- Exception hierarchy (from errors.py)
- CLI logging setup (from log.py)
- Complex/JSON helpers (from utils.py)
"""

from core.errors import (
    CEHeisError,
    DimensionMismatchError,
    DomainError,
    RepresentationParamsError,
    TrivialExtensionError,
)
from core.log import configure_logging
from core.utils import as_complex, complex_pair, matrix_pairs

__all__ = [
    # Errors
    "CEHeisError",
    "DimensionMismatchError",
    "DomainError",
    "RepresentationParamsError",
    "TrivialExtensionError",
    # Logging
    "configure_logging",
    # Helpers
    "as_complex",
    "complex_pair",
    "matrix_pairs",
]
