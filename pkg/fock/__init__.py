# fock/__init__.py
"""
Fock module: truncated bosonic Fock spaces and the matrix-exponential oracle.

Provides:
- Spaces, operators, vectors, ladder operators and interior checks (from space.py)
- Padé scaling-and-squaring exponential (from expm.py)
"""

from fock.expm import expm
from fock.space import (
    FockOperator,
    FockSpace,
    FockVector,
    TwoModeSpace,
    annihilator,
    basis_vector,
    commutator,
    creator,
    derivative_vector,
    exp_matrix,
    exponential_vector,
    identity,
    inner,
    interior_projection,
    interior_residual,
    number_operator,
    truncation_tail_bound,
    vacuum,
)

__all__ = [
    "expm",
    # Spaces
    "FockSpace",
    "TwoModeSpace",
    "FockOperator",
    "FockVector",
    # Operators
    "annihilator",
    "creator",
    "number_operator",
    "identity",
    "commutator",
    "exp_matrix",
    "interior_projection",
    "interior_residual",
    # Vectors
    "vacuum",
    "basis_vector",
    "exponential_vector",
    "derivative_vector",
    "inner",
    "truncation_tail_bound",
]
