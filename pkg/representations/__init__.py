# representations/__init__.py
"""
Representations module: CEHeis as operators on truncated Fock spaces.

Provides:
- Boson (Schroedinger-algebra) representation and exponential-vector actions (from boson.py)
- Two independent CCR pairs on a two-mode space (from two_mode.py)
"""

from representations.boson import (
    Branch,
    CECCRReport,
    Generator,
    RepresentationParams,
    RepresentedAlgebra,
    adjoint_formula,
    build_representation,
    duality_defects,
    exp_vector_action,
    structure_realization_defect,
    verify_ceccr,
)
from representations.two_mode import (
    CCRCase,
    CCRQuadrature,
    build_ccr_representation,
    build_quadratures,
    ccr_case,
    helper_identity_residuals,
    quadrature_defects,
)

__all__ = [
    # Boson
    "Branch",
    "CECCRReport",
    "Generator",
    "RepresentationParams",
    "RepresentedAlgebra",
    "adjoint_formula",
    "build_representation",
    "duality_defects",
    "exp_vector_action",
    "structure_realization_defect",
    "verify_ceccr",
    # Two modes
    "CCRCase",
    "CCRQuadrature",
    "build_ccr_representation",
    "build_quadratures",
    "ccr_case",
    "helper_identity_residuals",
    "quadrature_defects",
]
