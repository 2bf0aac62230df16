# algebra/__init__.py
"""
Algebra module: structure-constant engine, CEHeis, its real form and eta_4.

Provides:
- Algebra elements, bracket, star map, Jacobi defect, derived series (from lie_core.py)
- Real form (p, q, H, E) and the eta_4 basis change (from real_form.py)
"""

# Structure-constant engine
from algebra.lie_core import (
    AlgebraElement,
    StructureConstants,
    adjoint,
    bracket,
    ceheis_structure,
    center,
    derived_series,
    is_linearly_independent,
    jacobi_defect,
    perturbed,
)

# Real form and classification
from algebra.real_form import (
    BasisChange,
    RealFormParams,
    eta4_isomorphism,
    eta4_structure,
    from_real_form,
    pushforward,
    to_real_form,
)

__all__ = [
    # Engine
    "AlgebraElement",
    "StructureConstants",
    "adjoint",
    "bracket",
    "ceheis_structure",
    "center",
    "derived_series",
    "is_linearly_independent",
    "jacobi_defect",
    "perturbed",
    # Real form
    "BasisChange",
    "RealFormParams",
    "eta4_isomorphism",
    "eta4_structure",
    "from_real_form",
    "pushforward",
    "to_real_form",
]
