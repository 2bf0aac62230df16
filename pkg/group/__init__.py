# group/__init__.py
"""
Group module: the centrally extended Heisenberg group.

Provides:
- Coordinate group law, identity, inverse, reordering identities (from law.py)
- Operator-level oracle checks through the boson representation (from oracle.py)
"""

from group.law import (
    GroupElement,
    OrderedWord,
    WeylCase,
    compose,
    group_commutator,
    heisenberg_compose,
    identity_element,
    inverse,
    power,
    reorder_a_adag,
    reorder_weyl,
    zassenhaus_special,
)
from group.oracle import (
    derivative_identity_residuals,
    group_oracle_check,
    reorder_a_adag_residual,
    reorder_weyl_residual,
    zassenhaus_residual,
)

__all__ = [
    # Coordinates
    "GroupElement",
    "OrderedWord",
    "WeylCase",
    "compose",
    "group_commutator",
    "heisenberg_compose",
    "identity_element",
    "inverse",
    "power",
    "reorder_a_adag",
    "reorder_weyl",
    "zassenhaus_special",
    # Oracle
    "derivative_identity_residuals",
    "group_oracle_check",
    "reorder_a_adag_residual",
    "reorder_weyl_residual",
    "zassenhaus_residual",
]
