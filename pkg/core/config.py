# config.py
"""
Centralized numerical configuration for ceheis.

This file contains the cross-cutting tolerances, oracle dimensions and
default parameter grids. Module-specific choices (Padé orders, CLI flag
defaults) live next to the code that uses them:
- fock/expm.py (Padé orders and scaling thresholds)
- main.py (command-line defaults)
"""
from __future__ import annotations

from typing import Tuple

# =============================================================================
# ALGEBRA
# =============================================================================
# Basis order of the complex algebra (fixed everywhere)
CEHEIS_BASIS: Tuple[str, ...] = ("a", "a_dag", "h", "E")
REAL_FORM_BASIS: Tuple[str, ...] = ("p", "q", "H", "E")
ETA4_BASIS: Tuple[str, ...] = ("e1", "e2", "e3", "e4")

COEFF_TOL = 1e-12        # Per-coefficient tolerance for "exact" identities
PIVOT_TOL = 1e-12        # Rank-revealing elimination pivot threshold
DET_TOL = 1e-12          # Minimum |det| of a basis change

# =============================================================================
# FOCK ORACLE
# =============================================================================
# Default truncations. Every polynomial identity is only checked on the
# interior levels 0..D-1-margin, so these leave >= 10 trustworthy levels.
MIN_DIM = 8              # Smallest space a representation may be built on
MIN_FOCK_DIM = 4         # Smallest FockSpace at all
DEFAULT_DIM = 40         # One-mode representation checks
SPLITTING_DIM = 48       # Splitting formula and MGF oracle
TWO_MODE_DIM = 24        # Levels per mode for the tensor-product checks
MIN_TWO_MODE_DIM = 6
DEFAULT_MARGIN = 4       # Degree-2 operators, commutators of them
LOW_LEVELS = 10          # Matrix elements compared by the group oracle

EXPM_NORM_LIMIT = 50.0   # Largest ||A|| for which exp_matrix is trusted to 1e-12

# =============================================================================
# TOLERANCES
# =============================================================================
CECCR_TOL = 1e-10            # Boson representation commutation relations
EXP_VECTOR_TOL = 1e-8         # Closed-form exponential-vector actions
SPLITTING_TOL = 1e-8         # Relative residual of the splitting formula
ODE_TOL = 1e-8               # Central-difference ODE residuals
MGF_REL_TOL = 1e-6           # Closed-form MGF vs matrix oracle
GAUSSIAN_TOL = 1e-10         # log MGF - MN s^2/2 in the Gaussian case
MOMENT_TOL = 1e-4            # Second moment from finite differences
TWO_MODE_TOL = 1e-9          # Two-mode CECCR residuals
QUADRATURE_TOL = 1e-10       # [q_j, p_k] relations
GROUP_TOL = 1e-10            # Associativity
INVERSE_TOL = 1e-12          # Identity and inverse
OPERATOR_ORACLE_TOL = 1e-7   # Group law and reordering identities at operator level

# =============================================================================
# FINITE DIFFERENCES
# =============================================================================
ODE_STEP = 1e-5          # Central-difference step for ODE residuals
MOMENT_STEP = 1e-2       # Base step for Richardson-extrapolated moments
ODE_SAMPLES = 20         # s values sampled per parameter set

# =============================================================================
# ORACLE REGIME
# =============================================================================
# A dense truncated exponential of s*L*(b-b^dag)^2 amplifies roundoff by
# roughly exp(4*D*max(-sL, 0)); comparisons are only made below these caps.
SPLITTING_MAX_AMPLIFICATION = 24.0
MGF_MAX_AMPLIFICATION = 20.0
MAX_SQUEEZE_TAIL = 1e-10     # (2|w1|)^(D/2) bound on the neglected tail
MIN_DOMAIN_MARGIN = 0.5      # Grid points require 2Ls+1 >= this

# =============================================================================
# DEFAULT GRIDS
# =============================================================================
# Jacobi / algebra suite
ALGEBRA_Z_GRID: Tuple[complex, ...] = (1.0 + 0j, 1j, 1 + 1j, 0.7 - 0.3j)
JACOBI_FUZZ_COUNT = 1000

# Boson representation grid (4 x 3 x 3 = 36 points)
BOSON_Z_GRID: Tuple[complex, ...] = (2.0 + 0j, -1 + 1j, 3j, 0.5 - 2j)
BOSON_RHO_GRID: Tuple[float, ...] = (-1.0, 0.0, 0.7)
BOSON_R_GRID: Tuple[float, ...] = (0.5, 1.0, 2.0)

# Exponential-vector actions (12 sample points, |lambda| <= 1)
EXP_VECTOR_LAMBDAS: Tuple[complex, ...] = (
    0j, 0.5 + 0j, -0.8 + 0j, 0.6j, 0.3 - 0.4j, -0.5 + 0.5j,
)
EXP_VECTOR_PARAMS: Tuple[Tuple[complex, float, float], ...] = (
    (2.0 + 0j, 0.0, 2.0),
    (3j, 0.3, 1.5),
)

# Splitting formula grid
SPLITTING_L_GRID: Tuple[float, ...] = (-0.5, 0.0, 0.5, 1.0)
SPLITTING_MN_GRID: Tuple[complex, ...] = (0j, 1 + 0j, 1 - 1j)
SPLITTING_S_GRID: Tuple[float, ...] = (-0.2, 0.1, 0.2, 0.4)

# MGF oracle grid: (z, rho, r) chosen with small |L| so the truncated
# exponential stays accurate for |s| <= 0.3
MGF_PARAM_GRID: Tuple[Tuple[complex, float, float], ...] = (
    (2.0 + 0j, 0.0, 0.5),
    (-1 + 1j, 0.0, 0.5),
    (2 + 4j, 0.5, 8.0 ** 0.5),
    (3j, 0.0, 1.0),
    (3j, 0.05, 1.0),
)
MGF_S_GRID: Tuple[float, ...] = (-0.3, -0.2, -0.1, 0.0, 0.1, 0.2, 0.3)

# eta_4 classification grid: 20 values over the three cases
ETA4_Z_GRID: Tuple[complex, ...] = (
    1 + 0j, 2 + 0j, -0.5 + 0j, 3.7 + 0j, -4 + 0j, 0.1 + 0j,
    1j, -2j, 0.3j, 5j, -0.7j, 2.5j,
    1 + 1j, 2 - 3j, -1 + 0.5j, 0.7 - 0.3j, -2 - 2j, 0.2 + 4j, 3 + 0.1j, -0.4 - 1.6j,
)

# Two-mode free parameters (5 samples each)
TWO_MODE_R_SAMPLES: Tuple[float, ...] = (-1.0, 0.0, 0.5, 1.0, 2.0)
TWO_MODE_C_SAMPLES: Tuple[complex, ...] = (0j, 1 + 1j, 1j, -0.5 + 0j, 0.3 - 0.7j)

# Group law
GROUP_FUZZ_COUNT = 1000
GROUP_ORACLE_PAIRS = 50
GROUP_Z_GRID: Tuple[complex, ...] = (1.0 + 0j, 1j, 0.7 + 0.2j, -1 + 2j)
ORACLE_COORD_MAX = 0.5

# Operator oracle representation for z = 1+i. rho = r^2 / 4 gives kappa = 0, so the
# (b - b_dag)^2 part of a is i*rho*S; small r keeps the low block converged at D = 40.
ORACLE_Z = 1 + 1j
ORACLE_RHO = 0.0625
ORACLE_R = 0.5

# =============================================================================
# RUN CONTROL
# =============================================================================
DEFAULT_SEED = 0
CSV_SIGNIFICANT_DIGITS = 17
