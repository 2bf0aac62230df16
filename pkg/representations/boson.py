# representations/boson.py
"""
Boson representation of CEHeis inside the Schroedinger algebra.

Every generator is a combination c_S S + c_B B + c_K K of
    S = (b - b_dag)^2,   B = b + b_dag,   K = b - b_dag
with E = 1. For Re z != 0 (kappa = (4 rho Im z - r^2) / (4 Re z)):
    a = (kappa + i rho) S - (i conj(z) / (2r)) B,    h = i r (b_dag - b)
For Re z = 0:
    a = (rho + i Im z / (16 r^2)) S + r B,           h = (i Im z / (2r)) (b - b_dag)
and a_dag is the adjoint of a in both branches.

On exponential vectors b y = lam y and b_dag y = y', so
    S y = (lam^2 - 1) y + y'' - 2 lam y',   B y = lam y + y',   K y = lam y - y'.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

import numpy as np

from algebra.lie_core import StructureConstants
from core.config import CECCR_TOL, DEFAULT_MARGIN, MIN_DIM
from core.errors import DomainError, RepresentationParamsError, require_nonzero
from fock.space import (
    FockOperator,
    FockSpace,
    FockVector,
    annihilator,
    commutator,
    creator,
    derivative_vector,
    exponential_vector,
    identity,
    interior_residual,
    interior_vector_residual,
)

log = logging.getLogger(__name__)

Coefficients = Tuple[complex, complex, complex]


class Branch(Enum):
    """Which closed form realises the algebra; fixed by whether Re z vanishes."""
    RE_NONZERO = "ReNonzero"
    RE_ZERO = "ReZero"


class Generator(Enum):
    A = "a"
    A_DAG = "a_dag"
    H = "h"
    E = "E"


@dataclass(frozen=True)
class RepresentationParams:
    z: complex
    rho: float
    r: float
    branch: Branch

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        require_nonzero(self.z)
        if self.r == 0 or not np.isfinite(self.r):
            raise RepresentationParamsError(f"need a finite r != 0, got {self.r}")
        if not np.isfinite(self.rho):
            raise RepresentationParamsError(f"need a finite rho, got {self.rho}")
        branch = Branch(self.branch)
        expected = Branch.RE_ZERO if self.z.real == 0 else Branch.RE_NONZERO
        if branch is not expected:
            raise RepresentationParamsError(
                f"branch {branch.value} does not match z = {self.z} (expected {expected.value})")
        object.__setattr__(self, "branch", branch)

    @classmethod
    def auto(cls, z: complex, rho: float, r: float) -> "RepresentationParams":
        """Pick the branch from the exact real part of z."""
        z = complex(z)
        branch = Branch.RE_ZERO if z.real == 0 else Branch.RE_NONZERO
        return cls(z=z, rho=rho, r=r, branch=branch)

    @property
    def kappa(self) -> float:
        """(4 rho Im z - r^2) / (4 Re z); only defined on the ReNonzero branch."""
        if self.branch is Branch.RE_ZERO:
            raise RepresentationParamsError("kappa is only defined when Re z != 0")
        return (4 * self.rho * self.z.imag - self.r ** 2) / (4 * self.z.real)


@dataclass(frozen=True)
class RepresentedAlgebra:
    a_op: FockOperator
    a_dag_op: FockOperator
    h_op: FockOperator
    e_op: FockOperator

    @property
    def space(self):
        return self.a_op.space

    def operators(self) -> List[FockOperator]:
        """Operators in the basis order (a, a_dag, h, E)."""
        return [self.a_op, self.a_dag_op, self.h_op, self.e_op]

    def by_name(self) -> Dict[str, FockOperator]:
        return {"a": self.a_op, "a_dag": self.a_dag_op, "h": self.h_op, "E": self.e_op}


@dataclass(frozen=True)
class CECCRReport:
    """Interior residual norms of the three defining relations."""
    a_adag_h: float
    h_adag_z: float
    a_h_zbar: float

    @property
    def worst(self) -> float:
        return max(self.a_adag_h, self.h_adag_z, self.a_h_zbar)

    def passes(self, tol: float = CECCR_TOL) -> bool:
        return self.worst <= tol

    def as_dict(self) -> Dict[str, float]:
        return {
            "[a,a_dag]-h": self.a_adag_h,
            "[h,a_dag]-z": self.h_adag_z,
            "[a,h]-conj(z)": self.a_h_zbar,
        }


# =============================================================================
# Generator coefficients
# =============================================================================

def generator_coefficients(params: RepresentationParams, generator: Generator) -> Coefficients:
    """(c_S, c_B, c_K) with generator = c_S S + c_B B + c_K K."""
    generator = Generator(generator)
    z, rho, r = params.z, params.rho, params.r
    if params.branch is Branch.RE_NONZERO:
        a_coeffs = (params.kappa + 1j * rho, -1j * np.conj(z) / (2 * r), 0j)
        h_coeffs = (0j, 0j, -1j * r)
    else:
        a_coeffs = (rho + 1j * z.imag / (16 * r ** 2), complex(r), 0j)
        h_coeffs = (0j, 0j, 1j * z.imag / (2 * r))

    if generator is Generator.A:
        return a_coeffs
    if generator is Generator.A_DAG:
        # S, B are self-adjoint and K is skew-adjoint
        c_s, c_b, c_k = a_coeffs
        return (np.conj(c_s), np.conj(c_b), -np.conj(c_k))
    if generator is Generator.H:
        return h_coeffs
    raise DomainError("E is the identity, not a combination of S, B, K")


def _ladder_blocks(space: FockSpace) -> Tuple[FockOperator, FockOperator, FockOperator]:
    b = annihilator(space)
    b_dag = creator(space)
    k = b - b_dag
    return k @ k, b + b_dag, k


def _combine(blocks: Tuple[FockOperator, FockOperator, FockOperator],
             coeffs: Coefficients) -> FockOperator:
    s_op, b_op, k_op = blocks
    return coeffs[0] * s_op + coeffs[1] * b_op + coeffs[2] * k_op


# =============================================================================
# Operations
# =============================================================================

def build_representation(params: RepresentationParams, space: FockSpace) -> RepresentedAlgebra:
    """a, a_dag, h, E as Fock operators; (b - b_dag)^2 is an actual matrix square."""
    if space.dim < MIN_DIM:
        raise DomainError(f"representation needs dim >= {MIN_DIM}, got {space.dim}")
    blocks = _ladder_blocks(space)
    a_op = _combine(blocks, generator_coefficients(params, Generator.A))
    h_op = _combine(blocks, generator_coefficients(params, Generator.H))
    log.debug("built %s boson representation z=%s rho=%g r=%g dim=%d",
              params.branch.value, params.z, params.rho, params.r, space.dim)
    return RepresentedAlgebra(
        a_op=a_op,
        a_dag_op=a_op.dagger(),
        h_op=h_op,
        e_op=identity(space),
    )


def adjoint_formula(params: RepresentationParams, space: FockSpace) -> FockOperator:
    """a_dag written out in closed form instead of as a conjugate transpose.

    Re z != 0: (kappa - i rho) S + (i z / (2r)) B
    Re z = 0:  (rho - i Im z / (16 r^2)) S + r B
    """
    blocks = _ladder_blocks(space)
    z, rho, r = params.z, params.rho, params.r
    if params.branch is Branch.RE_NONZERO:
        coeffs = (params.kappa - 1j * rho, 1j * z / (2 * r), 0j)
    else:
        coeffs = (rho - 1j * z.imag / (16 * r ** 2), complex(r), 0j)
    return _combine(blocks, coeffs)


def verify_ceccr(rep: RepresentedAlgebra, z: complex, margin: int = DEFAULT_MARGIN) -> CECCRReport:
    """Residuals ||([a,a_dag]-h)P||, ||([h,a_dag]-z)P||, ||([a,h]-conj(z))P||."""
    if margin < 4:
        raise DomainError(f"CECCR checks need margin >= 4, got {margin}")
    z = complex(z)
    e_op = rep.e_op
    report = CECCRReport(
        a_adag_h=interior_residual(commutator(rep.a_op, rep.a_dag_op) - rep.h_op, margin),
        h_adag_z=interior_residual(commutator(rep.h_op, rep.a_dag_op) - z * e_op, margin),
        a_h_zbar=interior_residual(commutator(rep.a_op, rep.h_op) - np.conj(z) * e_op, margin),
    )
    if not report.passes():
        log.warning("CECCR residuals out of tolerance for z=%s: %s", z, report.as_dict())
    return report


def duality_defects(rep: RepresentedAlgebra) -> Tuple[float, float]:
    """(||a_dag - a^*||, ||h - h^*||); both vanish exactly by construction."""
    a_dual = float(np.max(np.abs(rep.a_dag_op.matrix - rep.a_op.matrix.conj().T)))
    h_dual = float(np.max(np.abs(rep.h_op.matrix - rep.h_op.matrix.conj().T)))
    return a_dual, h_dual


def structure_realization_defect(rep: RepresentedAlgebra, sc: StructureConstants,
                                 margin: int = DEFAULT_MARGIN) -> float:
    """max over i < j of ||([A_i, A_j] - sum_k c_ijk A_k) P||.

    Compares the operator brackets against an arbitrary table, so a corrupted
    table is caught even when it is still a Lie algebra.
    """
    ops = rep.operators()
    if sc.dim != len(ops):
        raise DomainError(f"table has dimension {sc.dim}, representation has {len(ops)} operators")
    worst = 0.0
    for i in range(sc.dim):
        for j in range(i + 1, sc.dim):
            expected = ops[0] * 0
            for k, coeff in enumerate(sc.table[i, j]):
                if coeff != 0:
                    expected = expected + coeff * ops[k]
            worst = max(worst, interior_residual(commutator(ops[i], ops[j]) - expected, margin))
    return worst


def exp_vector_action(generator: Generator, params: RepresentationParams, lam: complex,
                      space: FockSpace) -> FockVector:
    """Closed-form action of a generator on y(lam) via lam-derivatives of y."""
    generator = Generator(generator)
    y = exponential_vector(lam, space)
    if generator is Generator.E:
        return y
    dy = derivative_vector(lam, space, 1)
    d2y = derivative_vector(lam, space, 2)
    c_s, c_b, c_k = generator_coefficients(params, generator)
    s_y = (lam ** 2 - 1) * y + d2y - (2 * lam) * dy
    b_y = lam * y + dy
    k_y = lam * y - dy
    return c_s * s_y + c_b * b_y + c_k * k_y


def exp_vector_action_defect(params: RepresentationParams, lam: complex, space: FockSpace,
                             margin: int = DEFAULT_MARGIN) -> float:
    """Worst interior distance between closed-form and matrix actions on y(lam)."""
    rep = build_representation(params, space)
    y = exponential_vector(lam, space)
    worst = 0.0
    for generator, op in zip(Generator, rep.operators()):
        diff = exp_vector_action(generator, params, lam, space) - op.apply(y)
        worst = max(worst, interior_vector_residual(diff, margin))
    return worst
