# representations/two_mode.py
"""
CEHeis from two independent CCR pairs on a two-mode Fock space.

q_j = (b_j + b_j_dag) / 2 and p_j = i (b_j_dag - b_j) / 2 satisfy
[q_j, p_k] = (i/2) delta_jk, with b_1 = b (x) I and b_2 = I (x) b.
Three constructions cover z != 0 (x = Re z, y = Im z):

    (i)   x != 0, y != 0:  a = i x q1 + p1^2 / x - y p2 - (i / y) q2^2,   h = -2 (p1 + q2)
    (ii)  x == 0:          a = c p1^2 - y p2 + (r - i / y) q2^2,          h = -2 q2
    (iii) y == 0:          a = i x q1 + (1/x + i r) p1^2 + c q2^2,        h = -2 p1

with a_dag the adjoint of a and E = 1; r is real and c complex, both free.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List

import numpy as np

from core.config import DEFAULT_MARGIN, QUADRATURE_TOL
from core.errors import require_nonzero
from fock.space import (
    FockOperator,
    TwoModeSpace,
    annihilator,
    commutator,
    identity,
    interior_residual,
)
from representations.boson import RepresentedAlgebra

log = logging.getLogger(__name__)


class CCRCase(Enum):
    BOTH_NONZERO = "i"
    RE_ZERO = "ii"
    IM_ZERO = "iii"


@dataclass(frozen=True)
class CCRQuadrature:
    q1: FockOperator
    p1: FockOperator
    q2: FockOperator
    p2: FockOperator

    def qs(self) -> List[FockOperator]:
        return [self.q1, self.q2]

    def ps(self) -> List[FockOperator]:
        return [self.p1, self.p2]


def mode_annihilators(space: TwoModeSpace) -> tuple[FockOperator, FockOperator]:
    """b_1 = b (x) I and b_2 = I (x) b."""
    b = annihilator(space.mode).matrix
    eye = np.eye(space.dim_per_mode)
    return FockOperator(space, np.kron(b, eye)), FockOperator(space, np.kron(eye, b))


def build_quadratures(space: TwoModeSpace) -> CCRQuadrature:
    b1, b2 = mode_annihilators(space)
    quads = []
    for b in (b1, b2):
        b_dag = b.dagger()
        quads.append(((b + b_dag) * 0.5, (b_dag - b) * 0.5j))
    (q1, p1), (q2, p2) = quads
    return CCRQuadrature(q1=q1, p1=p1, q2=q2, p2=p2)


def ccr_case(z: complex) -> CCRCase:
    """Exact zero tests on the user-supplied parts of z."""
    z = complex(z)
    require_nonzero(z)
    if z.real == 0:
        return CCRCase.RE_ZERO
    if z.imag == 0:
        return CCRCase.IM_ZERO
    return CCRCase.BOTH_NONZERO


def build_ccr_representation(z: complex, r_opt: float, c_opt: complex,
                             space: TwoModeSpace) -> RepresentedAlgebra:
    """a, a_dag, h, E for the applicable case; r_opt and c_opt only enter (ii) and (iii)."""
    z = complex(z)
    case = ccr_case(z)
    x, y = z.real, z.imag
    c_opt = complex(c_opt)
    quad = build_quadratures(space)
    q1, p1, q2, p2 = quad.q1, quad.p1, quad.q2, quad.p2
    p1_sq, q2_sq = p1 @ p1, q2 @ q2

    if case is CCRCase.BOTH_NONZERO:
        a_op = (1j * x) * q1 + (1 / x) * p1_sq - y * p2 - (1j / y) * q2_sq
        h_op = -2 * (p1 + q2)
    elif case is CCRCase.RE_ZERO:
        a_op = c_opt * p1_sq - y * p2 + (r_opt - 1j / y) * q2_sq
        h_op = -2 * q2
    else:
        a_op = (1j * x) * q1 + (1 / x + 1j * r_opt) * p1_sq + c_opt * q2_sq
        h_op = -2 * p1
    log.debug("built two-mode representation case %s for z=%s, D2=%d",
              case.value, z, space.dim_per_mode)
    return RepresentedAlgebra(
        a_op=a_op,
        a_dag_op=a_op.dagger(),
        h_op=h_op,
        e_op=identity(space),
    )


def quadrature_defects(quad: CCRQuadrature, margin: int = DEFAULT_MARGIN) -> Dict[str, float]:
    """Interior residuals of [q_j, p_k] = (i/2) delta_jk, full norms of [q_j, q_k], [p_j, p_k]."""
    eye = identity(quad.q1.space)
    defects: Dict[str, float] = {}
    for j, q in enumerate(quad.qs(), start=1):
        for k, p in enumerate(quad.ps(), start=1):
            target = 0.5j * eye if j == k else 0 * eye
            defects[f"[q{j},p{k}]"] = interior_residual(commutator(q, p) - target, margin)
    defects["[q1,q2]"] = float(np.linalg.norm(commutator(quad.q1, quad.q2).matrix))
    defects["[p1,p2]"] = float(np.linalg.norm(commutator(quad.p1, quad.p2).matrix))
    worst = max(defects.values())
    if worst > QUADRATURE_TOL:
        log.warning("quadrature relations off by %.3g", worst)
    return defects


def helper_identity_residuals(quad: CCRQuadrature, margin: int = DEFAULT_MARGIN) -> Dict[str, float]:
    """[q, p^2] = i p, [q^2, p] = i q, [q^2, p^2] = i (qp + pq) per mode, on the interior.

    Note i (qp + pq) = 2i pq - 1/2, so 2i pq alone misses a constant.
    """
    residuals: Dict[str, float] = {}
    for j, (q, p) in enumerate(zip(quad.qs(), quad.ps()), start=1):
        q_sq, p_sq = q @ q, p @ p
        residuals[f"[q{j},p{j}^2]-ip{j}"] = interior_residual(commutator(q, p_sq) - 1j * p, margin)
        residuals[f"[q{j}^2,p{j}]-iq{j}"] = interior_residual(commutator(q_sq, p) - 1j * q, margin)
        residuals[f"[q{j}^2,p{j}^2]-i(q{j}p{j}+p{j}q{j})"] = interior_residual(
            commutator(q_sq, p_sq) - 1j * (q @ p + p @ q), margin)
    return residuals
