# algebra/real_form.py
"""
Real form (p, q, H, E) of CEHeis and its identification with eta_4.

    p = (a + a_dag)/2,  q = (a_dag - a)/(2i),  H = -i h / 2
    [p, q] = H,  [q, H] = c E,  [H, p] = b E,   c = Re z / 2,  b = Im z / 2

eta_4 is the real solvable algebra with [e4, e1] = e2, [e4, e2] = e3 and all
other basis brackets zero.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from algebra.lie_core import AlgebraElement, StructureConstants, adjoint, bracket
from core.config import DET_TOL, ETA4_BASIS, REAL_FORM_BASIS
from core.errors import DomainError, TrivialExtensionError, require_nonzero
from core.utils import frozen_array

log = logging.getLogger(__name__)

P, Q, H, E = range(4)
E1, E2, E3, E4 = range(4)


@dataclass(frozen=True)
class RealFormParams:
    c_real: float
    b_real: float

    def __post_init__(self):
        if self.c_real == 0 and self.b_real == 0:
            raise TrivialExtensionError("(c, b) = (0, 0) gives the trivial extension")

    @classmethod
    def from_z(cls, z: complex) -> "RealFormParams":
        z = complex(z)
        require_nonzero(z)
        return cls(c_real=z.real / 2, b_real=z.imag / 2)

    @property
    def case(self) -> str:
        """Which construction the eta_4 identification uses."""
        if self.b_real == 0:
            return "b=0"
        if self.c_real == 0:
            return "c=0"
        return "both nonzero"


@dataclass(frozen=True)
class BasisChange:
    """Change of basis from (p, q, H, E) coordinates to (e1, e2, e3, e4) coordinates.

    x_new = matrix @ x_old. The new basis vectors, in old coordinates, are the
    columns of the inverse and are kept in `vectors` (row i is e_{i+1}).
    """
    matrix: np.ndarray
    vectors: np.ndarray
    old_names: Tuple[str, ...] = REAL_FORM_BASIS
    new_names: Tuple[str, ...] = ETA4_BASIS

    def __post_init__(self):
        matrix = frozen_array(self.matrix)
        det = np.linalg.det(matrix)
        if abs(det) <= DET_TOL:
            raise DomainError(f"basis change is singular (|det| = {abs(det):.3g})")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "vectors", frozen_array(self.vectors))

    @classmethod
    def from_vectors(cls, vectors: np.ndarray) -> "BasisChange":
        vectors = np.asarray(vectors, dtype=complex)
        return cls(matrix=np.linalg.inv(vectors.T), vectors=vectors)

    def inverse(self) -> np.ndarray:
        """New -> old coordinate map, by solving against the identity."""
        return np.linalg.solve(self.matrix, np.eye(self.matrix.shape[0], dtype=complex))

    def to_new(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.matrix @ x.coeffs)

    def new_basis(self) -> List[AlgebraElement]:
        return [AlgebraElement(v) for v in self.vectors]

    def describe(self) -> List[str]:
        """Lines like 'e4 = q' for each new basis vector, e4 first."""
        lines = []
        for idx in (E4, E1, E2, E3):
            terms = []
            for coeff, name in zip(self.vectors[idx], self.old_names):
                if abs(coeff) <= DET_TOL:
                    continue
                c = coeff.real
                if c == 1:
                    terms.append(name)
                elif c == -1:
                    terms.append(f"-{name}")
                else:
                    terms.append(f"{c:g}*{name}")
            lines.append(f"{self.new_names[idx]} = " + " + ".join(terms).replace("+ -", "- "))
        return lines


# =============================================================================
# Real form
# =============================================================================

def to_real_form(z: complex) -> StructureConstants:
    """Real structure constants over (p, q, H, E); H is skew-adjoint."""
    params = RealFormParams.from_z(z)
    return real_form_structure(params.c_real, params.b_real)


def real_form_structure(c_real: float, b_real: float) -> StructureConstants:
    RealFormParams(c_real, b_real)
    table = np.zeros((4, 4, 4), dtype=complex)
    table[P, Q, H], table[Q, P, H] = 1.0, -1.0
    table[Q, H, E], table[H, Q, E] = c_real, -c_real
    table[H, P, E], table[P, H, E] = b_real, -b_real
    return StructureConstants(
        table=table,
        star=(P, Q, H, E),
        names=REAL_FORM_BASIS,
        star_phase=(1.0, 1.0, -1.0, 1.0),
    )


def from_real_form(c_real: float, b_real: float) -> complex:
    """z = 2c + 2bi."""
    params = RealFormParams(c_real, b_real)
    return complex(2 * params.c_real, 2 * params.b_real)


def complex_basis_in_real_form() -> List[AlgebraElement]:
    """a = p - iq, a_dag = p + iq, h = 2iH, E in (p, q, H, E) coordinates."""
    return [
        AlgebraElement([1, -1j, 0, 0]),
        AlgebraElement([1, 1j, 0, 0]),
        AlgebraElement([0, 0, 2j, 0]),
        AlgebraElement([0, 0, 0, 1]),
    ]


def roundtrip_defect(z: complex) -> float:
    """Max coefficient error when CEHeis(z) brackets are recomputed inside the real form.

    [a, a_dag] must be h, [h, a_dag] must be zE and [a, h] must be conj(z)E.
    """
    z = complex(z)
    rf = to_real_form(z)
    a, a_dag, h, e = complex_basis_in_real_form()
    checks = (
        (bracket(a, a_dag, rf), h),
        (bracket(h, a_dag, rf), z * e),
        (bracket(a, h, rf), np.conj(z) * e),
        (bracket(a, e, rf), AlgebraElement.zero(4)),
        (bracket(a_dag, e, rf), AlgebraElement.zero(4)),
        (bracket(h, e, rf), AlgebraElement.zero(4)),
    )
    return max((lhs - rhs).max_abs() for lhs, rhs in checks)


# =============================================================================
# eta_4
# =============================================================================

def eta4_structure() -> StructureConstants:
    table = np.zeros((4, 4, 4), dtype=complex)
    table[E4, E1, E2], table[E1, E4, E2] = 1.0, -1.0
    table[E4, E2, E3], table[E2, E4, E3] = 1.0, -1.0
    return StructureConstants(table=table, star=(E1, E2, E3, E4), names=ETA4_BASIS)


def eta4_isomorphism(c_real: float, b_real: float) -> BasisChange:
    """Basis change (p, q, H, E) -> (e1, e2, e3, e4) realising eta_4.

    b = 0:         (e4, e1, e2, e3) = (q, p, -H, -cE)
    c = 0:         (e4, e1, e2, e3) = (p, q, H, -bE)
    both nonzero:  alpha = c, beta = b, q_hat = alpha p + beta q, p_hat = p / beta,
                   d = b / beta, (e4, e1, e2, e3) = (p_hat, q_hat, H, -dE)
    """
    params = RealFormParams(c_real, b_real)
    c, b = params.c_real, params.b_real
    vectors = np.zeros((4, 4), dtype=complex)
    if b == 0:
        vectors[E4, Q] = 1.0
        vectors[E1, P] = 1.0
        vectors[E2, H] = -1.0
        vectors[E3, E] = -c
    elif c == 0:
        vectors[E4, P] = 1.0
        vectors[E1, Q] = 1.0
        vectors[E2, H] = 1.0
        vectors[E3, E] = -b
    else:
        alpha, beta = c, b
        d = b / beta
        vectors[E4, P] = 1.0 / beta
        vectors[E1, P], vectors[E1, Q] = alpha, beta
        vectors[E2, H] = 1.0
        vectors[E3, E] = -d
    log.debug("eta_4 basis change for (c, b) = (%g, %g), case %s", c, b, params.case)
    return BasisChange.from_vectors(vectors)


def pushforward(sc: StructureConstants, change: BasisChange) -> StructureConstants:
    """Structure constants of sc expressed in the new basis of `change`.

    The result carries the trivial star map.
    """
    new_basis = change.new_basis()
    dim = sc.dim
    table = np.zeros((dim, dim, dim), dtype=complex)
    for i in range(dim):
        for j in range(i + 1, dim):
            coeffs = change.matrix @ bracket(new_basis[i], new_basis[j], sc).coeffs
            table[i, j] = coeffs
            table[j, i] = -coeffs
    return StructureConstants(table=table, star=tuple(range(dim)), names=change.new_names)


def eta4_defect(z: complex) -> float:
    """Max coefficient distance between the pushed-forward real form and eta_4."""
    params = RealFormParams.from_z(z)
    change = eta4_isomorphism(params.c_real, params.b_real)
    pushed = pushforward(to_real_form(z), change)
    return float(np.max(np.abs(pushed.table - eta4_structure().table)))


def real_form_star_defect(z: complex) -> float:
    """Max coefficient error of p* = p, q* = q, H* = -H, E* = E."""
    rf = to_real_form(z)
    p, q, h_real, e = rf.basis()
    return max(
        (adjoint(p, rf) - p).max_abs(),
        (adjoint(q, rf) - q).max_abs(),
        (adjoint(h_real, rf) + h_real).max_abs(),
        (adjoint(e, rf) - e).max_abs(),
    )
