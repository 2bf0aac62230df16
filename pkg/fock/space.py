# fock/space.py
"""
Truncated bosonic Fock space.

Levels e_0..e_{D-1} in the orthonormal number basis. The annihilator has
b[n-1, n] = sqrt(n) and the creator is its transpose, so b_dag maps e_{D-1}
to 0 (hard cutoff). Polynomial identities in b, b_dag of ladder degree k
then hold exactly on levels 0..D-1-k, which is what interior_projection
and interior_residual restrict to.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.special import gammainc

from core.config import MIN_FOCK_DIM, MIN_TWO_MODE_DIM
from core.errors import DimensionMismatchError, DomainError
from core.utils import frozen_array, require_finite
from fock.expm import expm

log = logging.getLogger(__name__)


# =============================================================================
# Spaces
# =============================================================================

@dataclass(frozen=True)
class FockSpace:
    """One mode truncated to `dim` levels."""
    dim: int

    def __post_init__(self):
        if int(self.dim) != self.dim or self.dim < MIN_FOCK_DIM:
            raise DomainError(f"Fock space needs dim >= {MIN_FOCK_DIM}, got {self.dim}")

    @property
    def size(self) -> int:
        return self.dim

    def interior_mask(self, margin: int) -> np.ndarray:
        """Boolean mask of levels 0..D-1-margin."""
        if margin < 0 or margin >= self.dim:
            raise DomainError(f"margin must lie in 0..{self.dim - 1}, got {margin}")
        return np.arange(self.dim) <= self.dim - 1 - margin


@dataclass(frozen=True)
class TwoModeSpace:
    """Tensor product of two modes with `dim_per_mode` levels each.

    Index n1 * D2 + n2 holds e_{n1} (x) e_{n2}.
    """
    dim_per_mode: int

    def __post_init__(self):
        if int(self.dim_per_mode) != self.dim_per_mode or self.dim_per_mode < MIN_TWO_MODE_DIM:
            raise DomainError(f"two-mode space needs dim_per_mode >= {MIN_TWO_MODE_DIM}, "
                              f"got {self.dim_per_mode}")

    @property
    def mode(self) -> FockSpace:
        return FockSpace(self.dim_per_mode)

    @property
    def size(self) -> int:
        return self.dim_per_mode ** 2

    def interior_mask(self, margin: int) -> np.ndarray:
        """Both mode indices at most D2-1-margin."""
        single = self.mode.interior_mask(margin)
        return np.kron(single, single).astype(bool)


Space = Union[FockSpace, TwoModeSpace]


# =============================================================================
# Operators and vectors
# =============================================================================

@dataclass(frozen=True)
class FockOperator:
    """Dense complex matrix acting on a truncated space."""
    __array_ufunc__ = None  # numpy scalars defer to __rmul__

    space: Space
    matrix: np.ndarray

    def __post_init__(self):
        matrix = frozen_array(self.matrix)
        if matrix.shape != (self.space.size, self.space.size):
            raise DimensionMismatchError(
                f"operator shape {matrix.shape} does not match space size {self.space.size}")
        object.__setattr__(self, "matrix", matrix)

    def _check(self, other: "FockOperator") -> None:
        if other.space != self.space:
            raise DimensionMismatchError(f"operators on {self.space} and {other.space}")

    def __add__(self, other: "FockOperator") -> "FockOperator":
        self._check(other)
        return FockOperator(self.space, self.matrix + other.matrix)

    def __sub__(self, other: "FockOperator") -> "FockOperator":
        self._check(other)
        return FockOperator(self.space, self.matrix - other.matrix)

    def __neg__(self) -> "FockOperator":
        return FockOperator(self.space, -self.matrix)

    def __mul__(self, scalar: complex) -> "FockOperator":
        return FockOperator(self.space, complex(scalar) * self.matrix)

    __rmul__ = __mul__

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        self._check(other)
        return FockOperator(self.space, self.matrix @ other.matrix)

    def dagger(self) -> "FockOperator":
        return FockOperator(self.space, self.matrix.conj().T)

    def apply(self, vector: "FockVector") -> "FockVector":
        if vector.space != self.space:
            raise DimensionMismatchError(f"vector on {vector.space}, operator on {self.space}")
        return FockVector(self.space, self.matrix @ vector.coords)


@dataclass(frozen=True)
class FockVector:
    __array_ufunc__ = None

    space: Space
    coords: np.ndarray

    def __post_init__(self):
        coords = frozen_array(self.coords).reshape(-1)
        if coords.shape[0] != self.space.size:
            raise DimensionMismatchError(
                f"vector length {coords.shape[0]} does not match space size {self.space.size}")
        require_finite(coords, "Fock vector")
        object.__setattr__(self, "coords", coords)

    def __add__(self, other: "FockVector") -> "FockVector":
        return FockVector(self.space, self.coords + other.coords)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return FockVector(self.space, self.coords - other.coords)

    def __mul__(self, scalar: complex) -> "FockVector":
        return FockVector(self.space, complex(scalar) * self.coords)

    __rmul__ = __mul__

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))


# =============================================================================
# Ladder operators
# =============================================================================

def annihilator(space: FockSpace) -> FockOperator:
    """b with b[n-1, n] = sqrt(n)."""
    return FockOperator(space, np.diagflat(np.sqrt(np.arange(1, space.dim)), 1))


def creator(space: FockSpace) -> FockOperator:
    """b_dag, the transpose of the annihilator."""
    return FockOperator(space, annihilator(space).matrix.T)


def number_operator(space: FockSpace) -> FockOperator:
    return FockOperator(space, np.diagflat(np.arange(space.dim, dtype=float)))


def identity(space: Space) -> FockOperator:
    return FockOperator(space, np.eye(space.size))


def ccr_interior_defect(space: FockSpace) -> float:
    """Frobenius norm of ([b, b_dag] - I) on levels 0..D-2."""
    b = annihilator(space)
    ccr = commutator(b, b.dagger()) - identity(space)
    return interior_residual(ccr, 1)


# =============================================================================
# Vectors
# =============================================================================

def vacuum(space: Space) -> FockVector:
    coords = np.zeros(space.size, dtype=complex)
    coords[0] = 1.0
    return FockVector(space, coords)


def basis_vector(space: Space, level: int) -> FockVector:
    if not 0 <= level < space.size:
        raise DomainError(f"level {level} outside 0..{space.size - 1}")
    coords = np.zeros(space.size, dtype=complex)
    coords[level] = 1.0
    return FockVector(space, coords)


def exponential_vector(lam: complex, space: FockSpace) -> FockVector:
    """y(lam) with coordinates lam**n / sqrt(n!), so b y(lam) = lam y(lam) below the cutoff."""
    coords = np.empty(space.dim, dtype=complex)
    coords[0] = 1.0
    for n in range(1, space.dim):
        coords[n] = coords[n - 1] * lam / np.sqrt(n)
    return FockVector(space, coords)


def derivative_vector(lam: complex, space: FockSpace, order: int = 1) -> FockVector:
    """d^order/d eps^order of y(lam + eps) at eps = 0, coordinatewise.

    The n-th coordinate of the first derivative is n lam**(n-1) / sqrt(n!)
    = sqrt(n) y_{n-1}, which is also (b_dag y)_n.
    """
    if order < 0:
        raise DomainError(f"derivative order must be >= 0, got {order}")
    coords = exponential_vector(lam, space).coords.copy()
    shift = np.sqrt(np.arange(space.dim))
    for _ in range(order):
        shifted = np.zeros_like(coords)
        shifted[1:] = shift[1:] * coords[:-1]
        coords = shifted
    return FockVector(space, coords)


def inner(u: FockVector, v: FockVector) -> complex:
    """<u, v>, conjugate-linear in u."""
    if u.space != v.space:
        raise DimensionMismatchError(f"vectors on {u.space} and {v.space}")
    return complex(np.vdot(u.coords, v.coords))


def truncation_tail_bound(lam: complex, mu: complex, dim: int) -> float:
    """sum_{n >= dim} |lam mu|**n / n!, the truncation error of <y(lam), y(mu)>."""
    x = abs(lam * mu)
    if x == 0:
        return 0.0
    # sum_{n<D} x^n/n! = e^x Q(D, x), so the tail is e^x P(D, x)
    return float(np.exp(x) * gammainc(dim, x))


# =============================================================================
# Exponential, commutators, interior checks
# =============================================================================

def exp_matrix(op: FockOperator) -> FockOperator:
    require_finite(op.matrix, "operator")
    return FockOperator(op.space, expm(op.matrix))


def commutator(x: FockOperator, y: FockOperator) -> FockOperator:
    return x @ y - y @ x


def interior_projection(space: Space, margin: int) -> FockOperator:
    """Orthogonal projector onto the interior levels for the given margin."""
    return FockOperator(space, np.diag(space.interior_mask(margin).astype(float)))


def interior_residual(op: FockOperator, margin: int) -> float:
    """||op P||_F with P = interior_projection(space, margin)."""
    mask = op.space.interior_mask(margin)
    return float(np.linalg.norm(op.matrix[:, mask]))


def interior_vector_residual(vector: FockVector, margin: int) -> float:
    """Norm of the vector restricted to the interior levels."""
    mask = vector.space.interior_mask(margin)
    return float(np.linalg.norm(vector.coords[mask]))


def power(op: FockOperator, exponent: int) -> FockOperator:
    if exponent < 0:
        raise DomainError("negative operator powers are not supported")
    return FockOperator(op.space, np.linalg.matrix_power(op.matrix, exponent))
