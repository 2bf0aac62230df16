# algebra/lie_core.py
"""
Finite-dimensional *-Lie algebras given by structure constants.

An algebra is a table c[i, j, k] with [l_i, l_j] = sum_k c[i, j, k] l_k plus a
star map l_i* = phase_i * l_{star_i}, extended conjugate-linearly. The
centrally extended Heisenberg algebra CEHeis is the instance built by
ceheis_structure(z), basis order (a, a_dag, h, E).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import null_space

from core.config import CEHEIS_BASIS, COEFF_TOL, PIVOT_TOL
from core.errors import DimensionMismatchError, DomainError, require_nonzero, require_same_dim
from core.utils import frozen_array

log = logging.getLogger(__name__)


# =============================================================================
# Value types
# =============================================================================

@dataclass(frozen=True)
class AlgebraElement:
    """Complex coefficient vector over the ordered basis of an algebra."""
    __array_ufunc__ = None  # numpy scalars defer to __rmul__

    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = frozen_array(self.coeffs).reshape(-1)
        if not np.all(np.isfinite(coeffs)):
            raise DomainError("algebra element has non-finite coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def basis(cls, index: int, dim: int) -> "AlgebraElement":
        if not 0 <= index < dim:
            raise DomainError(f"basis index {index} outside 0..{dim - 1}")
        coeffs = np.zeros(dim, dtype=complex)
        coeffs[index] = 1.0
        return cls(coeffs)

    @classmethod
    def zero(cls, dim: int) -> "AlgebraElement":
        return cls(np.zeros(dim, dtype=complex))

    @property
    def dim(self) -> int:
        return self.coeffs.shape[0]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        require_same_dim(self.dim, other.dim, "algebra element dimension")
        return AlgebraElement(self.coeffs + other.coeffs)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        require_same_dim(self.dim, other.dim, "algebra element dimension")
        return AlgebraElement(self.coeffs - other.coeffs)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(-self.coeffs)

    def __mul__(self, scalar: complex) -> "AlgebraElement":
        return AlgebraElement(complex(scalar) * self.coeffs)

    __rmul__ = __mul__

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if self.dim else 0.0

    def is_zero(self, tol: float = COEFF_TOL) -> bool:
        return self.max_abs() <= tol


@dataclass(frozen=True)
class StructureConstants:
    """Bracket table and star map of a *-Lie algebra.

    table[i, j] holds the coefficients of [l_i, l_j]; star[i] is the index of
    l_i* and star_phase[i] the scalar in front of it (H* = -H in the real form).
    """
    table: np.ndarray
    star: Tuple[int, ...]
    names: Tuple[str, ...]
    star_phase: Tuple[complex, ...] = field(default=())

    def __post_init__(self):
        table = frozen_array(self.table)
        dim = table.shape[0]
        if table.shape != (dim, dim, dim) or dim == 0:
            raise DomainError(f"structure table must be (n, n, n), got {table.shape}")
        if not np.array_equal(table, -np.swapaxes(table, 0, 1)):
            raise DomainError("structure table is not antisymmetric")
        star = tuple(int(i) for i in self.star)
        phase = tuple(complex(p) for p in self.star_phase) or (1.0 + 0j,) * dim
        if len(star) != dim or len(self.names) != dim or len(phase) != dim:
            raise DimensionMismatchError("star map, names and table disagree on the dimension")
        if sorted(star) != list(range(dim)):
            raise DomainError(f"star map {star} is not a permutation")
        for i in range(dim):
            # l_i** = phase_i * conj(phase_{star_i}) * l_i must be l_i
            if star[star[i]] != i or abs(phase[i] * np.conj(phase[star[i]]) - 1.0) > COEFF_TOL:
                raise DomainError("star map is not an involution")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "star", star)
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "star_phase", phase)

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    def element(self, name: str) -> AlgebraElement:
        """Basis element by display name, e.g. sc.element("a_dag")."""
        try:
            return AlgebraElement.basis(self.names.index(name), self.dim)
        except ValueError:
            raise DomainError(f"no basis element named {name!r} in {self.names}") from None

    def basis(self) -> List[AlgebraElement]:
        return [AlgebraElement.basis(i, self.dim) for i in range(self.dim)]

    def entry(self, i: int, j: int) -> AlgebraElement:
        """The table entry [l_i, l_j]."""
        return AlgebraElement(self.table[i, j])

    def ad(self, x: AlgebraElement) -> np.ndarray:
        """Matrix of ad_x in the basis: column j holds [x, l_j]."""
        require_same_dim(x.dim, self.dim, "algebra element dimension")
        return np.einsum("i,ijk->kj", x.coeffs, self.table)

    def format_element(self, x: AlgebraElement, tol: float = COEFF_TOL) -> str:
        """Human-readable form like '(1+1j)*a + 2*E'."""
        terms = []
        for coeff, name in zip(x.coeffs, self.names):
            if abs(coeff) <= tol:
                continue
            c = coeff.real if abs(coeff.imag) <= tol else coeff
            terms.append(f"{c:g}*{name}")
        return " + ".join(terms) if terms else "0"


# =============================================================================
# Construction
# =============================================================================

def ceheis_structure(z: complex) -> StructureConstants:
    """CEHeis for z != 0: [a, a_dag] = h, [h, a_dag] = z E, [a, h] = conj(z) E.

    E is central, a* = a_dag, h* = h, E* = E.
    """
    z = complex(z)
    require_nonzero(z)
    a, a_dag, h, e = range(4)
    table = np.zeros((4, 4, 4), dtype=complex)
    table[a, a_dag, h] = 1.0
    table[a_dag, a, h] = -1.0
    table[h, a_dag, e] = z
    table[a_dag, h, e] = -z
    table[a, h, e] = np.conj(z)
    table[h, a, e] = -np.conj(z)
    return StructureConstants(table=table, star=(a_dag, a, h, e), names=CEHEIS_BASIS)


def abelian_structure(dim: int, names: Sequence[str] | None = None) -> StructureConstants:
    names = tuple(names) if names is not None else tuple(f"l{i + 1}" for i in range(dim))
    return StructureConstants(
        table=np.zeros((dim, dim, dim), dtype=complex),
        star=tuple(range(dim)),
        names=names,
    )


def perturbed(sc: StructureConstants, i: int, j: int, k: int, delta: complex) -> StructureConstants:
    """Copy of sc with c[i, j, k] shifted by delta (and c[j, i, k] by -delta)."""
    if i == j:
        raise DomainError("cannot perturb a diagonal entry: [l_i, l_i] = 0 by antisymmetry")
    for index in (i, j, k):
        if not 0 <= index < sc.dim:
            raise DomainError(f"index {index} outside 0..{sc.dim - 1}")
    table = np.array(sc.table, dtype=complex)
    table[i, j, k] += delta
    table[j, i, k] -= delta
    log.info("perturbed structure constant (%d, %d, %d) by %s", i, j, k, delta)
    return StructureConstants(table=table, star=sc.star, names=sc.names, star_phase=sc.star_phase)


# =============================================================================
# Operations
# =============================================================================

def bracket(x: AlgebraElement, y: AlgebraElement, sc: StructureConstants) -> AlgebraElement:
    """Bilinear extension of the table."""
    require_same_dim(x.dim, sc.dim, "algebra element dimension")
    require_same_dim(y.dim, sc.dim, "algebra element dimension")
    return AlgebraElement(np.einsum("i,j,ijk->k", x.coeffs, y.coeffs, sc.table))


def jacobi_defect(x: AlgebraElement, y: AlgebraElement, w: AlgebraElement,
                  sc: StructureConstants) -> AlgebraElement:
    """[x,[y,w]] + [y,[w,x]] + [w,[x,y]]"""
    return (bracket(x, bracket(y, w, sc), sc)
            + bracket(y, bracket(w, x, sc), sc)
            + bracket(w, bracket(x, y, sc), sc))


def adjoint(x: AlgebraElement, sc: StructureConstants) -> AlgebraElement:
    """Conjugate-linear star: (sum x_i l_i)* = sum conj(x_i) phase_i l_{star_i}."""
    require_same_dim(x.dim, sc.dim, "algebra element dimension")
    out = np.zeros(sc.dim, dtype=complex)
    for i, coeff in enumerate(x.coeffs):
        out[sc.star[i]] += sc.star_phase[i] * np.conj(coeff)
    return AlgebraElement(out)


def row_echelon(vectors: Sequence[np.ndarray], tol: float = PIVOT_TOL) -> np.ndarray:
    """Reduced row echelon form of the stacked vectors, zero rows dropped.

    Gauss-Jordan with partial pivoting; entries below tol are treated as zero.
    """
    rows = [np.asarray(v, dtype=complex).reshape(-1) for v in vectors]
    if not rows:
        return np.zeros((0, 0), dtype=complex)
    m = np.array(rows, dtype=complex)
    n_rows, n_cols = m.shape
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row >= n_rows:
            break
        best = pivot_row + int(np.argmax(np.abs(m[pivot_row:, col])))
        if abs(m[best, col]) <= tol:
            m[pivot_row:, col] = 0.0
            continue
        m[[pivot_row, best]] = m[[best, pivot_row]]
        m[pivot_row] /= m[pivot_row, col]
        for r in range(n_rows):
            if r != pivot_row:
                m[r] -= m[r, col] * m[pivot_row]
        pivot_row += 1
    m = m[:pivot_row]
    m[np.abs(m) <= tol] = 0.0
    return m


def rank(vectors: Sequence[AlgebraElement | np.ndarray], tol: float = PIVOT_TOL) -> int:
    coeffs = [v.coeffs if isinstance(v, AlgebraElement) else v for v in vectors]
    return row_echelon(coeffs, tol).shape[0]


def is_linearly_independent(vectors: Sequence[AlgebraElement], tol: float = PIVOT_TOL) -> bool:
    if not vectors:
        return True
    return rank(vectors, tol) == len(vectors)


def derived_series(sc: StructureConstants, tol: float = PIVOT_TOL) -> List[List[AlgebraElement]]:
    """g, [g,g], [[g,g],[g,g]], ... as echelon bases, until zero or stable."""
    current = [AlgebraElement(row) for row in np.eye(sc.dim, dtype=complex)]
    series = [current]
    while current:
        products = [bracket(u, v, sc).coeffs
                    for idx, u in enumerate(current) for v in current[idx + 1:]]
        reduced = row_echelon(products, tol) if products else np.zeros((0, sc.dim))
        nxt = [AlgebraElement(row) for row in reduced]
        if len(nxt) == len(current):
            # stabilised without reaching zero: not solvable
            break
        series.append(nxt)
        current = nxt
    log.debug("derived series dimensions %s", [len(s) for s in series])
    return series


def is_solvable(sc: StructureConstants) -> bool:
    return len(derived_series(sc)[-1]) == 0


def center(sc: StructureConstants, tol: float = PIVOT_TOL) -> List[AlgebraElement]:
    """Echelon basis of {x : [x, l_j] = 0 for all j}."""
    # rows indexed by (j, k), columns by i
    system = np.transpose(sc.table, (1, 2, 0)).reshape(sc.dim * sc.dim, sc.dim)
    kernel = null_space(system, rcond=tol)
    if kernel.shape[1] == 0:
        return []
    return [AlgebraElement(row) for row in row_echelon(list(kernel.T), tol)]


def in_span(x: AlgebraElement, basis: Sequence[AlgebraElement], tol: float = PIVOT_TOL) -> bool:
    return rank(list(basis) + [x], tol) == rank(basis, tol)


def triple_brackets_central(sc: StructureConstants, tol: float = PIVOT_TOL) -> bool:
    """True when every [l_i, [l_j, l_k]] lies in the center."""
    z_basis = center(sc, tol)
    for x in sc.basis():
        for y in sc.basis():
            for w in sc.basis():
                triple = bracket(x, bracket(y, w, sc), sc)
                if not triple.is_zero(tol) and not in_span(triple, z_basis, tol):
                    return False
    return True


def basis_jacobi_max(sc: StructureConstants) -> float:
    """Largest Jacobi defect coefficient over all basis triples."""
    worst = 0.0
    for x in sc.basis():
        for y in sc.basis():
            for w in sc.basis():
                worst = max(worst, jacobi_defect(x, y, w, sc).max_abs())
    return worst


def random_jacobi_max(sc: StructureConstants, count: int, rng: np.random.Generator) -> float:
    """Largest Jacobi defect coefficient over random complex triples with entries in the unit square."""
    draws = rng.uniform(-1, 1, (count, 3, sc.dim)) + 1j * rng.uniform(-1, 1, (count, 3, sc.dim))
    worst = 0.0
    for x, y, w in draws:
        defect = jacobi_defect(AlgebraElement(x), AlgebraElement(y), AlgebraElement(w), sc)
        worst = max(worst, defect.max_abs())
    return worst


def star_compatibility_max(sc: StructureConstants) -> float:
    """max |(x,y) -> [x,y]* - [y*, x*]| over basis pairs."""
    worst = 0.0
    for x in sc.basis():
        for y in sc.basis():
            lhs = adjoint(bracket(x, y, sc), sc)
            rhs = bracket(adjoint(y, sc), adjoint(x, sc), sc)
            worst = max(worst, (lhs - rhs).max_abs())
    return worst
