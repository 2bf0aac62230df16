# fock/expm.py
"""
Dense matrix exponential by scaling and squaring with Padé approximants.

Orders 3, 5, 7, 9 are used directly when the 1-norm is below the matching
threshold; otherwise the matrix is scaled by 2**-s into the order-13 range
and the result squared s times.
"""
from __future__ import annotations

from typing import Dict, Tuple

import numpy as np
from scipy.linalg import solve

from core.errors import DomainError

# Backward-error thresholds on ||A||_1 for each Padé order (double precision)
PADE_THETA: Dict[int, float] = {
    3: 1.495585217958292e-002,
    5: 2.539398330063230e-001,
    7: 9.504178996162932e-001,
    9: 2.097847961257068e+000,
    13: 5.371920351148152e+000,
}

PADE_COEFFS: Dict[int, Tuple[float, ...]] = {
    3: (120., 60., 12., 1.),
    5: (30240., 15120., 3360., 420., 30., 1.),
    7: (17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.),
    9: (17643225600., 8821612800., 2075673600., 302702400., 30270240.,
        2162160., 110880., 3960., 90., 1.),
    13: (64764752532480000., 32382376266240000., 7771770303897600.,
         1187353796428800., 129060195264000., 10559470521600.,
         670442572800., 33522128640., 1323241920., 40840800., 960960.,
         16380., 182., 1.),
}


def _pade_uv(a: np.ndarray, order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Odd (U) and even (V) parts of the Padé numerator, orders 3..9."""
    b = PADE_COEFFS[order]
    ident = np.eye(a.shape[0], dtype=a.dtype)
    a2 = a @ a
    powers = [ident, a2]
    for _ in range(2, order // 2 + 1):
        powers.append(powers[-1] @ a2)
    u_inner = sum(b[2 * k + 1] * powers[k] for k in range(len(powers)))
    v = sum(b[2 * k] * powers[k] for k in range(len(powers)))
    return a @ u_inner, v


def _pade13_uv(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    b = PADE_COEFFS[13]
    ident = np.eye(a.shape[0], dtype=a.dtype)
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a4 @ a2
    u2 = a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
    u = a @ (u2 + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v2 = a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
    v = v2 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident
    return u, v


def expm(a: np.ndarray) -> np.ndarray:
    """Matrix exponential of a square array.

    Args:
        a: (n, n) real or complex array with finite entries

    Returns:
        (n, n) complex array exp(a)
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("cannot exponentiate a matrix with non-finite entries")
    if a.shape[0] == 0:
        return a.copy()

    norm1 = float(np.linalg.norm(a, 1))
    for order in (3, 5, 7, 9):
        if norm1 <= PADE_THETA[order]:
            u, v = _pade_uv(a, order)
            return solve(v - u, v + u)

    squarings = max(0, int(np.ceil(np.log2(norm1 / PADE_THETA[13]))))
    scaled = a / 2.0 ** squarings
    u, v = _pade13_uv(scaled)
    result = solve(v - u, v + u)
    for _ in range(squarings):
        result = result @ result
    return result
