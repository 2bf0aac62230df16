# group/oracle.py
"""
Operator-level checks of the group law and the reordering identities.

Group words are built from the boson representation matrices and the Padé
exponential; only the low block (levels 0..LOW_LEVELS-1) is compared, where
the truncated products agree with the untruncated operators.
"""
from __future__ import annotations

import logging
from typing import List, Sequence

import numpy as np

from algebra.lie_core import AlgebraElement, ceheis_structure
from core.config import LOW_LEVELS, OPERATOR_ORACLE_TOL
from core.errors import RepresentationParamsError
from fock.space import FockOperator, FockSpace, basis_vector, exp_matrix, vacuum
from group.law import (
    GroupElement,
    OrderedWord,
    WeylCase,
    compose,
    reorder_a_adag,
    reorder_weyl,
    zassenhaus_special,
)
from representations.boson import RepresentationParams, RepresentedAlgebra, build_representation

log = logging.getLogger(__name__)


def _check_z(rep_params: RepresentationParams, z: complex) -> None:
    if rep_params.z != complex(z):
        raise RepresentationParamsError(f"representation built for z={rep_params.z}, checked against z={z}")


def low_block_distance(x: FockOperator, y: FockOperator, levels: int = LOW_LEVELS) -> float:
    """max |x_ij - y_ij| over i, j < levels."""
    return float(np.max(np.abs(x.matrix[:levels, :levels] - y.matrix[:levels, :levels])))


def element_operator(x: AlgebraElement, rep: RepresentedAlgebra) -> FockOperator:
    """sum_k x_k A_k in the representation."""
    ops = rep.operators()
    out = ops[0] * 0
    for coeff, op in zip(x.coeffs, ops):
        if coeff != 0:
            out = out + coeff * op
    return out


def exp_product(rep: RepresentedAlgebra, factors: Sequence[tuple]) -> FockOperator:
    """Product of exp(c A) over (c, A) pairs, left to right."""
    out = rep.e_op
    for coeff, op in factors:
        out = out @ exp_matrix(coeff * op)
    return out


def group_word(g: GroupElement, rep: RepresentedAlgebra) -> FockOperator:
    """exp(u a_dag) exp(v h) exp(w a) exp(y)."""
    word = exp_product(rep, [(g.u, rep.a_dag_op), (g.v, rep.h_op), (g.w, rep.a_op)])
    return np.exp(g.y) * word


def group_oracle_check(g1: GroupElement, g2: GroupElement, z: complex,
                       rep_params: RepresentationParams, space: FockSpace) -> float:
    """Low-block distance between word(g1) word(g2) and word(compose(g1, g2))."""
    _check_z(rep_params, z)
    rep = build_representation(rep_params, space)
    product = group_word(g1, rep) @ group_word(g2, rep)
    composed = group_word(compose(g1, g2, z), rep)
    residual = low_block_distance(product, composed)
    if residual > OPERATOR_ORACLE_TOL:
        log.warning("group law oracle residual %.3g for %s * %s", residual, g1, g2)
    return residual


def reorder_a_adag_residual(lam: complex, mu: complex, rep_params: RepresentationParams,
                            space: FockSpace) -> float:
    """|| (exp(lam a) exp(mu a_dag) - ordered word) Phi ||."""
    rep = build_representation(rep_params, space)
    word: OrderedWord = reorder_a_adag(lam, mu, rep_params.z)
    lhs = exp_product(rep, [(lam, rep.a_op), (mu, rep.a_dag_op)])
    rhs = np.exp(word.e_exp) * exp_product(
        rep, [(word.a_dag_exp, rep.a_dag_op), (word.a_exp, rep.a_op), (word.h_exp, rep.h_op)])
    phi = vacuum(space)
    return float(np.max(np.abs((lhs.apply(phi) - rhs.apply(phi)).coords[:LOW_LEVELS])))


def reorder_weyl_residual(lam: complex, mu: complex, which: WeylCase,
                          rep_params: RepresentationParams, space: FockSpace) -> float:
    """Worst low-level error on Phi and e_1 of the swap identity for `which`."""
    rep = build_representation(rep_params, space)
    phase = np.exp(reorder_weyl(lam, mu, rep_params.z, which))
    if WeylCase(which) is WeylCase.A_H:
        lhs = exp_product(rep, [(lam, rep.a_op), (mu, rep.h_op)])
        rhs = phase * exp_product(rep, [(mu, rep.h_op), (lam, rep.a_op)])
    else:
        lhs = exp_product(rep, [(mu, rep.h_op), (lam, rep.a_dag_op)])
        rhs = phase * exp_product(rep, [(lam, rep.a_dag_op), (mu, rep.h_op)])
    worst = 0.0
    for vec in (vacuum(space), basis_vector(space, 1)):
        diff = lhs.apply(vec) - rhs.apply(vec)
        worst = max(worst, float(np.max(np.abs(diff.coords[:LOW_LEVELS]))))
    return worst


def zassenhaus_residual(x: AlgebraElement, y: AlgebraElement,
                        rep_params: RepresentationParams, space: FockSpace) -> float:
    """|| (exp(X + Y) - exp(X) exp(Y) exp(C2) exp(C3)) Phi || on the low levels."""
    sc = ceheis_structure(rep_params.z)
    rep = build_representation(rep_params, space)
    c2, c3 = zassenhaus_special(x, y, sc)
    lhs = exp_matrix(element_operator(x + y, rep))
    rhs = exp_product(rep, [(1.0, element_operator(el, rep)) for el in (x, y, c2, c3)])
    phi = vacuum(space)
    return float(np.max(np.abs((lhs.apply(phi) - rhs.apply(phi)).coords[:LOW_LEVELS])))


def derivative_identity_residuals(mu: complex, lam: complex, rep_params: RepresentationParams,
                                  space: FockSpace) -> List[float]:
    """Low-block errors of the first-order forms of the reordering identities:

        a exp(mu a_dag) = exp(mu a_dag) (a + mu h + mu^2 z / 2)
        a exp(mu h)     = exp(mu h) (a + mu conj(z))
        h exp(lam a_dag) = exp(lam a_dag) (h + lam z)
    """
    rep = build_representation(rep_params, space)
    z = rep_params.z
    e_op = rep.e_op
    exp_adag_mu = exp_matrix(mu * rep.a_dag_op)
    exp_h = exp_matrix(mu * rep.h_op)
    exp_adag_lam = exp_matrix(lam * rep.a_dag_op)
    pairs = (
        (rep.a_op @ exp_adag_mu,
         exp_adag_mu @ (rep.a_op + mu * rep.h_op + (mu ** 2 * z / 2) * e_op)),
        (rep.a_op @ exp_h, exp_h @ (rep.a_op + (mu * np.conj(z)) * e_op)),
        (rep.h_op @ exp_adag_lam, exp_adag_lam @ (rep.h_op + (lam * z) * e_op)),
    )
    return [low_block_distance(lhs, rhs) for lhs, rhs in pairs]
