"""Truncated Fock spaces: ladder operators, exponential vectors and interior checks."""
from __future__ import annotations

import numpy as np
import pytest

from core import config
from core.errors import DimensionMismatchError, DomainError
from fock.space import (
    FockOperator,
    FockSpace,
    TwoModeSpace,
    annihilator,
    basis_vector,
    ccr_interior_defect,
    commutator,
    creator,
    derivative_vector,
    exp_matrix,
    exponential_vector,
    identity,
    inner,
    interior_projection,
    interior_residual,
    number_operator,
    power,
    truncation_tail_bound,
    vacuum,
)


def test_ladder_matrices():
    space = FockSpace(5)
    b = annihilator(space).matrix
    assert b[0, 1] == 1.0
    assert b[3, 4] == 2.0
    assert np.array_equal(creator(space).matrix, b.T)
    assert np.allclose((creator(space) @ annihilator(space)).matrix, number_operator(space).matrix)


def test_ccr_holds_below_cutoff(space):
    assert ccr_interior_defect(space) <= 1e-12
    ccr = commutator(annihilator(space), creator(space)).matrix
    # the top level carries the truncation artefact 1 - D
    assert ccr[-1, -1] == pytest.approx(1 - space.dim)


def test_exponential_vector_is_eigenvector(space):
    lam = 0.4 - 0.3j
    y = exponential_vector(lam, space)
    by = annihilator(space).apply(y)
    assert np.allclose(by.coords[:-1], lam * y.coords[:-1], atol=1e-14)


def test_exponential_vector_inner_product(space):
    lam, mu = 0.6 + 0.2j, -0.3 + 0.5j
    value = inner(exponential_vector(lam, space), exponential_vector(mu, space))
    assert value == pytest.approx(np.exp(np.conj(lam) * mu), abs=1e-14)
    assert truncation_tail_bound(lam, mu, space.dim) < 1e-40


def test_tail_bound_matches_direct_sum():
    x = 2.0
    direct = sum(x ** n / np.prod(np.arange(1, n + 1, dtype=float)) for n in range(6, 60))
    assert truncation_tail_bound(1.0, x, 6) == pytest.approx(direct, rel=1e-10)
    assert truncation_tail_bound(0, 1, 6) == 0.0


def test_derivative_vector_matches_finite_difference(space):
    lam, step = 0.3 + 0.1j, 1e-6
    numeric = (exponential_vector(lam + step, space).coords
               - exponential_vector(lam - step, space).coords) / (2 * step)
    assert np.allclose(derivative_vector(lam, space, 1).coords, numeric, atol=1e-8)
    assert np.array_equal(derivative_vector(lam, space, 0).coords, exponential_vector(lam, space).coords)


def test_first_derivative_is_creator_action(space):
    lam = -0.5 + 0.5j
    diff = derivative_vector(lam, space, 1) - creator(space).apply(exponential_vector(lam, space))
    assert diff.norm() <= 1e-14


def test_interior_residual_ignores_top_columns():
    space = FockSpace(8)
    matrix = np.zeros((8, 8))
    matrix[0, 7] = 1.0
    op = FockOperator(space, matrix)
    assert interior_residual(op, 1) == 0.0
    assert interior_residual(op, 0) == 1.0
    proj = interior_projection(space, 2).matrix
    assert np.array_equal(np.diag(proj), [1, 1, 1, 1, 1, 1, 0, 0])


def test_two_mode_interior_mask():
    space = TwoModeSpace(6)
    mask = space.interior_mask(2)
    assert mask.shape == (36,)
    assert mask.sum() == 16
    # index n1 * D2 + n2
    assert mask[3 * 6 + 3] and not mask[4 * 6 + 0] and not mask[0 * 6 + 5]


def test_exp_of_number_operator(space):
    t = 0.25
    expected = np.diag(np.exp(t * np.arange(space.dim)))
    assert np.allclose(exp_matrix(t * number_operator(space)).matrix, expected, rtol=1e-13)


def test_vectors_and_powers():
    space = FockSpace(6)
    b_dag = creator(space)
    e2 = power(b_dag, 2).apply(vacuum(space))
    assert e2.coords[2] == pytest.approx(np.sqrt(2))
    assert (basis_vector(space, 2) * np.sqrt(2) - e2).norm() <= 1e-15
    assert np.array_equal(power(b_dag, 0).matrix, identity(space).matrix)


# -----------------------------------------------------------------------------
# Quadrature identities below the cutoff
# -----------------------------------------------------------------------------

def quadratures(space):
    b, b_dag = annihilator(space), creator(space)
    return b - b_dag, b + b_dag


def test_k_b_commutator_is_twice_identity(space):
    k, b_plus = quadratures(space)
    p2 = interior_projection(space, 2)
    defect = commutator(k, b_plus) @ p2 - p2 * 2
    assert np.max(np.abs(defect.matrix)) <= 1e-12


def test_k_squared_b_commutator(space):
    k, b_plus = quadratures(space)
    p3 = interior_projection(space, 3)
    defect = commutator(k @ k, b_plus) @ p3 - (k @ p3) * 4
    assert np.max(np.abs(defect.matrix)) <= 1e-11


def test_annihilator_past_creator_cube(space):
    b, b_dag = annihilator(space), creator(space)
    cube = power(b_dag, 3)
    defect = b @ cube - cube @ b - power(b_dag, 2) * 3
    assert interior_residual(defect, 3) <= 1e-9


@pytest.mark.parametrize("t", [0, 1, -1, 0.5j, 0.6 + 0.8j])
def test_exp_creator_on_vacuum_is_exponential_vector(t):
    space = FockSpace(32)
    shifted = exp_matrix(creator(space) * t).apply(vacuum(space))
    assert (shifted - exponential_vector(t, space)).norm() <= 1e-10


@pytest.mark.parametrize("dim", [0, 3, 2.5])
def test_space_rejects_small_dims(dim):
    with pytest.raises(DomainError):
        FockSpace(dim)


def test_margin_validation(space):
    with pytest.raises(DomainError):
        space.interior_mask(space.dim)
    with pytest.raises(DomainError):
        space.interior_mask(-1)


def test_operators_on_different_spaces():
    with pytest.raises(DimensionMismatchError):
        annihilator(FockSpace(5)) + annihilator(FockSpace(6))


def test_operator_arithmetic_with_numpy_scalars():
    space = FockSpace(config.MIN_DIM)
    b = annihilator(space)
    scaled = np.float64(2.0) * b
    assert isinstance(scaled, FockOperator)
    assert np.array_equal(scaled.matrix, 2 * b.matrix)
