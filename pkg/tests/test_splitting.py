"""Splitting formula, its ODEs and the vacuum MGF of a + a_dag + h."""
from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core import config
from core.errors import DomainError
from fock.space import FockSpace
from probability.splitting import (
    QuadraticExponentParams,
    closed_form_w,
    gamma_factor,
    gamma_factor_defect,
    gaussian_exponent,
    gaussian_log_defect,
    gaussian_variance,
    is_gaussian,
    mgf_closed_form,
    mgf_moments,
    mgf_oracle,
    mgf_oracle_complex,
    mgf_params,
    mgf_table,
    observable_defect,
    ode_residuals,
    oracle_amplification,
    oracle_moments,
    oracle_reliable,
    riccati_canonical,
    splitting_grid,
    squeeze_tail,
    verify_splitting,
)
from representations.boson import RepresentationParams
from tests.strategies import small_floats, unit_complex

GAUSSIAN = RepresentationParams.auto(2 + 4j, 0.5, 8.0 ** 0.5)


# -----------------------------------------------------------------------------
# Closed forms
# -----------------------------------------------------------------------------

def test_coefficients_vanish_at_zero():
    coeffs = closed_form_w(QuadraticExponentParams(0.7, 1 - 1j, 2j), 0.0)
    assert (coeffs.w1, coeffs.w2, coeffs.w3) == (0, 0, 0)


@pytest.mark.parametrize("s", [-0.4, 0.1, 0.3])
def test_linear_case(s):
    M, N = 1 + 0.5j, -0.3 + 1j
    coeffs = closed_form_w(QuadraticExponentParams(0.0, M, N), s)
    assert coeffs.w1 == 0
    assert coeffs.w2 == pytest.approx(N * s, abs=1e-15)
    assert coeffs.w3 == pytest.approx(M * N * s ** 2 / 2, abs=1e-15)


def test_worked_coefficients():
    coeffs = closed_form_w(QuadraticExponentParams(1.0, 0, 0), 0.5)
    assert coeffs.w1 == pytest.approx(0.25)
    assert coeffs.w2 == 0
    assert coeffs.w3 == pytest.approx(-0.5 * np.log(2))


def test_domain_violation():
    params = QuadraticExponentParams(-1.0, 1, 1)
    with pytest.raises(DomainError):
        closed_form_w(params, 0.5)
    with pytest.raises(DomainError):
        mgf_closed_form(params, 0.75)
    with pytest.raises(DomainError):
        ode_residuals(params, 0.5 - 1e-6, 1e-5)


def test_non_finite_params_rejected():
    with pytest.raises(DomainError):
        QuadraticExponentParams(np.inf, 0, 0)


# -----------------------------------------------------------------------------
# ODEs and the Riccati form
# -----------------------------------------------------------------------------

def test_ode_residuals_example():
    assert max(ode_residuals(QuadraticExponentParams(1.0, 1, 1j), 0.3, 1e-5)) <= config.ODE_TOL


@pytest.mark.parametrize("s", [-0.3, 0.0, 0.25])
def test_ode_residuals_linear_case(s):
    assert max(ode_residuals(QuadraticExponentParams(0.0, 1 - 1j, 0.5j), s)) <= 1e-10


@given(L=small_floats, M=unit_complex, N=unit_complex,
       s=st.floats(min_value=-0.4, max_value=0.4))
@settings(max_examples=100, deadline=None)
def test_ode_residuals_property(L, M, N, s):
    params = QuadraticExponentParams(L, M, N)
    if params.domain(s) < config.MIN_DOMAIN_MARGIN:
        return
    assert max(ode_residuals(params, s)) <= config.ODE_TOL


@pytest.mark.parametrize("L", [-0.5, 0.5, 1.0])
@pytest.mark.parametrize("s", [-0.2, 0.1, 0.4])
def test_riccati_canonical_form(L, s):
    form = riccati_canonical(QuadraticExponentParams(L, 1, 1), s)
    assert form.residual() <= config.COEFF_TOL
    assert form.delta_sq == 0
    assert form.V * L == pytest.approx(closed_form_w(QuadraticExponentParams(L, 1, 1), s).w1.real)


def test_riccati_needs_nonzero_l():
    with pytest.raises(DomainError):
        riccati_canonical(QuadraticExponentParams(0.0, 1, 1), 0.1)


# -----------------------------------------------------------------------------
# Splitting formula against the matrix oracle
# -----------------------------------------------------------------------------

def test_splitting_at_zero(splitting_space):
    assert verify_splitting(QuadraticExponentParams(0.5, 1, 1), 0.0, splitting_space) == 0.0


@pytest.mark.parametrize("L, M, N, s", [
    (0.5, 1, 1 - 1j, 0.2),
    (-0.5, 0.5, 0.5, 0.1),
])
def test_splitting_examples(L, M, N, s, splitting_space):
    params = QuadraticExponentParams(L, M, N)
    assert oracle_reliable(params, s, splitting_space.dim)
    assert verify_splitting(params, s, splitting_space) <= config.SPLITTING_TOL


def test_splitting_grid(splitting_space):
    points = list(splitting_grid(splitting_space.dim))
    assert {(p.L, s) for p, s in points} >= {(-0.5, 0.1), (0.0, 0.4), (0.5, 0.2), (1.0, 0.1)}
    assert len(points) == 117
    kept = {(p.L, s) for p, s in points}
    assert {(-0.5, 0.2), (0.5, -0.2)} <= kept
    every = {(L, s) for L in config.SPLITTING_L_GRID for s in config.SPLITTING_S_GRID}
    # two blocks amplify roundoff by e^38.4, (1, 0.4) leaves a 3.5e-9 squeezing tail
    assert every - kept == {(-0.5, 0.4), (1.0, -0.2), (1.0, 0.4)}
    worst = max(verify_splitting(params, s, splitting_space) for params, s in points)
    assert worst <= config.SPLITTING_TOL


def test_oracle_regime():
    params = QuadraticExponentParams(-0.5, 0.5, 0.5)
    # 2Ls + 1 = 0.6 is in the domain but roundoff grows like e^(4 D |sL|)
    assert oracle_amplification(params, 0.4, 48) == pytest.approx(38.4)
    assert not oracle_reliable(params, 0.4, 48)
    assert oracle_amplification(params, -0.4, 48) == 0.0
    assert squeeze_tail(QuadraticExponentParams(1.0, 0, 0), 0.4, 48) > config.MAX_SQUEEZE_TAIL


# -----------------------------------------------------------------------------
# MGF parameters and the closed form
# -----------------------------------------------------------------------------

def test_mgf_params_re_nonzero():
    params = mgf_params(RepresentationParams.auto(2 + 4j, 0.0, 2.0))
    assert params.L == -1.0
    assert params.M == -(2 + 2j)
    assert params.N == -(2 - 2j)


def test_mgf_params_re_zero():
    params = mgf_params(RepresentationParams.auto(4j, 0.0, 1.0))
    assert params.L == 0.0
    assert params.M == 2 + 2j
    assert params.N == 2 - 2j


@pytest.mark.parametrize("z, rho, r", config.MGF_PARAM_GRID + ((2 + 4j, 0.0, 2.0), (4j, 0.7, 1.0)))
def test_observable_decomposition(z, rho, r, space):
    assert observable_defect(RepresentationParams.auto(z, rho, r), space) <= config.CECCR_TOL


def test_mgf_at_zero():
    assert mgf_closed_form(QuadraticExponentParams(0.3, 1j, 2), 0.0) == 1
    assert mgf_oracle(GAUSSIAN, 0.0, FockSpace(config.MIN_DIM)) == 1.0


def test_gaussian_case():
    assert is_gaussian(GAUSSIAN)
    assert gaussian_variance(GAUSSIAN) == pytest.approx(10.0)
    params = mgf_params(GAUSSIAN)
    for s in (-0.3, 0.1, 0.2):
        assert mgf_closed_form(params, s).real == pytest.approx(np.exp(5 * s ** 2), rel=1e-12)
    assert gaussian_log_defect(GAUSSIAN, np.linspace(-0.5, 0.5, 11)) <= config.GAUSSIAN_TOL


def test_gaussian_worked_value(splitting_space):
    assert mgf_oracle(GAUSSIAN, 0.2, splitting_space) == pytest.approx(np.exp(0.2), abs=config.MGF_REL_TOL)


def test_gaussian_variance_needs_l_zero():
    with pytest.raises(DomainError):
        gaussian_variance(RepresentationParams.auto(2 + 4j, 0.0, 2.0))
    assert not is_gaussian(RepresentationParams.auto(2 + 4j, 0.0, 2.0))


@pytest.mark.parametrize("L, s", [(0.5, 0.3), (-0.25, -0.5), (1.0, 0.0)])
def test_gamma_factor(L, s):
    params = QuadraticExponentParams(L, 1 - 1j, 0.5j)
    assert gamma_factor(params, s) == pytest.approx((2 * L * s + 1) ** -0.5)
    assert gamma_factor_defect(params, s) <= config.COEFF_TOL
    expected = mgf_closed_form(params, s) / np.exp(gaussian_exponent(params, s))
    assert expected == pytest.approx(gamma_factor(params, s))


def test_moments_closed_form():
    mean, second = mgf_moments(QuadraticExponentParams(0.5, 1 + 1j, 1 - 1j))
    assert mean == -0.5
    assert second == pytest.approx(2 + 0.75)


@pytest.mark.parametrize("z, rho, r", config.MGF_PARAM_GRID)
def test_moments_match_oracle(z, rho, r, splitting_space):
    rep_params = RepresentationParams.auto(z, rho, r)
    mean, second = mgf_moments(mgf_params(rep_params))
    num_mean, num_second = oracle_moments(rep_params, splitting_space)
    assert num_mean == pytest.approx(mean.real, abs=config.MOMENT_TOL)
    assert num_second == pytest.approx(second.real, abs=config.MOMENT_TOL)


@pytest.mark.parametrize("z, rho, r", config.MGF_PARAM_GRID)
def test_mgf_matches_oracle(z, rho, r, splitting_space):
    rep_params = RepresentationParams.auto(z, rho, r)
    rows = mgf_table(rep_params, config.MGF_S_GRID, splitting_space)
    assert [row.s for row in rows] == sorted(config.MGF_S_GRID)
    assert max(row.rel_error for row in rows) <= config.MGF_REL_TOL
    value = mgf_oracle_complex(rep_params, 0.1, splitting_space)
    assert abs(value.imag) <= 1e-10


def test_mgf_table_sorts_rows(splitting_space):
    rows = mgf_table(GAUSSIAN, [0.2, -0.1, 0.0], splitting_space)
    assert [row.s for row in rows] == [-0.1, 0.0, 0.2]
    assert rows[1].closed_form == 1.0 and rows[1].oracle == 1.0
