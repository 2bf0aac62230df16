"""Scaling-and-squaring Pade exponential against scipy's reference."""
from __future__ import annotations

import numpy as np
import pytest
import scipy.linalg

from core.errors import DomainError
from fock.expm import PADE_THETA, expm


@pytest.mark.parametrize("scale", [1e-3, 0.1, 1.0, 5.0, 40.0])
def test_matches_scipy(scale, rng):
    a = rng.standard_normal((12, 12)) + 1j * rng.standard_normal((12, 12))
    a *= scale / np.linalg.norm(a, 1)
    expected = scipy.linalg.expm(a)
    assert np.allclose(expm(a), expected, rtol=1e-12, atol=1e-12 * np.linalg.norm(expected))


@pytest.mark.parametrize("order", sorted(PADE_THETA))
def test_each_pade_order_is_accurate(order, rng):
    a = rng.standard_normal((6, 6))
    a *= 0.9 * PADE_THETA[order] / np.linalg.norm(a, 1)
    assert np.allclose(expm(a), scipy.linalg.expm(a), rtol=1e-13, atol=1e-13)


def test_zero_and_diagonal():
    assert np.array_equal(expm(np.zeros((3, 3))), np.eye(3))
    d = np.array([0.5, -1.0, 2j])
    assert np.allclose(expm(np.diag(d)), np.diag(np.exp(d)), rtol=1e-14)


def test_nilpotent_series_terminates():
    n = np.diag([1.0, 2.0, 3.0], 1)
    expected = np.eye(4) + n + n @ n / 2 + n @ n @ n / 6
    assert np.allclose(expm(n), expected, rtol=1e-14, atol=1e-14)


def test_inverse_is_exp_of_negative(rng):
    a = 0.5 * (rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8)))
    assert np.allclose(expm(a) @ expm(-a), np.eye(8), atol=1e-12)


def test_empty_matrix():
    assert expm(np.zeros((0, 0))).shape == (0, 0)


@pytest.mark.parametrize("bad", [np.zeros((2, 3)), np.zeros(3), np.array([[np.nan]])])
def test_rejects_bad_input(bad):
    with pytest.raises(DomainError):
        expm(bad)
