"""Structure constants, Jacobi identity, derived series and star structure of CEHeis."""
from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.lie_core import (
    AlgebraElement,
    StructureConstants,
    abelian_structure,
    adjoint,
    basis_jacobi_max,
    bracket,
    ceheis_structure,
    center,
    derived_series,
    in_span,
    is_linearly_independent,
    is_solvable,
    jacobi_defect,
    perturbed,
    random_jacobi_max,
    rank,
    star_compatibility_max,
    triple_brackets_central,
)
from core import config
from core.errors import DimensionMismatchError, DomainError, TrivialExtensionError
from tests.strategies import nonzero_complex, unit_complex

TOL = config.COEFF_TOL

elements = st.lists(unit_complex, min_size=4, max_size=4).map(AlgebraElement)


def test_defining_brackets():
    z = 1 + 1j
    sc = ceheis_structure(z)
    a, a_dag, h, e = sc.basis()
    assert bracket(a, a_dag, sc).coeffs.tolist() == h.coeffs.tolist()
    assert np.allclose(bracket(h, a_dag, sc).coeffs, (z * e).coeffs, atol=0)
    assert np.allclose(bracket(a, h, sc).coeffs, (np.conj(z) * e).coeffs, atol=0)
    for x in sc.basis():
        assert bracket(x, e, sc).is_zero(0.0)
        assert bracket(e, x, sc).is_zero(0.0)


def test_elements_by_name():
    sc = ceheis_structure(2j)
    assert sc.element("a_dag").coeffs.tolist() == [0, 1, 0, 0]
    with pytest.raises(DomainError):
        sc.element("b")


def test_format_element():
    sc = ceheis_structure(1)
    a, _, _, e = sc.basis()
    assert sc.format_element(a + 2 * e) == "1*a + 2*E"
    assert sc.format_element(AlgebraElement.zero(4)) == "0"


@pytest.mark.parametrize("z", config.ALGEBRA_Z_GRID)
def test_jacobi_on_basis_and_random_triples(z, rng):
    sc = ceheis_structure(z)
    assert basis_jacobi_max(sc) <= TOL
    assert random_jacobi_max(sc, config.JACOBI_FUZZ_COUNT, rng) <= TOL


@pytest.mark.parametrize("z", config.ALGEBRA_Z_GRID)
def test_derived_series_is_4_2_0(z):
    sc = ceheis_structure(z)
    series = derived_series(sc)
    assert [len(level) for level in series] == [4, 2, 0]
    # [g, g] is spanned by h and E
    a, a_dag, h, e = sc.basis()
    assert all(in_span(x, series[1]) for x in (h, e))
    assert not in_span(a, series[1])
    assert is_solvable(sc)


@pytest.mark.parametrize("z", config.ALGEBRA_Z_GRID)
def test_star_compatibility(z):
    assert star_compatibility_max(ceheis_structure(z)) <= TOL


def test_center_is_spanned_by_e():
    sc = ceheis_structure(0.7 - 0.3j)
    z_basis = center(sc)
    assert len(z_basis) == 1
    assert in_span(sc.element("E"), z_basis)


def test_triple_brackets_are_central():
    assert triple_brackets_central(ceheis_structure(1 + 1j))


def test_basis_is_independent():
    sc = ceheis_structure(1j)
    a, a_dag, h, e = sc.basis()
    assert is_linearly_independent([a, a_dag, h, e])
    assert not is_linearly_independent([a, a + e, e])
    assert rank([a, a + e, e]) == 2


def test_abelian_algebra():
    sc = abelian_structure(3)
    assert [len(level) for level in derived_series(sc)] == [3, 0]
    assert len(center(sc)) == 3
    assert basis_jacobi_max(sc) == 0


@given(z=nonzero_complex, x=elements, y=elements, w=elements)
@settings(max_examples=200, deadline=None)
def test_jacobi_property(z, x, y, w):
    assert jacobi_defect(x, y, w, ceheis_structure(z)).max_abs() <= TOL


@given(z=nonzero_complex, x=elements, y=elements)
@settings(max_examples=200, deadline=None)
def test_antisymmetry_property(z, x, y):
    sc = ceheis_structure(z)
    assert (bracket(x, y, sc) + bracket(y, x, sc)).max_abs() <= TOL


@given(z=nonzero_complex, x=elements, y=elements)
@settings(max_examples=200, deadline=None)
def test_star_is_anti_homomorphism(z, x, y):
    sc = ceheis_structure(z)
    lhs = adjoint(bracket(x, y, sc), sc)
    rhs = bracket(adjoint(y, sc), adjoint(x, sc), sc)
    assert (lhs - rhs).max_abs() <= TOL


@given(z=nonzero_complex, x=elements)
def test_star_is_involution(z, x):
    sc = ceheis_structure(z)
    assert (adjoint(adjoint(x, sc), sc) - x).max_abs() == 0


def test_perturbation_breaks_jacobi():
    sc = perturbed(ceheis_structure(1 + 1j), 0, 1, 0, 1e-3)
    assert sc.table[0, 1, 0] == 1e-3
    assert sc.table[1, 0, 0] == -1e-3
    # [h, [a, a_dag]] picks up delta [h, a] = -delta conj(z) E
    assert basis_jacobi_max(sc) == pytest.approx(1e-3 * abs(1 + 1j))


def test_trivial_extension_rejected():
    with pytest.raises(TrivialExtensionError):
        ceheis_structure(0)


@pytest.mark.parametrize("indices", [(1, 1, 0), (0, 4, 0), (-1, 0, 0)])
def test_perturbation_indices_validated(indices):
    with pytest.raises(DomainError):
        perturbed(ceheis_structure(1), *indices, 1e-3)


def test_table_must_be_antisymmetric():
    table = np.zeros((2, 2, 2), dtype=complex)
    table[0, 1, 0] = 1.0
    with pytest.raises(DomainError):
        StructureConstants(table=table, star=(0, 1), names=("x", "y"))


def test_star_must_be_involution():
    with pytest.raises(DomainError):
        StructureConstants(table=np.zeros((3, 3, 3)), star=(1, 2, 0), names=("x", "y", "w"))


def test_dimension_mismatch():
    sc = ceheis_structure(1)
    with pytest.raises(DimensionMismatchError):
        bracket(AlgebraElement.basis(0, 3), sc.element("a"), sc)
    with pytest.raises(DimensionMismatchError):
        AlgebraElement.basis(0, 3) + AlgebraElement.basis(0, 4)
