from __future__ import annotations

from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swkernel.irrep import (
    IrrepSpace,
    Occupation,
    adjoint_block_dim,
    cartan_h1,
    dim_symmetric,
    enumerate_basis,
    expi_hermitian,
    generator_matrix,
)


@pytest.mark.parametrize("n, lam, dim", [(2, 1, 2), (2, 4, 5), (3, 1, 3), (3, 2, 6), (3, 3, 10), (4, 2, 10)])
def test_dim_symmetric(n, lam, dim):
    assert dim_symmetric(n, lam) == dim
    assert len(enumerate_basis(n, lam)) == dim


@pytest.mark.parametrize("n, lam", [(1, 0), (2, -1)])
def test_dim_symmetric_rejects_bad_input(n, lam):
    with pytest.raises(ValueError):
        dim_symmetric(n, lam)


@pytest.mark.parametrize("sigma", range(5))
def test_adjoint_block_dim_su3(sigma):
    assert adjoint_block_dim(3, sigma) == (sigma + 1) ** 3


@pytest.mark.parametrize("sigma", range(5))
def test_adjoint_block_dim_su2(sigma):
    assert adjoint_block_dim(2, sigma) == 2 * sigma + 1


@pytest.mark.parametrize("n, lam", [(2, 3), (3, 2), (4, 2)])
def test_blocks_fill_end_h(n, lam):
    d = dim_symmetric(n, lam)
    assert sum(adjoint_block_dim(n, s) for s in range(lam + 1)) == d * d


def test_basis_order_starts_at_highest_weight():
    basis = enumerate_basis(3, 2)
    assert basis[0].nu == (2, 0, 0)
    assert [b.nu for b in basis] == sorted((b.nu for b in basis), reverse=True)


def test_occupation_labels():
    occ = Occupation((1, 1, 0))
    assert occ.lam == 2
    assert occ.weight == (0, 1)
    assert occ.h1 == 3 * 1 - 2


@pytest.mark.parametrize("n, lam", [(2, 2), (3, 2), (4, 1)])
def test_commutation_relations(n, lam):
    space = IrrepSpace(n, lam)
    e = space.generators
    for (i, j), a in e.items():
        for (k, l), b in e.items():
            expected = (j == k) * e[(i, l)] - (l == i) * e[(k, j)]
            assert np.allclose(a @ b - b @ a, expected, atol=1e-12)


def test_raising_operator_matrix_element():
    space = IrrepSpace(3, 2)
    e12 = generator_matrix(space, 1, 2)
    a = space.index[(1, 1, 0)]
    b = space.index[(0, 2, 0)]
    assert e12[a, b] == pytest.approx(np.sqrt(2))


def test_generator_index_out_of_range():
    with pytest.raises(IndexError):
        generator_matrix(IrrepSpace(3, 1), 0, 4)


@pytest.mark.parametrize("n, lam", [(2, 3), (3, 2)])
def test_h1_is_diagonal_and_traceless(n, lam):
    h = cartan_h1(IrrepSpace(n, lam))
    assert np.allclose(h, np.diag(np.diag(h)))
    assert abs(np.trace(h)) < 1e-12
    assert h[0, 0] == (n - 1) * lam


def test_sz_angle_cartan_is_sz():
    h = cartan_h1(IrrepSpace(2, 3), sz_angle=True)
    assert np.allclose(np.diag(h), [1.5, 0.5, -0.5, -1.5])


@settings(max_examples=30, deadline=None)
@given(st.floats(-10, 10), st.integers(1, 6))
def test_expi_hermitian_is_unitary(t, d):
    rng = np.random.default_rng(d)
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    u = expi_hermitian(a + a.conj().T, t)
    assert np.allclose(u @ u.conj().T, np.eye(d), atol=1e-12)


def test_expi_hermitian_zero_angle_is_identity():
    h = generator_matrix(IrrepSpace(2, 3), 1, 2)
    h = h + h.T
    assert np.array_equal(expi_hermitian(h, 0.0), np.eye(4))
    stack = expi_hermitian(h, np.array([0.0, 0.3]))
    assert np.array_equal(stack[0], np.eye(4))


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 5), st.integers(0, 4))
def test_dimension_formula_property(n, lam):
    assert dim_symmetric(n, lam) == comb(n + lam - 1, lam)
