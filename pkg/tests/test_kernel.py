from __future__ import annotations

from math import pi, sqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swkernel.cg import su2_cg
from swkernel.coset import coset_volume
from swkernel.irrep import IrrepSpace, adjoint_block_dim
from swkernel.kernel import (
    analysis_coefficients,
    c_coefficients,
    chi_table,
    chi_tilde,
    f_eval,
    kernel_coefficients,
    normalization_constant,
    overlap_matrix,
    p_operator,
    synthesis_coefficients,
)
from swkernel.tensors import StructureError, decompose_tensor_family

ordering = st.floats(-1.5, 1.5, allow_nan=False)
CASES = [(2, 1), (2, 3), (2, 6), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)]


def fam(n, lam):
    return decompose_tensor_family(IrrepSpace(n, lam))


class TestSU3Fundamental:
    def test_chi(self):
        chi = chi_table(fam(3, 1))
        w = np.linspace(0, 2 * pi, 11)
        e = np.exp
        assert np.allclose(chi(0, w), (2 * e(-1j * w) + e(2j * w)) / sqrt(3), atol=1e-14)
        assert np.allclose(chi(1, w), sqrt(2 / 3) * (-e(-1j * w) + e(2j * w)), atol=1e-14)

    def test_overlap(self):
        g = overlap_matrix(fam(3, 1))
        want = np.array([[10 * pi / 3, -2 * sqrt(2) * pi / 3], [-2 * sqrt(2) * pi / 3, 8 * pi / 3]])
        assert np.allclose(g, want, atol=1e-12)

    @pytest.mark.parametrize("s", [-1, -0.5, 0, 0.5, 1])
    def test_c(self, s):
        c = kernel_coefficients(fam(3, 1), s).c
        want = [(8 + 4.0**-s) / (24 * sqrt(3) * pi), (4 + 5 * 4.0**-s) / (24 * sqrt(6) * pi)]
        assert np.allclose(c, want, atol=1e-12)

    @pytest.mark.parametrize("s, f", [
        (-1, lambda w: np.exp(-2j * w) / (2 * pi)),
        (0, lambda w: (np.exp(1j * w) + 2 * np.exp(-2j * w)) / (8 * pi)),
        (1, lambda w: (5 * np.exp(1j * w) + 6 * np.exp(-2j * w)) / (32 * pi)),
    ])
    def test_f(self, s, f):
        family = fam(3, 1)
        w = np.random.default_rng(0).uniform(0, 2 * pi, 32)
        got = f_eval(chi_table(family), kernel_coefficients(family, s).c, w)
        assert np.allclose(got, f(w), atol=1e-12)

    def test_p_wigner(self):
        assert np.allclose(np.diag(p_operator(fam(3, 1), 0)), [0.5, 0.25, 0.25], atol=1e-12)


class TestSU3Symmetric2:
    G = np.array([[14 * pi / 3, -2 * sqrt(5) * pi / 3, 0],
                  [-2 * sqrt(5) * pi / 3, 56 * pi / 15, -6 * pi / 5],
                  [0, -6 * pi / 5, 18 * pi / 5]])
    C = {
        -1: [1 / (2 * sqrt(6) * pi), sqrt(2) / (sqrt(15) * pi), sqrt(3 / 10) / (2 * pi)],
        0: [(90 * sqrt(6) + 2 * sqrt(10) + 9 * sqrt(15)) / (2160 * pi),
            (14 * sqrt(2) + 63 * sqrt(3) + 18 * sqrt(30)) / (2160 * pi),
            (38 * sqrt(2) + 21 * sqrt(3) + 6 * sqrt(30)) / (2160 * pi)],
        1: [8051 / (31104 * sqrt(6) * pi), 9701 / (31104 * sqrt(30) * pi),
            3767 / (31104 * sqrt(30) * pi)],
    }

    def test_overlap(self):
        assert np.allclose(overlap_matrix(fam(3, 2)), self.G, atol=1e-12)

    def test_chi_fourier_data(self):
        chi = chi_table(fam(3, 2))
        assert list(chi.exponents) == [4, 1, -2]
        want = np.array([np.array([1, 2, 3]) / sqrt(6),
                         sqrt(2 / 15) * np.array([2, 1, -3]),
                         sqrt(3 / 10) * np.array([1, -2, 1])])
        assert np.allclose(chi.coeffs, want, atol=1e-14)

    @pytest.mark.parametrize("s", [-1, 0, 1])
    def test_F(self, s):
        want = [sqrt(6) ** s / 6 ** ((s + 1) / 2),
                2.0**-s * sqrt(7.5) ** s / 48 ** ((s + 1) / 2),
                sqrt(10 / 3) ** s / 162 ** ((s + 1) / 2)]
        assert np.allclose(analysis_coefficients(fam(3, 2), s), want, atol=1e-12)

    @pytest.mark.parametrize("s", [-1, 0, 1])
    def test_c_table(self, s):
        assert np.allclose(kernel_coefficients(fam(3, 2), s).c, self.C[s], atol=1e-12)


@pytest.mark.parametrize("j2", [1, 2, 3, 4, 6])
@pytest.mark.parametrize("s", [-1, 0, 1])
def test_su2_closed_forms(j2, s):
    family = fam(2, j2)
    k = kernel_coefficients(family, s)
    j = j2 / 2
    L = np.arange(j2 + 1)
    hw = np.array([su2_cg(j, j, j, -j, l, 0) for l in L])
    F = hw**-s / ((2 * j + 1) * (2 * L + 1)) ** ((s + 1) / 2)
    assert np.allclose(k.g, 2 * pi * np.eye(j2 + 1), atol=1e-10)
    assert np.allclose(k.F, F, atol=1e-10)
    assert np.allclose(k.c, F / (2 * pi), atol=1e-10)


def test_su2_sz_cartan_keeps_orthogonality():
    chi = chi_table(fam(2, 3), sz_angle=True)
    assert np.allclose(chi.exponents, [1.5, 0.5, -0.5, -1.5])
    assert np.allclose(2 * pi * chi.coeffs @ chi.coeffs.T, 2 * pi * np.eye(4))


@pytest.mark.parametrize("n, lam", CASES)
def test_boundary_condition(n, lam):
    p = p_operator(fam(n, lam), -1)
    hw = np.zeros_like(p)
    hw[0, 0] = 1
    assert np.linalg.norm(p - hw) < 1e-12


@pytest.mark.parametrize("n, lam", CASES)
@pytest.mark.parametrize("s", [-1, -0.5, 0, 0.5, 1])
def test_route_equivalence(n, lam, s):
    family = fam(n, lam)
    direct = p_operator(family, s)
    integral = p_operator(family, s, "integral")
    assert np.linalg.norm(direct - integral) < 1e-10


@pytest.mark.parametrize("n, lam", CASES)
def test_identity_synthesis_coefficient(n, lam):
    family = fam(n, lam)
    g0 = synthesis_coefficients(family, 0.3)[0]
    assert g0 == pytest.approx(sqrt(family.space.dim) / coset_volume(n), rel=1e-12)


def test_normalization_constant():
    assert normalization_constant(3, 2) == pytest.approx(1 / (4 * pi**2 * 6))


def test_chi_tilde_sigma_range():
    with pytest.raises(ValueError):
        chi_tilde(fam(3, 1), 2, 0.0)


def test_singular_overlap_rejected():
    with pytest.raises(StructureError):
        c_coefficients(np.array([[1.0, 1.0], [1.0, 1.0]]), np.ones(2))


@settings(max_examples=40, deadline=None)
@given(ordering, st.sampled_from(CASES))
def test_dual_coefficients_product(s, case):
    family = fam(*case)
    dims = family.space.dim * np.array([adjoint_block_dim(case[0], x) for x in range(case[1] + 1)])
    prod = analysis_coefficients(family, s) * analysis_coefficients(family, -s)
    assert np.allclose(prod, 1 / dims, rtol=1e-12)


@settings(max_examples=40, deadline=None)
@given(ordering, st.sampled_from(CASES))
def test_p_trace_and_hermitian(s, case):
    p = p_operator(fam(*case), s)
    assert abs(np.trace(p) - 1) < 1e-12
    assert np.allclose(p, p.conj().T)
    assert np.allclose(p, np.diag(np.diag(p)))


@settings(max_examples=30, deadline=None)
@given(ordering, st.floats(0, 2 * pi), st.sampled_from([(2, 2), (3, 1), (3, 2), (3, 3)]))
def test_f_conjugate_symmetry(s, w, case):
    # real c and real chi Fourier data: f(-w) = conj(f(w))
    family = fam(*case)
    chi = chi_table(family)
    c = kernel_coefficients(family, s).c
    assert np.isclose(f_eval(chi, c, -w), np.conj(f_eval(chi, c, w)), atol=1e-13)
