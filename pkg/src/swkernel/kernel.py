"""s-ordered kernel data: generalized characters, overlap matrix, F/G/c coefficients, P^(s).

Everything here is Omega-independent. ``P^(s)`` is diagonal in the occupation
basis and is built either directly from the H-scalar tensors or as the
omega-integral of ``exp(i omega h_1) f^(s)(omega)`` over ``[0, 2 pi)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg as sla

from .coset import coset_volume
from .irrep import adjoint_block_dim, cartan_h1
from .tensors import PhaseFixingError, StructureError, TensorFamily

__all__ = [
    "ChiTable",
    "KernelCoefficients",
    "analysis_coefficients",
    "c_coefficients",
    "chi_table",
    "chi_tilde",
    "f_eval",
    "kernel_coefficients",
    "normalization_constant",
    "overlap_matrix",
    "p_operator",
    "synthesis_coefficients",
    "synthesis_operator",
]

ROUTE_TOL = 1e-10


@dataclass(frozen=True)
class ChiTable:
    """Fourier data of the generalized characters.

    ``chi_sigma(omega) = sum_k coeffs[sigma, k] * exp(i omega exponents[k])``.
    """

    exponents: np.ndarray
    coeffs: np.ndarray

    def __call__(self, sigma: int, omega):
        return self.evaluate(omega)[sigma]

    def evaluate(self, omega) -> np.ndarray:
        """All characters at ``omega``; shape ``(lam + 1,) + np.shape(omega)``."""
        phases = np.exp(1j * np.multiply.outer(np.asarray(omega, dtype=float), self.exponents))
        return np.moveaxis(phases @ self.coeffs.T, -1, 0)


def chi_table(family: TensorFamily, sz_angle: bool = False) -> ChiTable:
    """Group ``Tr[exp(i omega h_1) T_sigma^dagger]`` by distinct h_1 eigenvalue.

    ``sz_angle`` reports SU(2) characters as functions of the S_z angle.
    """
    h = np.diag(cartan_h1(family.space, sz_angle))
    exps = np.unique(h)[::-1]
    diag = np.diagonal(family.zero_weight_invariant, axis1=1, axis2=2).conj()
    coeffs = np.stack([diag[:, h == e].sum(axis=1) for e in exps], axis=1)
    if np.abs(coeffs.imag).max() < 1e-14:
        coeffs = coeffs.real
    return ChiTable(exps, coeffs)


def chi_tilde(family: TensorFamily, sigma: int, omega, sz_angle: bool = False):
    if not 0 <= sigma <= family.space.lam:
        raise ValueError(f"sigma must lie in 0..{family.space.lam}")
    return chi_table(family, sz_angle)(sigma, omega)


def overlap_matrix(family: TensorFamily) -> np.ndarray:
    """``g = int_0^{2 pi} chi_sigma chi*_sigma' d omega``, exact from the Fourier data."""
    t = chi_table(family).coeffs
    g = 2 * np.pi * (t @ t.conj().T)
    return g.real if np.iscomplexobj(g) and np.abs(g.imag).max() < 1e-14 else g


def _block_dims(family: TensorFamily) -> np.ndarray:
    return np.array([adjoint_block_dim(family.space.n, s) for s in range(family.space.lam + 1)],
                    dtype=float)


def analysis_coefficients(family: TensorFamily, s: float) -> np.ndarray:
    """``F_sigma = C~_sigma**(-s) / (dim(lam) dim(sigma))**((s+1)/2)``."""
    c = family.hw_coeff
    if np.any(c <= 0):
        raise PhaseFixingError("highest-weight coefficients must be positive")
    dims = family.space.dim * _block_dims(family)
    return np.exp(-s * np.log(c) - 0.5 * (s + 1) * np.log(dims))


def c_coefficients(g: np.ndarray, F: np.ndarray) -> np.ndarray:
    """Solve ``g c = F`` (g is symmetric positive definite)."""
    try:
        factor = sla.cho_factor(g)
    except sla.LinAlgError as exc:
        raise StructureError("overlap matrix is not positive definite") from exc
    return sla.cho_solve(factor, F)


def f_eval(chi: ChiTable, c: np.ndarray, omega):
    """``f(omega) = sum_sigma c_sigma conj(chi_sigma(omega))``."""
    return np.tensordot(c, chi.evaluate(omega).conj(), axes=(0, 0))


def normalization_constant(n: int, lam: int) -> float:
    """``1 / (vol(M) dim(lam))``, the proportionality constant of the traciality relation."""
    from .irrep import dim_symmetric
    return 1.0 / (coset_volume(n) * dim_symmetric(n, lam))


def synthesis_coefficients(family: TensorFamily, s: float, vol: float | None = None) -> np.ndarray:
    """``G^(s)_sigma = dim(sigma) / (vol(M) F^(-s)_sigma)``.

    ``G^(-s)`` reconstructs an operator exactly from its s-symbol.
    """
    if vol is None:
        vol = coset_volume(family.space.n)
    return _block_dims(family) / (vol * analysis_coefficients(family, -s))


def synthesis_operator(family: TensorFamily, s: float, vol: float | None = None) -> np.ndarray:
    return np.tensordot(synthesis_coefficients(family, s, vol), family.zero_weight_invariant, 1)


def _p_direct(family: TensorFamily, s: float) -> np.ndarray:
    return np.tensordot(analysis_coefficients(family, s), family.zero_weight_invariant, 1)


def _p_integral(family: TensorFamily, s: float, sz_angle: bool) -> np.ndarray:
    n, lam = family.space.n, family.space.lam
    chi = chi_table(family, sz_angle)
    c = c_coefficients(overlap_matrix(family), analysis_coefficients(family, s))
    nodes = 2 * n * lam + 3
    omega = 2 * np.pi * np.arange(nodes) / nodes
    h = np.diag(cartan_h1(family.space, sz_angle))
    f = f_eval(chi, c, omega)
    diag = (2 * np.pi / nodes) * (np.exp(1j * np.multiply.outer(h, omega)) @ f)
    if np.abs(diag.imag).max() > ROUTE_TOL:
        raise StructureError("omega-integral of P^(s) is not real")
    return np.diag(diag.real)


def p_operator(family: TensorFamily, s: float, route: str = "direct",
               sz_angle: bool = False, check: bool = False) -> np.ndarray:
    """The diagonal operator ``P^(s)`` with ``w^(s)(Omega) = Lambda P^(s) Lambda^dagger``.

    ``route="direct"`` sums ``F_sigma T_{sigma;0,0}``; ``route="integral"`` evaluates
    the omega-integral by the trapezoid rule on ``2 n lam + 3`` nodes, which is exact
    for the trigonometric polynomials involved. With ``check=True`` both routes
    are computed and a disagreement above 1e-10 raises StructureError.
    """
    if route not in ("direct", "integral"):
        raise ValueError(f"unknown route {route!r}")
    direct = _p_direct(family, s) if (route == "direct" or check) else None
    integral = _p_integral(family, s, sz_angle) if (route == "integral" or check) else None
    if check and np.linalg.norm(direct - integral) > ROUTE_TOL:
        raise StructureError("direct and integral P^(s) disagree")
    return direct if route == "direct" else integral


@dataclass(frozen=True)
class KernelCoefficients:
    s: float
    F: np.ndarray
    G: np.ndarray
    g: np.ndarray
    c: np.ndarray
    normalization: float


def kernel_coefficients(family: TensorFamily, s: float) -> KernelCoefficients:
    g = overlap_matrix(family)
    F = analysis_coefficients(family, s)
    return KernelCoefficients(
        s=s, F=F, G=synthesis_coefficients(family, s), g=g, c=c_coefficients(g, F),
        normalization=normalization_constant(family.space.n, family.space.lam),
    )
