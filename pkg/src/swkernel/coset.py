"""Coset representatives and quadrature on the phase space SU(n)/U(n-1).

For n = 2 a point is ``(alpha, beta)`` and the representative is
``exp(i alpha S_z) exp(i beta S_y)``. For n = 3 a point is
``(alpha_1, beta_1, alpha_2, beta_2)`` and the representative is
``R_23(alpha_1, beta_1, -alpha_1) R_12(alpha_2, beta_2, -alpha_2)`` with
``R_jk(a, b, c) = exp(i a J_z) exp(i b J_y) exp(i c J_z)`` built from the su(2)
embedded in modes ``j, k``. For n >= 4 no chart is provided; points are
Haar-random group elements and quadrature is Monte Carlo.

The measure is normalised so that the coset volume is
``2**n * pi**(n-1) / (n-1)!`` (4 pi for the sphere, 4 pi**2 for CP^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, pi

import numpy as np
from scipy import linalg as sla
from scipy.stats import unitary_group

from .irrep import IrrepSpace, expi_hermitian

__all__ = [
    "CosetGrid",
    "CosetPoint",
    "GroupElement",
    "UnsupportedGridError",
    "coset_element",
    "coset_elements",
    "coset_grid",
    "coset_point_from_matrix",
    "coset_volume",
    "default_resolution",
    "defining_matrix",
    "grid_elements",
    "lift",
    "random_coset_points",
]

TWO_PI = 2 * pi
_ANGLE_SLACK = 1e-12


class UnsupportedGridError(ValueError):
    pass


def coset_volume(n: int) -> float:
    return 2.0**n * pi ** (n - 1) / factorial(n - 1)


def n_angles(n: int) -> int:
    return 2 * (n - 1)


@dataclass(frozen=True)
class CosetPoint:
    """A point of SU(n)/U(n-1).

    ``angles`` holds the chart coordinates for n = 2, 3. For n >= 4 the point is
    carried by ``matrix``, a representative in the defining n x n irrep.
    """

    n: int
    angles: tuple[float, ...] = ()
    matrix: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n <= 3:
            _check_angles(self.n, np.asarray(self.angles, dtype=float)[None, :])
        elif self.matrix is None:
            raise ValueError("n >= 4 coset points must carry a defining-irrep matrix")


@dataclass(frozen=True)
class GroupElement:
    matrix: np.ndarray
    params: CosetPoint | None = None

    def is_unitary(self, tol: float = 1e-12) -> bool:
        d = self.matrix.shape[0]
        return np.linalg.norm(self.matrix.conj().T @ self.matrix - np.eye(d)) < tol


@dataclass(frozen=True)
class CosetGrid:
    """Quadrature nodes and weights realising the invariant integral over the coset.

    ``points`` has one row per node (angles for n <= 3, empty columns for the
    Monte Carlo case, where ``matrices`` holds the defining-irrep elements).
    """

    n: int
    points: np.ndarray
    weights: np.ndarray
    resolution: tuple[int, ...]
    monte_carlo: bool = False
    seed: int | None = None
    matrices: np.ndarray | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def volume(self) -> float:
        return float(self.weights.sum())

    def point(self, k: int) -> CosetPoint:
        if self.monte_carlo:
            return CosetPoint(self.n, (), self.matrices[k])
        return CosetPoint(self.n, tuple(float(a) for a in self.points[k]))


def _check_angles(n: int, angles: np.ndarray) -> None:
    if n > 3:
        raise UnsupportedGridError(f"no angle chart for n={n}")
    if angles.ndim != 2 or angles.shape[1] != n_angles(n):
        raise ValueError(f"n={n} coset points need {n_angles(n)} angles")
    alphas, betas = angles[:, 0::2], angles[:, 1::2]
    if np.any(alphas < -_ANGLE_SLACK) or np.any(alphas >= TWO_PI + _ANGLE_SLACK):
        raise ValueError("azimuthal angles must lie in [0, 2 pi)")
    if np.any(betas < -_ANGLE_SLACK) or np.any(betas > pi + _ANGLE_SLACK):
        raise ValueError("polar angles must lie in [0, pi]")


def _su2_pieces(space: IrrepSpace, j: int, k: int):
    """Diagonal of J_z and the Hermitian J_y for the su(2) embedded in modes j, k."""
    e = space.generators
    jz = 0.5 * (np.diag(e[j, j]) - np.diag(e[k, k]))
    jy = (e[j, k] - e[k, j]) / 2j
    return jz, jy


def _rotation_stack(space: IrrepSpace, j: int, k: int, alpha: np.ndarray, beta: np.ndarray,
                    gamma: np.ndarray) -> np.ndarray:
    jz, jy = _su2_pieces(space, j, k)
    left = np.exp(1j * np.multiply.outer(alpha, jz))
    right = np.exp(1j * np.multiply.outer(gamma, jz))
    mid = expi_hermitian(jy, beta)
    return left[:, :, None] * mid * right[:, None, :]


def coset_elements(space: IrrepSpace, angles) -> np.ndarray:
    """Stack of representatives Lambda(Omega), shape (N, dim, dim), for N angle rows."""
    angles = np.atleast_2d(np.asarray(angles, dtype=float))
    _check_angles(space.n, angles)
    zeros = np.zeros(len(angles))
    if space.n == 2:
        return _rotation_stack(space, 1, 2, angles[:, 0], angles[:, 1], zeros)
    a1, b1, a2, b2 = angles.T
    r23 = _rotation_stack(space, 2, 3, a1, b1, -a1)
    r12 = _rotation_stack(space, 1, 2, a2, b2, -a2)
    return r23 @ r12


def coset_element(space: IrrepSpace, p: CosetPoint) -> GroupElement:
    if p.n != space.n:
        raise ValueError(f"point is for n={p.n}, space has n={space.n}")
    if space.n > 3:
        return GroupElement(lift(space, p.matrix), p)
    return GroupElement(coset_elements(space, [p.angles])[0], p)


def grid_elements(space: IrrepSpace, grid: CosetGrid) -> np.ndarray:
    """Representatives for every node of ``grid``, shape (len(grid), dim, dim)."""
    if grid.n != space.n:
        raise ValueError(f"grid is for n={grid.n}, space has n={space.n}")
    if grid.monte_carlo:
        return lift(space, grid.matrices)
    return coset_elements(space, grid.points)


def defining_matrix(p: CosetPoint) -> np.ndarray:
    """The n x n defining-irrep matrix of a coset representative."""
    if p.matrix is not None:
        return np.asarray(p.matrix)
    return coset_element(IrrepSpace(p.n, 1), p).matrix


def lift(space: IrrepSpace, u: np.ndarray) -> np.ndarray:
    """Image of a defining-irrep unitary (or stack of them) in the symmetric irrep.

    The generator ``log(u)`` is mapped through ``A -> sum_ij A_ij E_ij``, which is
    a Lie-algebra homomorphism, and exponentiated in the irrep.
    """
    u = np.asarray(u, dtype=complex)
    if u.ndim == 3:
        return np.stack([lift(space, x) for x in u])
    if u.shape != (space.n, space.n):
        raise ValueError(f"expected a {space.n}x{space.n} matrix, got {u.shape}")
    t, z = sla.schur(u, output="complex")
    log_u = z @ np.diag(1j * np.angle(np.diag(t))) @ z.conj().T
    gen = sum(log_u[i - 1, j - 1] * e for (i, j), e in space.generators.items())
    # gen is anti-Hermitian: exp(gen) = exp(i * (-i gen))
    return expi_hermitian(-1j * gen, 1.0)


def coset_point_from_matrix(u: np.ndarray) -> CosetPoint:
    """Chart coordinates of the coset containing the defining-irrep element ``u``.

    Only the first column ``z = u e_1`` matters; its overall phase is absorbed
    by the stabiliser U(n-1).
    """
    u = np.asarray(u)
    n = u.shape[0]
    if n > 3:
        return CosetPoint(n, (), u)
    z = u[:, 0]
    if abs(z[0]) > 0:
        z = z * np.exp(-1j * np.angle(z[0]))
    if n == 2:
        beta = 2 * np.arctan2(abs(z[1]), abs(z[0]))
        alpha = (-np.angle(-z[1])) % TWO_PI if abs(z[1]) > 0 else 0.0
        return CosetPoint(2, (float(alpha), float(beta)))
    beta2 = 2 * np.arctan2(np.hypot(abs(z[1]), abs(z[2])), abs(z[0]))
    beta1 = 2 * np.arctan2(abs(z[2]), abs(z[1]))
    alpha2 = (-np.angle(-z[1])) % TWO_PI if abs(z[1]) > 0 else 0.0
    alpha1 = (-np.angle(z[2]) - alpha2) % TWO_PI if abs(z[2]) > 0 else 0.0
    return CosetPoint(3, (float(alpha1), float(beta1), float(alpha2), float(beta2)))


def default_resolution(n: int, lam: int) -> tuple[int, ...]:
    """Grid sizes that integrate products of two band-lam symbols exactly (plus margin)."""
    if n == 2:
        return (2 * lam + 3, lam + 2)
    if n == 3:
        return (4 * lam + 5, 2 * lam + 3, 4 * lam + 5, 2 * lam + 3)
    return (4000,)


def _trapezoid(m: int):
    return TWO_PI * np.arange(m) / m, np.full(m, TWO_PI / m)


def coset_grid(n: int, resolution, monte_carlo: bool | None = None,
               seed: int | None = 0) -> CosetGrid:
    """Tensor-product quadrature for n = 2, 3; Haar Monte Carlo for n >= 4.

    n = 2, ``resolution = (n_alpha, n_beta)``: trapezoid in alpha, Gauss-Legendre
    in cos(beta).

    n = 3, ``resolution = (n_alpha1, n_beta1, n_alpha2, n_beta2)``: trapezoid in
    both alphas, Gauss-Legendre in cos(beta_1), and Gauss-Legendre in
    ``u = sin(beta_2/2)**2`` with the factor ``u`` folded into the weights
    (``cos(b/2) sin(b/2)**3 db = u du``). Integrands that are polynomials of
    bidegree (k, k) in the coherent-state vector are then integrated exactly
    once ``n_alpha > 2k`` and ``n_beta >= k + 1``.

    n >= 4, ``resolution = (n_samples,)``: equal weights summing to the volume.
    """
    resolution = tuple(int(r) for r in np.atleast_1d(resolution))
    if any(r < 1 for r in resolution):
        raise ValueError("every resolution entry must be >= 1")
    if monte_carlo is None:
        monte_carlo = n > 3
    if n > 3 and (not monte_carlo or len(resolution) != 1):
        raise UnsupportedGridError(
            f"exact quadrature is not provided for n={n}; give a single Monte Carlo sample count")
    if monte_carlo:
        return _haar_grid(n, resolution[0], seed)
    if len(resolution) != n_angles(n):
        raise ValueError(f"n={n} needs {n_angles(n)} resolution entries")

    if n == 2:
        alpha, wa = _trapezoid(resolution[0])
        x, wx = np.polynomial.legendre.leggauss(resolution[1])
        axes = [(alpha, wa), (np.arccos(x), wx)]
    else:
        a1, wa1 = _trapezoid(resolution[0])
        x, wx = np.polynomial.legendre.leggauss(resolution[1])
        a2, wa2 = _trapezoid(resolution[2])
        y, wy = np.polynomial.legendre.leggauss(resolution[3])
        u = 0.5 * (y + 1)
        axes = [(a1, wa1), (np.arccos(x), wx), (a2, wa2),
                (2 * np.arcsin(np.sqrt(u)), 0.5 * wy * u)]
    mesh = np.meshgrid(*[a for a, _ in axes], indexing="ij")
    wmesh = np.meshgrid(*[w for _, w in axes], indexing="ij")
    points = np.stack([m.ravel() for m in mesh], axis=1)
    weights = np.prod(np.stack([w.ravel() for w in wmesh]), axis=0)
    return CosetGrid(n, points, weights, resolution)


def _haar_grid(n: int, count: int, seed: int | None) -> CosetGrid:
    mats = unitary_group.rvs(n, size=count, random_state=seed)
    mats = np.asarray(mats).reshape(count, n, n)
    weights = np.full(count, coset_volume(n) / count)
    return CosetGrid(n, np.zeros((count, 0)), weights, (count,), True, seed, mats)


def random_coset_points(n: int, count: int, rng: np.random.Generator) -> list[CosetPoint]:
    """Haar-distributed coset points (chart coordinates for n = 2, 3)."""
    mats = unitary_group.rvs(n, size=count, random_state=rng).reshape(count, n, n)
    return [coset_point_from_matrix(u) for u in mats]
