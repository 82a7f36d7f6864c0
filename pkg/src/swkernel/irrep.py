"""Symmetric irreps (lambda, 0, ..., 0) of SU(n) in the bosonic occupation basis.

States are labelled by occupations ``[nu_1, ..., nu_n]`` with ``sum(nu) == lambda``.
The basis is ordered descending-lexicographically, so index 0 is always the
highest weight state ``[lambda, 0, ..., 0]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb

import numpy as np

__all__ = [
    "IrrepSpace",
    "Occupation",
    "adjoint_block_dim",
    "cartan_h1",
    "dim_symmetric",
    "enumerate_basis",
    "expi_hermitian",
    "generator_matrix",
]


def dim_symmetric(n: int, lam: int) -> int:
    """Dimension of the symmetric irrep (lam, 0, ..., 0) of SU(n)."""
    if n < 2 or lam < 0:
        raise ValueError(f"need n >= 2 and lambda >= 0, got n={n}, lambda={lam}")
    return comb(lam + n - 1, n - 1)


def adjoint_block_dim(n: int, sigma: int) -> int:
    """Dimension of the irrep (sigma, 0, ..., 0, sigma) inside lambda x lambda*."""
    if sigma == 0:
        return 1
    return dim_symmetric(n, sigma) ** 2 - dim_symmetric(n, sigma - 1) ** 2


@dataclass(frozen=True)
class Occupation:
    nu: tuple[int, ...]

    @property
    def lam(self) -> int:
        return sum(self.nu)

    @property
    def weight(self) -> tuple[int, ...]:
        """Dynkin-type weight ``(nu_1 - nu_2, ..., nu_{n-1} - nu_n)``."""
        return tuple(a - b for a, b in zip(self.nu[:-1], self.nu[1:]))

    @property
    def h1(self) -> int:
        """Eigenvalue of the U(n-1)-invariant Cartan element, ``n*nu_1 - lambda``."""
        return len(self.nu) * self.nu[0] - self.lam

    @property
    def isospin(self) -> float:
        """The (redundant) SU(3) label I_23 = (nu_2 + nu_3) / 2."""
        return 0.5 * sum(self.nu[1:])


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_basis(n: int, lam: int) -> list[Occupation]:
    """All compositions of ``lam`` into ``n`` parts, descending lexicographic."""
    dim_symmetric(n, lam)
    return [Occupation(nu) for nu in _compositions(lam, n)]


@dataclass(frozen=True)
class IrrepSpace:
    """The symmetric irrep (lam, 0, ..., 0) of SU(n)."""

    n: int
    lam: int
    basis: tuple[Occupation, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(enumerate_basis(self.n, self.lam)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def occupations(self) -> np.ndarray:
        """Integer array of shape (dim, n)."""
        return np.array([b.nu for b in self.basis], dtype=int).reshape(self.dim, self.n)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {b.nu: k for k, b in enumerate(self.basis)}

    @cached_property
    def generators(self) -> dict[tuple[int, int], np.ndarray]:
        """All E_ij (1-based indices, including i == j) as real matrices."""
        return {
            (i, j): generator_matrix(self, i, j)
            for i in range(1, self.n + 1)
            for j in range(1, self.n + 1)
        }


def generator_matrix(space: IrrepSpace, i: int, j: int) -> np.ndarray:
    """Bosonic realisation of E_ij = a_i^dagger a_j on the irrep.

    Indices are 1-based. ``E_ii`` is the number operator of mode ``i``.
    """
    n = space.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"mode indices must lie in 1..{n}, got ({i}, {j})")
    out = np.zeros((space.dim, space.dim))
    for col, occ in enumerate(space.basis):
        nu = list(occ.nu)
        if i == j:
            out[col, col] = nu[i - 1]
            continue
        if nu[j - 1] == 0:
            continue
        amp = np.sqrt((nu[i - 1] + 1) * nu[j - 1])
        nu[i - 1] += 1
        nu[j - 1] -= 1
        out[space.index[tuple(nu)], col] = amp
    return out


def cartan_h1(space: IrrepSpace, sz_angle: bool = False) -> np.ndarray:
    """Diagonal U(n-1)-invariant Cartan element with entries ``n*nu_1 - lambda``.

    With ``sz_angle=True`` and ``n == 2`` the result is halved to S_z, which is
    the convention used when reporting SU(2) f-functions as functions of the
    S_z rotation angle.
    """
    diag = np.array([b.h1 for b in space.basis], dtype=float)
    if sz_angle and space.n == 2:
        diag = diag / 2
    return np.diag(diag)


def expi_hermitian(h: np.ndarray, t) -> np.ndarray:
    """``exp(i t h)`` for Hermitian ``h`` and scalar or 1-D array ``t``.

    Uses the spectral decomposition of ``h``; a 1-D ``t`` returns a stack of
    shape ``(len(t), d, d)``.
    """
    evals, vecs = np.linalg.eigh(h)
    t = np.asarray(t, dtype=float)
    phases = np.exp(1j * np.multiply.outer(t, evals))
    out = np.einsum("ik,...k,jk->...ij", vecs, phases, vecs.conj())
    out[t == 0] = np.eye(len(evals))
    return out
