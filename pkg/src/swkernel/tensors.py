"""Trace-orthonormal irreducible tensor operators on a symmetric irrep.

The operator space ``End(H)`` carries the adjoint action of SU(n) and decomposes
as ``(0,..,0) + (1,0,..,0,1) + ... + (lam,0,..,0,lam)``, each block once. The
blocks are found numerically as eigenspaces of the adjoint quadratic Casimir;
weights come for free because matrix units ``|a><b|`` are Cartan eigen-operators,
and repeated weights inside a block are split by the U(n-1) Casimir.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .irrep import IrrepSpace, adjoint_block_dim

__all__ = [
    "PhaseFixingError",
    "StructureError",
    "TensorFamily",
    "TensorLabel",
    "adjoint_superoperator",
    "decompose_tensor_family",
    "highest_weight_coefficient",
    "verify_trace_orthonormality",
    "zero_weight_invariant_tensors",
]

CLUSTER_RTOL = 1e-8
_TIE_RTOL = 1e-9


class StructureError(RuntimeError):
    """The numerical decomposition does not have the expected block structure."""


class PhaseFixingError(StructureError):
    pass


@dataclass(frozen=True, order=True)
class TensorLabel:
    sigma: int
    weight: tuple[int, ...]
    mult: int


@dataclass(frozen=True, eq=False)
class TensorFamily:
    """Complete trace-orthonormal tensor basis of ``End(H)``.

    Attributes
    ----------
    space : IrrepSpace
    labels : tuple of TensorLabel
        One label per tensor, in the order of ``matrices``.
    matrices : ndarray, shape (dim**2, dim, dim)
    casimir : ndarray, shape (lam + 1,)
        Adjoint Casimir eigenvalue of each sigma block.
    """

    space: IrrepSpace
    labels: tuple[TensorLabel, ...]
    matrices: np.ndarray
    casimir: np.ndarray

    @cached_property
    def tensors(self) -> dict[TensorLabel, np.ndarray]:
        return dict(zip(self.labels, self.matrices))

    @cached_property
    def zero_weight_invariant(self) -> np.ndarray:
        """The lam + 1 H-scalar tensors T_{sigma;0,0}, stacked by sigma."""
        zero = (0,) * (self.space.n - 1)
        return np.stack([self.tensors[TensorLabel(s, zero, 0)]
                         for s in range(self.space.lam + 1)])

    @cached_property
    def hw_coeff(self) -> np.ndarray:
        return self.zero_weight_invariant[:, 0, 0].real.copy()

    def block_dims(self) -> list[int]:
        counts = [0] * (self.space.lam + 1)
        for lab in self.labels:
            counts[lab.sigma] += 1
        return counts

    def expand(self, x: np.ndarray) -> np.ndarray:
        """Coefficients ``Tr(T_a^dagger X)`` in label order."""
        return np.einsum("aij,ij->a", self.matrices.conj(), x)

    def resum(self, coeffs: np.ndarray) -> np.ndarray:
        return np.einsum("a,aij->ij", coeffs, self.matrices)

    def block_projection(self, x: np.ndarray, sigma: int) -> np.ndarray:
        keep = np.array([lab.sigma == sigma for lab in self.labels])
        return self.resum(np.where(keep, self.expand(x), 0))


def adjoint_superoperator(a: np.ndarray) -> np.ndarray:
    """Matrix of ``X -> AX - XA`` acting on row-major vectorised X."""
    eye = np.eye(a.shape[0])
    return np.kron(a, eye) - np.kron(eye, a.T)


def _casimir(space: IrrepSpace, modes) -> np.ndarray:
    """``sum_{i,j in modes} ad(E_ij) ad(E_ji)``; symmetric PSD since ad(E_ji) = ad(E_ij)^T."""
    d2 = space.dim**2
    out = np.zeros((d2, d2))
    for i in modes:
        for j in modes:
            a = adjoint_superoperator(space.generators[i, j])
            out += a @ a.T
    return out


def _clusters(values: np.ndarray) -> list[np.ndarray]:
    """Index groups of sorted ``values`` that agree within the clustering tolerance."""
    order = np.argsort(values, kind="stable")
    groups, current = [], [order[0]]
    for k in order[1:]:
        ref = values[current[0]]
        if abs(values[k] - ref) <= CLUSTER_RTOL * (1 + abs(ref)):
            current.append(k)
        else:
            groups.append(np.array(current))
            current = [k]
    groups.append(np.array(current))
    return groups


def _fix_phase(t: np.ndarray, invariant: bool) -> np.ndarray:
    if invariant:
        ref = t[0, 0]
        if abs(ref) < 1e-12:
            raise PhaseFixingError("H-scalar tensor vanishes at the highest weight")
    else:
        flat = t.ravel()
        mags = np.abs(flat)
        ref = flat[np.flatnonzero(mags >= mags.max() * (1 - _TIE_RTOL))[0]]
    return t * (np.conj(ref) / abs(ref))


@lru_cache(maxsize=32)
def decompose_tensor_family(space: IrrepSpace) -> TensorFamily:
    """Build the trace-orthonormal tensor family of ``space``.

    Within a repeated weight the copies are labelled ``mult = 0, 1, ...`` by
    increasing U(n-1) Casimir, so the H-scalar copy has ``mult = 0``; they are
    listed in decreasing ``mult``.
    """
    n, lam, dim = space.n, space.lam, space.dim
    occ = space.occupations
    full = _casimir(space, range(1, n + 1))
    sub = _casimir(space, range(2, n + 1))

    # matrix unit |a><b| has occupation shift occ[a] - occ[b]
    sectors: dict[tuple[int, ...], list[int]] = {}
    for a in range(dim):
        for b in range(dim):
            sectors.setdefault(tuple(occ[a] - occ[b]), []).append(a * dim + b)

    pieces = []  # (eigenvalue, sector key, vectors in full dim**2 space)
    for key, idx in sectors.items():
        idx = np.array(idx)
        evals, evecs = np.linalg.eigh(full[np.ix_(idx, idx)])
        for group in _clusters(evals):
            vecs = np.zeros((dim * dim, len(group)))
            vecs[idx] = evecs[:, group]
            pieces.append((float(evals[group].mean()), key, vecs))

    all_vals = np.array([p[0] for p in pieces])
    levels = [float(all_vals[g].mean()) for g in _clusters(all_vals)]
    if len(levels) != lam + 1:
        raise StructureError(f"found {len(levels)} Casimir blocks, expected {lam + 1}")

    labels, mats = [], []
    for piece_val, key, vecs in pieces:
        sigma = int(np.argmin([abs(piece_val - lv) for lv in levels]))
        weight = tuple(int(x) for x in np.asarray(key[:-1]) - np.asarray(key[1:]))
        k_sub = vecs.T @ sub @ vecs
        sub_vals, rot = np.linalg.eigh(k_sub)
        vecs = vecs @ rot
        is_zero = not any(key)
        for mult in range(vecs.shape[1] - 1, -1, -1):
            invariant = is_zero and mult == 0
            if invariant and abs(sub_vals[0]) > 1e-9:
                raise StructureError(f"no U(n-1)-invariant zero-weight tensor in block {sigma}")
            t = _fix_phase(vecs[:, mult].reshape(dim, dim), invariant)
            labels.append(TensorLabel(sigma, weight, mult))
            mats.append(t)

    order = sorted(range(len(labels)),
                   key=lambda k: (labels[k].sigma, tuple(-w for w in labels[k].weight),
                                  -labels[k].mult))
    labels = tuple(labels[k] for k in order)
    matrices = np.stack([mats[k] for k in order])
    matrices.flags.writeable = False

    family = TensorFamily(space, labels, matrices, np.array(levels))
    expected = [adjoint_block_dim(n, s) for s in range(lam + 1)]
    if family.block_dims() != expected:
        raise StructureError(f"block dimensions {family.block_dims()} != {expected}")
    if np.any(np.diff(family.casimir) <= 0):
        raise StructureError("adjoint Casimir is not increasing in sigma")
    return family


def zero_weight_invariant_tensors(family: TensorFamily) -> np.ndarray:
    """The lam + 1 diagonal H-scalar tensors, one per sigma."""
    zw = family.zero_weight_invariant
    if len(zw) != family.space.lam + 1:
        raise StructureError(f"found {len(zw)} H-scalar tensors")
    return zw


def highest_weight_coefficient(family: TensorFamily, sigma: int) -> float:
    """``<hw| T_{sigma;0,0} |hw>``; positive by the phase convention."""
    if not 0 <= sigma <= family.space.lam:
        raise ValueError(f"sigma must lie in 0..{family.space.lam}")
    value = family.hw_coeff[sigma]
    if abs(value) < 1e-12:
        raise PhaseFixingError(f"C~_{sigma} vanishes")
    return float(value)


def verify_trace_orthonormality(family: TensorFamily) -> float:
    """Max over label pairs of ``|Tr(T_a^dagger T_b) - delta_ab|``."""
    flat = family.matrices.reshape(len(family.labels), -1)
    gram = flat.conj() @ flat.T
    return float(np.abs(gram - np.eye(len(gram))).max())
