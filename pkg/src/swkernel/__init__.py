"""s-ordered Stratonovich-Weyl kernels for symmetric irreps (lambda, 0, ..., 0) of SU(n)."""

from __future__ import annotations

from .coset import (
    CosetGrid,
    CosetPoint,
    GroupElement,
    UnsupportedGridError,
    coset_element,
    coset_grid,
    coset_volume,
    default_resolution,
)
from .irrep import IrrepSpace, adjoint_block_dim, dim_symmetric, generator_matrix
from .kernel import KernelCoefficients, chi_table, kernel_coefficients, p_operator
from .phase_space import (
    AxiomReport,
    BandLimitError,
    PhaseSpaceMap,
    Reconstruction,
    SymbolField,
    axiom_report,
    distortion_table,
    reconstruct,
    symbol_field,
)
from .tensors import (
    PhaseFixingError,
    StructureError,
    TensorFamily,
    TensorLabel,
    decompose_tensor_family,
    verify_trace_orthonormality,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "BandLimitError",
    "CosetGrid",
    "CosetPoint",
    "GroupElement",
    "IrrepSpace",
    "KernelCoefficients",
    "PhaseFixingError",
    "PhaseSpaceMap",
    "Reconstruction",
    "StructureError",
    "SymbolField",
    "TensorFamily",
    "TensorLabel",
    "UnsupportedGridError",
    "adjoint_block_dim",
    "axiom_report",
    "chi_table",
    "coset_element",
    "coset_grid",
    "coset_volume",
    "decompose_tensor_family",
    "default_resolution",
    "dim_symmetric",
    "distortion_table",
    "generator_matrix",
    "kernel_coefficients",
    "p_operator",
    "reconstruct",
    "symbol_field",
    "verify_trace_orthonormality",
]
