"""Exact arithmetic and witnesses in Leavitt path algebras over Q."""

from .algebra import Element, KernelError, Monomial, make_monomial, mul, normalize, star
from .matrix import (DimensionError, ElementMatrix, Witness, block_sum, column, diag,
                     mat_mul, matrix, row, scalar, verify_K_membership, verify_precsim,
                     witness_block_sum, zeros)
from .witness import (PreconditionError, SearchBudget, Unknown,
                      bounded_properly_infinite_search, constructive_properly_infinite,
                      reduce_to_vertex, subequivalence_from_path, vertex_double_witness,
                      vertex_properly_infinite_witness)

__all__ = [
    "Element",
    "KernelError",
    "Monomial",
    "make_monomial",
    "mul",
    "normalize",
    "star",
    "DimensionError",
    "ElementMatrix",
    "Witness",
    "block_sum",
    "column",
    "diag",
    "mat_mul",
    "matrix",
    "row",
    "scalar",
    "verify_K_membership",
    "verify_precsim",
    "witness_block_sum",
    "zeros",
    "PreconditionError",
    "SearchBudget",
    "Unknown",
    "bounded_properly_infinite_search",
    "constructive_properly_infinite",
    "reduce_to_vertex",
    "subequivalence_from_path",
    "vertex_double_witness",
    "vertex_properly_infinite_witness",
]
