"""Exact integer-matrix analysis for linear configuration systems."""

from .classification import (
    MatrixClassification,
    classify_matrix,
    columns_condition,
    irredundancy_witness,
    is_irredundant,
)
from .exponents import MatrixExponent, m_of_matrix, threshold_exponent
from .model import (
    Echelon,
    IntegerMatrix,
    ap_matrix,
    bareiss_rank,
    rank_restricted,
    reduced_echelon,
    schur_matrix,
)
from .textio import dump_matrix, load_matrix, read_matrix, write_matrix

__all__ = [
    "MatrixClassification",
    "classify_matrix",
    "columns_condition",
    "irredundancy_witness",
    "is_irredundant",
    "MatrixExponent",
    "m_of_matrix",
    "threshold_exponent",
    "Echelon",
    "IntegerMatrix",
    "ap_matrix",
    "bareiss_rank",
    "rank_restricted",
    "reduced_echelon",
    "schur_matrix",
    "dump_matrix",
    "load_matrix",
    "read_matrix",
    "write_matrix",
]
