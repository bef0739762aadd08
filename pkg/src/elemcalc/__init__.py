"""Exact calculus of elementary operators ``T -> sum A_i T B_i`` on rational
matrices: lengths, annihilators, pencil canonical forms and inverses."""

from .annihil import AnnihilatorReport, ChainSolution, annihilate, chain_annihilator
from .elemop import ElemOp, as_operator_matrix, compose, length, minimize
from .exactnum import Matrix, Polynomial, det, inverse, kernel_basis, rank, rref
from .invert import (
    InverseReport,
    biorthogonal_decomposition,
    classify_inverse,
    derivation_inverse,
    inverse_elemop,
    sum_of_invertibles,
    upsilon_inverse,
)
from .pencil import CanonicalForm, PencilSpace, canonical_form

__all__ = [
    "AnnihilatorReport",
    "CanonicalForm",
    "ChainSolution",
    "ElemOp",
    "InverseReport",
    "Matrix",
    "PencilSpace",
    "Polynomial",
    "annihilate",
    "as_operator_matrix",
    "biorthogonal_decomposition",
    "canonical_form",
    "chain_annihilator",
    "classify_inverse",
    "compose",
    "derivation_inverse",
    "det",
    "inverse",
    "inverse_elemop",
    "kernel_basis",
    "length",
    "minimize",
    "rank",
    "rref",
    "sum_of_invertibles",
    "upsilon_inverse",
]
