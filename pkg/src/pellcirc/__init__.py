"""Exact determinants and inverses of Pell / Pell-Lucas circulant matrices.

Closed forms live in `closed_forms`; the structure-blind rational
elimination oracles they are checked against live in `linalg`.
"""

from .circulant import (
    Circulant,
    circ_det_via_eigen,
    circ_eigenvalues,
    circ_expand,
    first_row_of,
    is_circulant,
)
from .closed_forms import (
    FactorizationBundle,
    IntegrityError,
    PellLucasScalars,
    PellScalars,
    bidiagonal_inverse_pell,
    bidiagonal_inverse_pell_lucas,
    build_K,
    build_L,
    build_M,
    build_N,
    det_pell_closed,
    det_pell_lucas_closed,
    hankel_block_inverse_K,
    hankel_block_inverse_M,
    hessenberg_factorization,
    inv_pell_closed,
    inv_pell_lucas_closed,
    partial_sum_S,
    pell_circulant,
    pell_lucas_circulant,
    pell_lucas_scalars,
    pell_scalars,
    sequence_circulant,
    symbol_u,
    symbol_v,
)
from .linalg import (
    DenseMatrix,
    ShapeError,
    SingularMatrixError,
    det_rational_elim,
    direct_sum,
    mat_mul,
    oracle_det,
    oracle_inverse,
)
from .sequences import QuadInt, SequenceKind, alpha_power, pell, pell_lucas, sequence_prefix

__version__ = "0.1.0"

__all__ = [
    "Circulant",
    "DenseMatrix",
    "FactorizationBundle",
    "IntegrityError",
    "PellLucasScalars",
    "PellScalars",
    "QuadInt",
    "SequenceKind",
    "ShapeError",
    "SingularMatrixError",
    "alpha_power",
    "bidiagonal_inverse_pell",
    "bidiagonal_inverse_pell_lucas",
    "build_K",
    "build_L",
    "build_M",
    "build_N",
    "circ_det_via_eigen",
    "circ_eigenvalues",
    "circ_expand",
    "det_pell_closed",
    "det_pell_lucas_closed",
    "det_rational_elim",
    "direct_sum",
    "first_row_of",
    "hankel_block_inverse_K",
    "hankel_block_inverse_M",
    "hessenberg_factorization",
    "inv_pell_closed",
    "inv_pell_lucas_closed",
    "is_circulant",
    "mat_mul",
    "oracle_det",
    "oracle_inverse",
    "partial_sum_S",
    "pell",
    "pell_circulant",
    "pell_lucas",
    "pell_lucas_circulant",
    "pell_lucas_scalars",
    "pell_scalars",
    "sequence_circulant",
    "sequence_prefix",
    "symbol_u",
    "symbol_v",
]
