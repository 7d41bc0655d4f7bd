from .charpoly import charpoly
from .elementary import AddMultiple, Scale, SignRange, Swap, elementary
from .matrix import (
    Matrix,
    det,
    direct_sum,
    inverse,
    mat_op,
    mat_pow,
    nullspace,
    product,
    rank,
    row_echelon,
)
from .polynomial import Polynomial, companion, evaluate_at_matrix, poly_arith

__all__ = [
    "AddMultiple",
    "Matrix",
    "Polynomial",
    "Scale",
    "SignRange",
    "Swap",
    "charpoly",
    "companion",
    "det",
    "direct_sum",
    "elementary",
    "evaluate_at_matrix",
    "inverse",
    "mat_op",
    "mat_pow",
    "nullspace",
    "poly_arith",
    "product",
    "rank",
    "row_echelon",
]
