"""Exact torsion + nilpotent matrix decompositions over Q and GF(p)."""

from .construct import (
    BlockParams,
    GroupPlan,
    Variant,
    build_canonical_A,
    build_N,
    build_T,
    choose_params,
    descend_step,
    expected_charpoly,
    valid_params,
)
from .decompose import (
    BlockPlan,
    Decomposition,
    VerifyReport,
    decompose_companion,
    decompose_companion_matrix,
    decompose_nilpotent,
    pack_blocks,
    torsion_order,
    verify,
)
from .field import GF, QQ, PrimeField, Rationals, Scalar, parse_scalar, scalar_arith
from .jordan import JordanData, is_nilpotent, jordan_structure
from .linalg import Matrix, Polynomial, charpoly, companion
from .oracle import brute_force_decompose, classify_all

__all__ = [
    "BlockParams",
    "BlockPlan",
    "Decomposition",
    "GF",
    "GroupPlan",
    "JordanData",
    "Matrix",
    "Polynomial",
    "PrimeField",
    "QQ",
    "Rationals",
    "Scalar",
    "Variant",
    "VerifyReport",
    "brute_force_decompose",
    "build_N",
    "build_T",
    "build_canonical_A",
    "charpoly",
    "choose_params",
    "classify_all",
    "companion",
    "decompose_companion",
    "decompose_companion_matrix",
    "decompose_nilpotent",
    "descend_step",
    "expected_charpoly",
    "is_nilpotent",
    "jordan_structure",
    "pack_blocks",
    "parse_scalar",
    "scalar_arith",
    "torsion_order",
    "valid_params",
    "verify",
]
