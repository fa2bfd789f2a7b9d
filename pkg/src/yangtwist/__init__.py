"""Exact factorizing twists and R-matrices for evaluation modules of the sl2 Yangian."""
from .evaluation import EvalRep, coproduct_op, full_basis, qdet_scalar, weight_block
from .exact import PoleError, SpectralPoly, format_rational, parse_rational
from .linalg import Matrix
from .report import CheckReport
from .rmatrix import check_intertwiner, check_unitarity, check_ybe, r_matrix
from .sl2 import HighestWeight
from .spectra import existence_profile, is_reducible, scan_poles
from .twist import (TwistParams, TwistVariant, build_twist, build_twist_block,
                    check_cocommutativity, expected_twisted_coproduct, twisted_coproduct)

__all__ = [
    "EvalRep", "HighestWeight", "Matrix", "SpectralPoly", "PoleError", "CheckReport",
    "TwistParams", "TwistVariant", "build_twist", "build_twist_block",
    "twisted_coproduct", "expected_twisted_coproduct", "check_cocommutativity",
    "r_matrix", "check_intertwiner", "check_unitarity", "check_ybe",
    "is_reducible", "existence_profile", "scan_poles",
    "coproduct_op", "full_basis", "weight_block", "qdet_scalar",
    "parse_rational", "format_rational",
]
