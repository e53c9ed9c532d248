"""Finite-gap solutions of Heun's equation with integer characteristics.

Exact construction of the spectral polynomial Psi(l, z), the hyperelliptic
curve nu^2(l), its branch points and Heun-polynomial degenerations, plus
floating-point evaluation of the closed-form solutions and monodromy.
"""
from .curve import (
    BranchPointRecord, SignClass, SpectralCurve, accessory_shift, back_shifted_eigenvalues,
    branch_factorize, branch_points, class_multiplicities, enumerate_nk, exact_branch_points,
    heun_determinant, heun_polynomial, heun_polynomial_eigenvalues, nu_squared,
    special_lambda_roots, stieltjes_checks,
)
from .errors import HeunError
from .flows import FlowSequence, NovikovData, apply_flow_operator, flow_sequence, novikov_order, potential_U
from .psi import (
    Characteristics, HeunParams, PsiPolynomial, ShiftData, build_psi, eq3_residual, genus,
    heun_params, leading_coefficient, normalize_characteristics,
)

__version__ = "0.1.0"

__all__ = [
    "BranchPointRecord", "Characteristics", "FlowSequence", "HeunError", "HeunParams",
    "NovikovData", "PsiPolynomial", "ShiftData", "SignClass", "SpectralCurve",
    "accessory_shift", "apply_flow_operator", "back_shifted_eigenvalues", "branch_factorize",
    "branch_points", "build_psi", "class_multiplicities", "enumerate_nk", "eq3_residual",
    "exact_branch_points", "flow_sequence", "genus", "heun_determinant", "heun_params",
    "heun_polynomial", "heun_polynomial_eigenvalues", "leading_coefficient",
    "normalize_characteristics", "novikov_order", "nu_squared", "potential_U",
    "special_lambda_roots", "stieltjes_checks",
]
