"""Exact polynomial and rational-function arithmetic over Q and Q[a]."""
from .linsolve import ExactMatrix, RatFunc, exact_linear_solve
from .multipoly import A, L, ONE, Z, ZERO, MultiPoly, as_poly, format_rational, parse_rational
from .resultant import discriminant_z, resultant
from .roots import (
    cluster_roots, exact_roots_with_multiplicity, linear_factors_in_a, poly_roots_numeric,
    rational_roots,
)
from .singular import SingularRational, as_modulus, integrate_rational

__all__ = [
    "A", "ExactMatrix", "L", "MultiPoly", "ONE", "RatFunc", "SingularRational", "Z", "ZERO",
    "as_modulus", "as_poly", "cluster_roots", "discriminant_z", "exact_linear_solve",
    "exact_roots_with_multiplicity", "format_rational", "integrate_rational",
    "linear_factors_in_a", "parse_rational", "poly_roots_numeric", "rational_roots", "resultant",
]
