"""Floating-point evaluation of the closed-form solutions and monodromy."""
from .monodromy import (MonodromyData, connection_angles, monodromy_generators,
                        reflection, rotation)
from .paths import QuadraturePath, build_path
from .quadrature import tanh_sinh
from .solutions import (ClosedFormSolutions, LocalEvaluator, SolutionValue,
                        eval_degenerate, eval_solutions, ode_residual, wronskian_check)

__all__ = [
    "ClosedFormSolutions", "LocalEvaluator", "MonodromyData", "QuadraturePath",
    "SolutionValue", "build_path", "connection_angles", "eval_degenerate",
    "eval_solutions", "monodromy_generators", "ode_residual", "reflection",
    "rotation", "tanh_sinh", "wronskian_check",
]
