"""Connection angles and monodromy generators for real nu and a > 1."""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..algebra.singular import as_modulus
from ..curve import SpectralCurve, nu_squared
from ..errors import OutsideValidatedRegime
from ..psi import PsiPolynomial
from .paths import QuadraturePath, build_path
from .solutions import ClosedFormSolutions

ANGLE_TOL = 1e-12
BRANCH_RTOL = 1e-10

M0 = np.array([[1.0, 0.0], [0.0, -1.0]])


def rotation(angle) -> np.ndarray:
    c, s = cmath.cos(angle), cmath.sin(angle)
    return _tidy(np.array([[c, -s], [s, c]], dtype=complex))


def reflection(angle) -> np.ndarray:
    """``R(angle) diag(1, -1) R(angle)^-1``."""
    c, s = cmath.cos(2 * angle), cmath.sin(2 * angle)
    return _tidy(np.array([[c, s], [s, -c]], dtype=complex))


def _tidy(mat: np.ndarray) -> np.ndarray:
    if np.all(np.abs(mat.imag) == 0):
        return mat.real.copy()
    return mat


@dataclass
class MonodromyData:
    phi: complex
    psi: complex
    T01: np.ndarray
    T02: np.ndarray
    M0: np.ndarray
    M1: np.ndarray
    M2: np.ndarray

    def generators(self) -> dict:
        return {"M0": self.M0, "M1": self.M1, "M2": self.M2}

    def to_json(self) -> dict:
        def enc(x):
            x = complex(x)
            return {"re": x.real, "im": x.imag}

        def mat(mm):
            return [[enc(v) for v in row] for row in np.asarray(mm)]

        return {"phi": enc(self.phi), "psi": enc(self.psi),
                "T01": mat(self.T01), "T02": mat(self.T02),
                "M0": mat(self.M0), "M1": mat(self.M1), "M2": mat(self.M2)}


def _check_regime(psi: PsiPolynomial, curve: SpectralCurve, lam, a):
    if any(x < 0 for x in psi.characteristics):
        raise OutsideValidatedRegime("characteristics must be non-negative")
    if a is None or not isinstance(a, Fraction) or a <= 1:
        raise OutsideValidatedRegime("a must be a real number greater than 1")
    lam_c = complex(lam)
    if lam_c.imag != 0:
        raise OutsideValidatedRegime("lambda must be real")
    nu2 = curve.evaluate(lam_c.real, a)
    scale = max(abs(c.evaluate(a=float(a))) * abs(lam_c) ** k
                for k, c in enumerate(curve.coefficients()))
    if abs(nu2.imag) > BRANCH_RTOL * scale or nu2.real < 0:
        raise OutsideValidatedRegime(f"nu^2({lam_c.real}) = {nu2.real:.6g} is negative")
    if abs(nu2) <= BRANCH_RTOL * scale:
        raise OutsideValidatedRegime("lambda is a branch point of the curve")
    return lam_c.real


def connection_angles(psi: PsiPolynomial, curve: SpectralCurve | None, lam, a=None,
                      path_c: QuadraturePath | None = None, tol: float = ANGLE_TOL):
    """``(phi, psi)``: half of nu times the integral over [0, 1] and over a
    path from 0 to a (by default with upper half-plane detours)."""
    av = psi.a if psi.a is not None else as_modulus(a)
    if curve is None:
        curve = nu_squared(psi)
    lam = _check_regime(psi, curve, lam, av)
    sol = ClosedFormSolutions(psi, lam, av, curve=curve, base=0, tol=tol)
    path01 = build_path(0, 1, sol.singular, sol.obstacles)
    if path_c is None:
        path_c = build_path(0, complex(av), sol.singular, sol.obstacles, side=1)
    path_c.validate()
    nu = abs(sol.nu)
    phi = 0.5 * nu * sol.state_along(path01).J
    psi_angle = 0.5 * nu * sol.state_along(path_c).J
    if abs(phi.imag) <= 1e-12 * max(1.0, abs(phi)):
        phi = complex(phi.real)
    return phi, psi_angle


def monodromy_generators(psi: PsiPolynomial, curve: SpectralCurve | None, lam, a=None,
                         path_c: QuadraturePath | None = None) -> MonodromyData:
    phi, psi_angle = connection_angles(psi, curve, lam, a, path_c)
    return MonodromyData(phi, psi_angle, rotation(phi), rotation(psi_angle),
                         M0.copy(), reflection(phi), reflection(psi_angle))
