"""Numerical evaluation of the closed-form solution pair and its checks."""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from ..algebra.roots import poly_roots_numeric
from ..algebra.singular import as_modulus
from ..curve import BranchPointRecord, SpectralCurve, nu_squared
from ..errors import PathTooCloseToZero, TooCloseToSingularity
from ..psi import Characteristics, PsiPolynomial
from .paths import QuadraturePath, build_path, _seg_distance
from .quadrature import tanh_sinh

QUAD_TOL = 1e-12
MAX_SPLIT_DEPTH = 30


@dataclass
class SolutionValue:
    """Values of the solution pair at ``z`` with the branch data used to get them."""

    Y1: complex
    Y2: complex
    lam: complex
    z: complex
    sqrt_psi: complex
    sqrt_D: complex
    integral: complex
    nu: complex
    branch: dict = field(default_factory=dict)

    @property
    def product(self) -> complex:
        return self.Y1 * self.Y2


@dataclass
class _State:
    z: complex
    factors: dict       # center -> continued sqrt(z - center)
    J: complex
    sign_D: int
    sign_psi: int


def _sqrt(x):
    return np.sqrt(np.asarray(x, dtype=complex))


class ClosedFormSolutions:
    """Solution pair ``sqrt(Psi) exp(+-i nu J / 2)`` for one (m, lambda, a).

    In degenerate mode (``record`` given) the pair is ``sqrt(Psi)`` and
    ``sqrt(Psi) * J`` with ``J`` the same integral without the factor nu.
    """

    def __init__(self, psi: PsiPolynomial, lam, a=None, curve: SpectralCurve | None = None,
                 record: BranchPointRecord | None = None, base=None, tol: float = QUAD_TOL):
        self.m = psi.characteristics
        av = psi.a if psi.a is not None else as_modulus(a)
        if av is None:
            raise ValueError("numeric evaluation needs a rational modulus")
        self.a_exact = av
        self.a = complex(av)
        self.psi = psi
        self.lam = complex(lam)
        self.tol = tol
        self.record = record
        self.singular = (0j, 1 + 0j, self.a)
        m = self.m
        self.powers = (m.m1, m.m2, m.m3)
        if record is None:
            coeffs = psi.z_poly_numeric(self.lam, av)
            while len(coeffs) > 1 and coeffs[-1] == 0:
                coeffs.pop()
            self.psi_coeffs = np.array(coeffs, dtype=complex)
            self.lead = complex(coeffs[-1])
            self.zeros = tuple(poly_roots_numeric(coeffs)) if len(coeffs) > 1 else ()
            if curve is None:
                curve = nu_squared(psi)
            self.nu = complex(cmath.sqrt(curve.evaluate(self.lam, av)))
        else:
            self.F = np.array(record.F_coeffs(), dtype=complex)
            self.scale = complex(record.scale if not hasattr(record.scale, "evaluate")
                                 else record.scale.evaluate(a=self.a))
            self.zeros = tuple(poly_roots_numeric(self.F)) if len(self.F) > 1 else ()
            self.nu = 0j
        self.obstacles = self.zeros
        self.base = self._default_base() if base is None else complex(base)

    # -- geometry ---------------------------------------------------------
    def _integrable_at(self, c_index: int) -> bool:
        if self.record is None:
            return True
        return self.record.multiplicities[c_index + 1] == 0

    def _default_base(self) -> complex:
        for i, c in enumerate(self.singular):
            if self._integrable_at(i):
                return c
        for cand in (-0.5, 0.5j, -0.5j, 2j, -2j):
            if min(abs(cand - p) for p in self.singular + self.zeros) > 0.1:
                return complex(cand)
        return complex(-1 - 1j)

    def path_to(self, z, side: int = 1) -> QuadraturePath:
        return build_path(self.base, z, self.singular, self.obstacles, side=side)

    # -- square roots -----------------------------------------------------
    def _psi_centers(self):
        return self.zeros if self.record is None else ()

    def _centers(self):
        return self.singular + self._psi_centers()

    def _initial_factors(self, start):
        return {c: complex(cmath.sqrt(start - c)) for c in self._centers()}

    def _sqrt_D_from(self, fac, sign):
        return sign * fac[0j] * fac[1 + 0j] * fac[self.a]

    def _sqrt_psi_from(self, fac, z, sign):
        if self.record is None:
            out = sign * cmath.sqrt(self.lead)
            for c in self.zeros:
                out *= fac[c]
            return out
        out = sign * cmath.sqrt(self.scale) * np.polyval(self.F[::-1], z)
        for c, M in zip(self.singular, self.record.multiplicities[1:]):
            out *= fac[c] ** M
        return out

    def _psi_value(self, z):
        if self.record is None:
            return np.polyval(self.psi_coeffs[::-1], z)
        out = self.scale * np.polyval(self.F[::-1], z) ** 2
        for c, M in zip(self.singular, self.record.multiplicities[1:]):
            out *= (z - c) ** M
        return out

    def _signs(self, start, toward):
        """Overall signs making both square roots principal just after ``start``
        in the direction of ``toward``."""
        step = toward - start
        probe = start + 1e-6 * step / max(abs(step), 1.0) if step != 0 else start
        fac = self._continue(start, probe, self._initial_factors(start))
        d = self._sqrt_D_from(fac, 1)
        dv = cmath.sqrt(probe * (probe - 1) * (probe - self.a))
        sD = 1 if abs(d - dv) <= abs(d + dv) else -1
        p = self._sqrt_psi_from(fac, probe, 1)
        pv = cmath.sqrt(self._psi_value(probe))
        sP = 1 if abs(p - pv) <= abs(p + pv) else -1
        return sD, sP

    def _continue(self, A, B, fac_A):
        out = {}
        for c in self._centers():
            if A == c:
                out[c] = complex(cmath.sqrt(B - A))
            elif B == c:
                out[c] = 0j
            else:
                out[c] = fac_A[c] * complex(cmath.sqrt((B - c) / (A - c)))
        return out

    # -- integration ------------------------------------------------------
    def _segment(self, A, B, fac_A, sign_D, depth=0):
        """Integral of a0/(Psi sqrt D) over [A, B] and factor values at B."""
        d = B - A
        near = [p for p in self._centers() if p != A and p != B]
        if near and depth < MAX_SPLIT_DEPTH:
            dist = min(_seg_distance(p, A, B) for p in near)
            if dist < 0.5 * abs(d):
                M = A + 0.5 * d
                J1, fac_M = self._segment(A, M, fac_A, sign_D, depth + 1)
                J2, fac_B = self._segment(M, B, fac_M, sign_D, depth + 1)
                return J1 + J2, fac_B
        centers = self._centers()
        m_pow = dict(zip(self.singular, self.powers))
        M_pow = dict(zip(self.singular, self.record.multiplicities[1:])) if self.record else {}

        def integrand(s, sc):
            z = np.where(s <= 0.5, A + s * d, B - sc * d)
            sqrtD = np.full(s.shape, complex(sign_D))
            a0 = np.ones(s.shape, dtype=complex)
            extra = np.ones(s.shape, dtype=complex)
            for c in self.singular:
                if A == c:
                    delta = s * d
                    f = np.sqrt(s) * cmath.sqrt(d)
                elif B == c:
                    delta = -sc * d
                    f = fac_A[c] * np.sqrt(sc)
                else:
                    delta = z - c
                    f = fac_A[c] * _sqrt(delta / (A - c))
                sqrtD = sqrtD * f
                if m_pow[c]:
                    a0 = a0 * delta ** m_pow[c]
                if M_pow.get(c):
                    extra = extra * delta ** M_pow[c]
            if self.record is None:
                psi = np.polyval(self.psi_coeffs[::-1], z)
            else:
                psi = self.scale * extra * np.polyval(self.F[::-1], z) ** 2
            return a0 / (psi * sqrtD)

        val, _, _ = tanh_sinh(integrand, tol=self.tol)
        return complex(val * d), self._continue(A, B, fac_A)

    def state_along(self, path: QuadraturePath) -> _State:
        start = path.start
        toward = path.vertices[1] if len(path.vertices) > 1 else start
        sD, sP = self._signs(start, toward)
        fac = self._initial_factors(start)
        J = 0j
        for A, B in path.segments():
            dJ, fac = self._segment(A, B, fac, sD)
            J += dJ
        return _State(path.end, fac, J, sD, sP)

    def extend(self, state: _State, w) -> _State:
        w = complex(w)
        if w == state.z:
            return state
        for p in self._centers():
            if p != state.z and _seg_distance(p, state.z, w) == 0:
                raise PathTooCloseToZero(f"tail segment hits {p}")
        dJ, fac = self._segment(state.z, w, state.factors, state.sign_D)
        return _State(w, fac, state.J + dJ, state.sign_D, state.sign_psi)

    def value_at(self, state: _State) -> SolutionValue:
        z = state.z
        sp = complex(self._sqrt_psi_from(state.factors, z, state.sign_psi))
        sD = complex(self._sqrt_D_from(state.factors, state.sign_D))
        if self.record is None:
            phase = 0.5j * self.nu * state.J
            Y1, Y2 = sp * cmath.exp(phase), sp * cmath.exp(-phase)
        else:
            Y1, Y2 = sp, sp * state.J
        return SolutionValue(Y1, Y2, self.lam, z, sp, sD, state.J, self.nu, dict(state.factors))

    def evaluate(self, z, path: QuadraturePath | None = None) -> SolutionValue:
        if path is None:
            path = self.path_to(z)
        return self.value_at(self.state_along(path))

    def local(self, z, path: QuadraturePath | None = None) -> "LocalEvaluator":
        if path is None:
            path = self.path_to(z)
        return LocalEvaluator(self, self.state_along(path))


class LocalEvaluator:
    """Solution values near an anchor, continued from the anchor by short tails."""

    def __init__(self, sol: ClosedFormSolutions, state: _State):
        self.solution = sol
        self.state = state
        self.obstacles = sol.singular + sol.obstacles
        self._cache = {}

    def at(self, w) -> SolutionValue:
        w = complex(w)
        if w not in self._cache:
            self._cache[w] = self.solution.value_at(self.solution.extend(self.state, w))
        return self._cache[w]

    def y1(self, w) -> complex:
        return self.at(w).Y1

    def y2(self, w) -> complex:
        return self.at(w).Y2

    def component(self, which: int):
        """Callable for Y1 (``which=1``) or Y2 (``which=2``) that keeps this evaluator."""
        return _Component(self, which)


class _Component:
    def __init__(self, ev: LocalEvaluator, which: int):
        self.evaluator = ev
        self.which = which
        self.obstacles = ev.obstacles

    def __call__(self, w) -> complex:
        v = self.evaluator.at(w)
        return v.Y1 if self.which == 1 else v.Y2


# -- public operations ---------------------------------------------------------

def eval_solutions(psi: PsiPolynomial, curve: SpectralCurve | None, lam, z,
                   path: QuadraturePath | None = None, a=None, base=None) -> SolutionValue:
    """Closed-form solution pair at ``z`` for a non-degenerate accessory value."""
    sol = ClosedFormSolutions(psi, lam, a, curve=curve, base=base)
    return sol.evaluate(z, path)


def eval_degenerate(psi: PsiPolynomial, record: BranchPointRecord, z,
                    path: QuadraturePath | None = None, a=None, base=None) -> SolutionValue:
    """``Y1 = sqrt(Psi)`` and ``Y2 = sqrt(Psi) * J`` at a branch point."""
    av = record.a if record.a is not None else as_modulus(a)
    lam = record.lam
    if hasattr(lam, "evaluate"):
        lam = lam.evaluate(a=complex(av))
    sol = ClosedFormSolutions(psi, lam, av, record=record, base=base)
    return sol.evaluate(z, path)


def _coefficients(m, lam, a, z):
    m = Characteristics.of(m)
    a = complex(a)
    P = 0.5 * ((1 - 2 * m.m1) / z + (1 - 2 * m.m2) / (z - 1) + (1 - 2 * m.m3) / (z - a))
    Q = (m.N * (m.N - 2 * m.m0 - 1) * z + lam) / (4 * z * (z - 1) * (z - a))
    return P, Q


def _step(a, z, evaluator, h):
    pts = [0j, 1 + 0j, complex(a)] + list(getattr(evaluator, "obstacles", ()))
    dist = min(abs(z - p) for p in pts)
    if h is None:
        h = 5e-2 * dist
    if dist == 0 or dist < 10 * h:
        raise TooCloseToSingularity(f"z = {z} is within {dist:.2e} of a singular point (h = {h:.1e})")
    return h


def _derivatives(f, z, h):
    """Richardson-extrapolated first and second central differences."""
    def d1(k):
        return (f(z + k) - f(z - k)) / (2 * k)

    def d2(k, f0):
        return (f(z + k) - 2 * f0 + f(z - k)) / (k * k)

    f0 = f(z)
    a1 = [d1(h / 2 ** i) for i in range(3)]
    a2 = [d2(h / 2 ** i, f0) for i in range(3)]

    def rich(v):
        r1 = (4 * v[1] - v[0]) / 3
        r2 = (4 * v[2] - v[1]) / 3
        return (16 * r2 - r1) / 15

    return f0, rich(a1), rich(a2)


def ode_residual(m, lam, a, evaluator, z, h: float | None = None) -> float:
    """Relative residual of the Heun equation for ``evaluator`` at ``z``.

    The step defaults to 5e-2 of the distance to the nearest singular point
    or zero of Psi (if the evaluator exposes them as ``obstacles``).
    """
    z = complex(z)
    lam = complex(lam)
    h = _step(a, z, evaluator, h)
    y, dy, d2y = _derivatives(evaluator, z, h)
    P, Q = _coefficients(m, lam, a, z)
    terms = (abs(d2y), abs(P * dy), abs(Q * y))
    big = max(terms)
    if big == 0:
        return 0.0
    return abs(d2y + P * dy + Q * y) / big


def wronskian_check(m, lam, a, Y1, Y2, z, h: float | None = None) -> float:
    """Relative deviation of the finite-difference Wronskian from
    ``-i nu a0(z) / sqrt(D(z))`` with the branches of the evaluation record."""
    z = complex(z)
    lam = complex(lam)
    h = _step(a, z, Y1, h)
    y1, d1, _ = _derivatives(Y1, z, h)
    y2, d2, _ = _derivatives(Y2, z, h)
    W = y1 * d2 - y2 * d1
    m = Characteristics.of(m)
    ac = complex(a)
    a0 = z ** m.m1 * (z - 1) ** m.m2 * (z - ac) ** m.m3
    ev = getattr(Y1, "evaluator", None)
    if ev is not None:
        rec = ev.at(z)
        nu, sD = rec.nu, rec.sqrt_D
    else:
        from ..psi import build_psi
        nu = cmath.sqrt(nu_squared(build_psi(m, as_modulus(a))).evaluate(lam))
        sD = cmath.sqrt(z * (z - 1) * (z - ac))
    expected = -1j * nu * a0 / sD
    scale = max(abs(expected), abs(W))
    if scale < 1e-300:
        return 0.0
    if abs(expected) < 1e-14 * max(abs(y1 * d2), abs(y2 * d1), 1e-300):
        # dependent pair: compare against the size of the individual products
        return abs(W) / max(abs(y1 * d2), abs(y2 * d1), 1e-300)
    return abs(W - expected) / abs(expected)
