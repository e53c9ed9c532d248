"""The hyperelliptic curve nu^2(lambda), its branch points, and the Heun
polynomials that appear when Psi degenerates at a branch point."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import upoly
from .algebra.multipoly import MultiPoly, Z, L, A, ONE, ZERO, as_poly, format_rational
from .algebra.resultant import discriminant_z
from .algebra.roots import (
    exact_roots_with_multiplicity, linear_factors_in_a, poly_roots_numeric, rational_roots,
)
from .algebra.singular import as_modulus, modulus_poly
from .errors import (
    BadMultiplicity, EmptyClass, NotDivisible, NotPerfectSquare, ZDependent,
)
from .psi import Characteristics, PsiPolynomial, equation_polys, leading_coefficient

NUMERIC_TOL = 1e-8


# -- the curve ----------------------------------------------------------------

@dataclass
class SpectralCurve:
    characteristics: Characteristics
    a: Fraction | None
    genus: int
    nu2: MultiPoly
    _branch: dict = field(default_factory=dict, repr=False, compare=False)

    def coefficients(self) -> list:
        """Coefficients of l^0 .. l^(2g+1), each a polynomial in a."""
        return self.nu2.coeff_list("l")

    def specialize(self, a) -> MultiPoly:
        a = as_modulus(a)
        if self.a is not None:
            if a != self.a:
                raise ValueError("curve already has a different numeric modulus")
            return self.nu2
        return self.nu2.subs("a", a)

    def evaluate(self, lam, a=None) -> complex:
        av = self.a if self.a is not None else a
        return self.nu2.evaluate(l=lam, a=complex(av) if av is not None else 0)

    def to_json(self) -> dict:
        out = {
            "characteristics": list(self.characteristics),
            "a": "symbolic" if self.a is None else format_rational(self.a),
            "genus": self.genus,
            "nu2": [c.to_text() for c in self.coefficients()],
            "nu2_text": self.nu2.to_text(),
        }
        if self._branch:
            key = next(iter(self._branch))
            out["branch_points"] = [{"re": z.real, "im": z.imag} for z in self._branch[key]]
            out["branch_a"] = format_rational(key)
            out["tolerance"] = 1e-12
        return out

    @classmethod
    def from_json(cls, data) -> "SpectralCurve":
        if isinstance(data, str):
            data = json.loads(data)
        a = None if data["a"] == "symbolic" else Fraction(data["a"])
        if "nu2_text" in data:
            nu2 = MultiPoly.parse(data["nu2_text"])
        else:
            # coefficient list, lowest power of l first
            nu2 = MultiPoly.const(0)
            for c in reversed(data["nu2"]):
                nu2 = nu2 * L + MultiPoly.parse(c)
        return cls(Characteristics.of(data["characteristics"]), a, int(data["genus"]), nu2)


def nu_squared(psi: PsiPolynomial) -> SpectralCurve:
    """``nu^2 = (2 D Psi Psi'' - D Psi'^2 + 2 Pn Psi Psi' + Qn Psi^2) / a0(z)^2``."""
    m = psi.characteristics
    D, Pn, Q0 = equation_polys(m, psi.a)
    P = psi.as_multipoly()
    d1 = P.diff("z")
    d2 = d1.diff("z")
    num = (D * P * d2).scale(2) - D * d1 * d1 + (Pn * P * d1).scale(2) + (Q0 + L) * P * P
    a0 = leading_coefficient(m, psi.a)
    q, r = num.divmod(a0 * a0, "z")
    if not r.is_zero():
        raise NotDivisible("numerator not divisible by the squared leading coefficient")
    if q.degree("z") > 0:
        raise ZDependent("nu^2 depends on z")
    return SpectralCurve(m, psi.a, psi.genus, q)


def branch_points(curve: SpectralCurve, a=None) -> list:
    """Roots of nu^2 at rational ``a`` (with multiplicity), cached on the curve."""
    av = curve.a if curve.a is not None else as_modulus(a)
    if av is None:
        raise ValueError("branch points need a rational modulus")
    if av not in curve._branch:
        out = []
        for r, mult in exact_roots_with_multiplicity(curve.specialize(av)):
            out.extend([r] * mult)
        curve._branch[av] = sorted(out, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    return list(curve._branch[av])


def exact_branch_points(curve: SpectralCurve, a=None) -> list:
    """Branch points that are exact: rational at numeric a, in Q[a] when symbolic."""
    av = curve.a if curve.a is not None else (None if a is None else as_modulus(a))
    if av is None:
        roots, _ = linear_factors_in_a(curve.nu2)
        return [r for r, _ in roots]
    return [MultiPoly.const(r) for r in rational_roots(curve.specialize(av))]


# -- sign classes ---------------------------------------------------------------

@dataclass(frozen=True)
class SignClass:
    pattern: tuple
    reduced: Characteristics
    count: int

    @property
    def degree(self) -> int:
        """Degree of the Heun polynomials of this class (one less than ``count``)."""
        return self.count - 1

    def to_json(self) -> dict:
        return {"pattern": list(self.pattern), "reduced": list(self.reduced),
                "count": self.count, "degree": self.degree}


def enumerate_nk(m) -> list:
    m = Characteristics.of(m)
    out = []
    for pattern in itertools.product((0, 1), repeat=4):
        red = tuple(-x - 1 if e else x for x, e in zip(m, pattern))
        s = sum(red)
        if s % 2:
            continue
        n = 1 + s // 2
        if n >= 1:
            out.append(SignClass(pattern, Characteristics(*red), n))
    return out


def class_multiplicities(m, sign_class: SignClass) -> tuple:
    """``M_i = 2 m_i + 1`` where the class flips characteristic i, else 0."""
    m = Characteristics.of(m)
    return tuple((2 * x + 1) if e else 0 for x, e in zip(m, sign_class.pattern))


def accessory_shift(m, M, a=None) -> MultiPoly:
    """``lam_tilde - lam`` for multiplicities M (the affine relation between accessories)."""
    m = Characteristics.of(m)
    av = modulus_poly(as_modulus(a))
    _, M1, M2, M3 = M
    _, m1, m2, m3 = m
    const = 2 * m1 * M3 + 2 * m3 * M1 - 2 * M1 * M3 - M1 - M3
    lin = 2 * m1 * M2 + 2 * m2 * M1 - 2 * M1 * M2 - M1 - M2
    return av.scale(lin) + const


# -- Heun polynomials ---------------------------------------------------------

def _tridiagonal(mt: Characteristics, d: int, av: MultiPoly):
    """Diagonal, sub-diagonal and super-diagonal of the degree-d eigenproblem."""
    S = mt.m1 + mt.m2 + mt.m3
    Nt = mt.N
    K = Nt * (Nt - 2 * mt.m0 - 1)
    B = (av + 1).scale(1 - 2 * mt.m1) + av.scale(1 - 2 * mt.m2) + (1 - 2 * mt.m3)
    diag = [(av + 1).scale(-4 * j * (j - 1)) - B.scale(2 * j) for j in range(d + 1)]
    sub = [Fraction(4 * j * j + 2 * j * (1 - 2 * S) + K) for j in range(d + 1)]
    sup = [av.scale(2 * j * (2 * j - 1 - 2 * mt.m1)) for j in range(d + 1)]
    return diag, sub, sup


def heun_determinant(mt, d: int, a=None) -> MultiPoly:
    """Characteristic polynomial in l whose roots are the accessory values
    admitting a degree-d polynomial solution (continuant recurrence)."""
    mt = Characteristics.of(mt)
    if d < 0:
        raise EmptyClass("negative degree")
    av = modulus_poly(as_modulus(a))
    diag, sub, sup = _tridiagonal(mt, d, av)
    prev, cur = ONE, diag[0] + L
    for k in range(1, d + 1):
        prev, cur = cur, (diag[k] + L) * cur - (sup[k] * sub[k - 1]) * prev
    return cur


def heun_polynomial(mt, d: int, lam, a=None):
    """Monic degree-d polynomial solution for accessory ``lam``.

    Exact (MultiPoly in z over Q[a]) when ``lam`` is exact, otherwise a
    tuple of complex coefficients, lowest degree first.
    """
    mt = Characteristics.of(mt)
    a = as_modulus(a)
    av = modulus_poly(a)
    diag, sub, sup = _tridiagonal(mt, d, av)
    exact = isinstance(lam, (MultiPoly, Fraction, int))
    if exact:
        lam = as_poly(lam)
        c = [ZERO] * (d + 2)
        c[d] = ONE
        # row j+1 of the system fixes c_j; the sub-diagonal is a nonzero rational
        for j in range(d - 1, -1, -1):
            if sub[j] == 0:
                raise EmptyClass(f"degree {d} is not attainable for ({mt}): recursion breaks at j = {j}")
            acc = (diag[j + 1] + lam) * c[j + 1]
            if j + 2 <= d:
                acc = acc + sup[j + 2] * c[j + 2]
            c[j] = acc.scale(Fraction(-1) / sub[j])
        F = ZERO
        for j in range(d + 1):
            F = F + c[j] * Z ** j
        return F
    if a is None:
        raise ValueError("numeric accessory needs a numeric modulus")
    dg = [complex(x.constant_value()) for x in diag]
    sp = [complex(x.constant_value()) for x in sup]
    c = [0j] * (d + 2)
    c[d] = 1
    for j in range(d - 1, -1, -1):
        if sub[j] == 0:
            raise EmptyClass(f"degree {d} is not attainable for ({mt}): recursion breaks at j = {j}")
        acc = (dg[j + 1] + lam) * c[j + 1]
        if j + 2 <= d:
            acc += sp[j + 2] * c[j + 2]
        c[j] = -acc / float(sub[j])
    return tuple(c[: d + 1])


@dataclass(frozen=True)
class HeunPolynomialSolution:
    eigenvalue: object     # MultiPoly (exact) or complex
    polynomial: object     # MultiPoly (exact) or tuple of complex
    exact: bool


def heun_polynomial_eigenvalues(mt, d: int, a=None) -> list:
    """Accessory values with a degree-d polynomial solution, each with its monic F.

    For symbolic ``a`` only eigenvalues that are polynomials in a are
    returned; at rational ``a`` rational eigenvalues are exact and the rest
    numeric.
    """
    mt = Characteristics.of(mt)
    if d < 0:
        raise EmptyClass(f"class with degree {d}")
    a = as_modulus(a)
    det = heun_determinant(mt, d, a)
    out = []
    if a is None:
        roots, _ = linear_factors_in_a(det)
        for r, mult in roots:
            F = heun_polynomial(mt, d, r, a)
            out.extend([HeunPolynomialSolution(r, F, True)] * mult)
        return out
    poly = upoly.from_multipoly(det, "l") if det.variables() else [det.constant_value()]
    for f, mult in upoly.q_squarefree(poly):
        for q in rational_roots(f):
            r = MultiPoly.const(q)
            sol = HeunPolynomialSolution(r, heun_polynomial(mt, d, r, a), True)
            out.extend([sol] * mult)
            f, _ = upoly.q_divmod(f, [-q, Fraction(1)])
        if len(f) <= 1:
            continue
        for r in poly_roots_numeric([complex(c) for c in f]):
            sol = HeunPolynomialSolution(r, heun_polynomial(mt, d, r, a), False)
            out.extend([sol] * mult)
    return out


def back_shifted_eigenvalues(m, a) -> list:
    """Union over sign classes of eigenvalues mapped back to the original accessory."""
    m = Characteristics.of(m)
    a = as_modulus(a)
    out = []
    for sc in enumerate_nk(m):
        shift = accessory_shift(m, class_multiplicities(m, sc), a)
        for sol in heun_polynomial_eigenvalues(sc.reduced, sc.degree, a):
            if sol.exact:
                out.append(sol.eigenvalue - shift)
            else:
                out.append(sol.eigenvalue - complex(shift.constant_value()))
    return out


# -- factorisation at a branch point ------------------------------------------

@dataclass(frozen=True)
class BranchPointRecord:
    """``Psi(lam, z) = scale * z^M1 (z-1)^M2 (z-a)^M3 * F(z)^2`` with monic F."""

    lam: object
    multiplicities: tuple
    reduced: Characteristics
    F: object
    scale: object
    lam_tilde: object
    exact: bool
    a: Fraction | None = None

    @property
    def degree(self) -> int:
        if self.exact:
            return self.F.degree("z")
        return len(self.F) - 1

    @property
    def count(self) -> int:
        return self.degree + 1

    def F_coeffs(self) -> list:
        """F as complex coefficients (lowest first); needs numeric a when exact."""
        if not self.exact:
            return list(self.F)
        av = complex(self.a) if self.a is not None else None
        return [complex(c.evaluate(a=av)) for c in self.F.coeff_list("z")]

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, MultiPoly):
                return v.to_text()
            if isinstance(v, complex):
                return {"re": v.real, "im": v.imag}
            return v
        return {
            "lambda": enc(self.lam),
            "multiplicities": list(self.multiplicities),
            "reduced": list(self.reduced),
            "F": self.F.to_text() if self.exact else [enc(c) for c in self.F],
            "scale": enc(self.scale) if not isinstance(self.scale, Fraction) else format_rational(self.scale),
            "lambda_tilde": enc(self.lam_tilde),
            "degree": self.degree,
            "count": self.count,
            "exact": self.exact,
            "tolerance": 0.0 if self.exact else NUMERIC_TOL,
        }


def _exact_valuation(P: MultiPoly, root: MultiPoly):
    k = 0
    while not P.is_zero() and P.degree("z") >= 1:
        q, r = P.divmod(Z - root, "z")
        if not r.is_zero():
            break
        P, k = q, k + 1
    return k, P


def _poly_sqrt_exact(R: MultiPoly) -> MultiPoly:
    """Monic square root of a monic polynomial in z (coefficients over Q[a])."""
    n2 = R.degree("z")
    if n2 % 2:
        raise NotPerfectSquare("odd degree")
    n = n2 // 2
    r = R.coeff_list("z")
    f = [ZERO] * (n + 1)
    f[n] = ONE
    for k in range(1, n + 1):
        acc = r[n2 - k]
        for i in range(1, k):
            acc = acc - f[n - i] * f[n - k + i]
        f[n - k] = acc.scale(Fraction(1, 2))
    F = MultiPoly.from_coeffs("z", f)
    if F * F != R:
        raise NotPerfectSquare("polynomial is not a square")
    return F


def _taylor(coeffs, p):
    """Coefficients of P(p + w) in w."""
    c = np.array(coeffs, dtype=complex)
    out = []
    for _ in range(len(c)):
        val = np.polyval(c[::-1], p)
        out.append(val)
        c = np.polynomial.polynomial.polyder(c) if len(c) > 1 else np.array([0j])
        c = c / (len(out))
    return out


def _deflate(coeffs, root, times):
    c = list(coeffs)
    for _ in range(times):
        q = [0j] * (len(c) - 1)
        acc = 0j
        for i in range(len(c) - 1, 0, -1):
            acc = acc * root + c[i]
            q[i - 1] = acc
        c = q
    return c


def _poly_sqrt_numeric(R, tol):
    n2 = len(R) - 1
    if n2 % 2:
        raise NotPerfectSquare("odd degree")
    n = n2 // 2
    f = [0j] * (n + 1)
    f[n] = 1
    for k in range(1, n + 1):
        acc = R[n2 - k]
        for i in range(1, k):
            acc -= f[n - i] * f[n - k + i]
        f[n - k] = acc / 2
    f = np.array(f, dtype=complex)
    R = np.array(R, dtype=complex)
    # Gauss-Newton on F^2 = R with F kept monic
    for _ in range(4):
        resid = np.polynomial.polynomial.polymul(f, f) - R
        J = np.zeros((n2 + 1, n), dtype=complex)
        for j in range(n):
            J[j:j + n + 1, j] = 2 * f
        step = np.linalg.lstsq(J, resid, rcond=None)[0]
        f[:n] -= step
    sq = np.polynomial.polynomial.polymul(f, f)
    err = np.max(np.abs(sq - R)) / max(np.max(np.abs(R)), 1.0)
    if err > tol:
        raise NotPerfectSquare(f"square-root residual {err:.2e}")
    return tuple(complex(x) for x in f)


def branch_factorize(psi: PsiPolynomial, lam, a=None, tol: float = NUMERIC_TOL) -> BranchPointRecord:
    """Split Psi at a branch point into singular factors times a square."""
    m = psi.characteristics
    N = m.N
    av_mod = psi.a if psi.a is not None else (None if a is None else as_modulus(a))
    exact = isinstance(lam, (MultiPoly, Fraction, int))
    if exact:
        lam = as_poly(lam)
        if av_mod is not None and psi.a is None:
            psi = psi.specialize(av_mod)
            lam = lam.subs("a", av_mod)
        P = psi.at_lambda(lam)
        degP = P.degree("z")
        M0 = N - degP
        Ms = [M0]
        rest = P
        for p in (ZERO, ONE, modulus_poly(psi.a)):
            k, rest = _exact_valuation(rest, p)
            Ms.append(k)
        scale = rest.leading_coeff("z")
        if scale.is_constant():
            monic = rest.scale(1 / scale.constant_value())
            scale = scale.constant_value()
        else:
            monic = ZERO
            for e, coef in rest.coeffs_in("z").items():
                q, r = coef.divmod(scale, "a")
                if not r.is_zero():
                    raise ValueError("monic part is not polynomial in a; specialise a first")
                monic = monic + q * Z ** e
        F = _poly_sqrt_exact(monic)
        lam_value = lam
    else:
        if av_mod is None:
            raise ValueError("numeric branch point needs a rational modulus")
        lam = complex(lam)
        coeffs = psi.z_poly_numeric(lam, av_mod)
        big = max(abs(x) for x in coeffs)
        degP = max(i for i, x in enumerate(coeffs) if abs(x) > tol * big)
        M0 = N - degP
        coeffs = coeffs[: degP + 1]
        Ms = [M0]
        rest = coeffs
        for p in (0.0, 1.0, complex(av_mod)):
            tay = _taylor(rest, p)
            tb = max(abs(x) for x in tay)
            k = 0
            while k < len(tay) - 1 and abs(tay[k]) <= tol * tb:
                k += 1
            rest = _deflate(rest, p, k)
            Ms.append(k)
        scale = rest[-1]
        F = _poly_sqrt_numeric([x / scale for x in rest], tol)
        lam_value = lam
    for i, (mi, Mi) in enumerate(zip(m, Ms)):
        if Mi not in (0, 2 * mi + 1):
            raise BadMultiplicity(f"M{i} = {Mi} not in {{0, {2 * mi + 1}}} for m{i} = {mi}")
    reduced = Characteristics(*(x - M for x, M in zip(m, Ms)))
    deg = F.degree("z") if exact else len(F) - 1
    if 2 * deg != sum(reduced):
        raise BadMultiplicity(f"square-root degree {deg} does not match reduced characteristics {reduced}")
    mod = psi.a if exact else av_mod
    shift = accessory_shift(m, tuple(Ms), mod)
    if exact:
        lam_tilde = lam_value + shift
    else:
        lam_tilde = lam_value + complex(shift.constant_value())
    return BranchPointRecord(lam_value, tuple(Ms), reduced, F, scale, lam_tilde, exact, mod)


# -- special accessory values --------------------------------------------------

def special_lambda_roots(psi: PsiPolynomial, a) -> dict:
    """Roots of the leading z-coefficient, Psi at 0, 1, a, and the z-discriminant."""
    a = as_modulus(a)
    if a is None:
        raise ValueError("special_lambda_roots needs a rational modulus")
    P = psi.as_multipoly().subs("a", a) if psi.a is None else psi.as_multipoly()
    N = psi.N
    labels = {}

    def roots_of(poly):
        if poly.is_zero() or poly.degree("l") < 1:
            return []
        return [r for r, _ in exact_roots_with_multiplicity(poly)]

    if N == 0:
        return {"leading": [], "at_0": [], "at_1": [], "at_a": [], "discriminant": []}
    labels["leading"] = roots_of(P.leading_coeff("z") if P.degree("z") == N else ZERO)
    labels["at_0"] = roots_of(P.subs("z", 0))
    labels["at_1"] = roots_of(P.subs("z", 1))
    labels["at_a"] = roots_of(P.subs("z", a))
    labels["discriminant"] = roots_of(discriminant_z(P)) if N >= 2 else []
    return labels


# -- electrostatic relations ---------------------------------------------------

@dataclass(frozen=True)
class StieltjesReport:
    kind: str
    zeros: tuple
    residuals: tuple

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def passed(self, tol: float = NUMERIC_TOL) -> bool:
        return self.max_residual <= tol


def stieltjes_checks(target, a=None, lam=None, curve: SpectralCurve | None = None) -> StieltjesReport:
    """Relations among the zeros of Psi (generic lambda) or of F (branch record)."""
    if isinstance(target, BranchPointRecord):
        rec = target
        av = complex(rec.a if rec.a is not None else as_modulus(a))
        F = rec.F_coeffs() if rec.exact else list(rec.F)
        if len(F) <= 1:
            return StieltjesReport("branch", (), ())
        zs = poly_roots_numeric(F)
        mt = rec.reduced
        res = []
        for k, zk in enumerate(zs):
            lhs = sum(1 / (zk - zi) for i, zi in enumerate(zs) if i != k)
            rhs = 0.25 * ((2 * mt.m1 - 1) / zk + (2 * mt.m2 - 1) / (zk - 1) + (2 * mt.m3 - 1) / (zk - av))
            res.append(abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0))
        return StieltjesReport("branch", tuple(zs), tuple(res))
    psi = target
    av = psi.a if psi.a is not None else as_modulus(a)
    if curve is None:
        curve = nu_squared(psi)
    coeffs = psi.z_poly_numeric(lam, av)
    m = psi.characteristics
    if psi.N == 0:
        return StieltjesReport("generic", (), ())
    zs = poly_roots_numeric(coeffs)
    lead = coeffs[-1]
    nu2 = curve.evaluate(lam, av)
    avc = complex(av)
    res = []
    for k, zk in enumerate(zs):
        lhs = 1 + 0j
        for j, zj in enumerate(zs):
            if j != k:
                lhs *= (zk - zj) ** 2
        rhs = -nu2 / lead ** 2 * zk ** (2 * m.m1 - 1) * (zk - 1) ** (2 * m.m2 - 1) * (zk - avc) ** (2 * m.m3 - 1)
        res.append(abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300))
    return StieltjesReport("generic", tuple(zs), tuple(res))
