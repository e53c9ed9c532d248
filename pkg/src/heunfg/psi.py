"""Characteristics, genus, the spectral polynomial Psi(lambda, z) and the
shift rules for negative characteristics."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.linsolve import ExactMatrix, exact_linear_solve
from .algebra.multipoly import MultiPoly, Z, L, A, ONE, ZERO, as_poly, format_rational, parse_rational
from .algebra.singular import as_modulus, modulus_poly
from .errors import NegativeCharacteristic, ZDependent


@dataclass(frozen=True)
class Characteristics:
    m0: int
    m1: int
    m2: int
    m3: int

    def __post_init__(self):
        for v in self.as_tuple():
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError("characteristics must be integers")

    @classmethod
    def of(cls, m) -> "Characteristics":
        if isinstance(m, Characteristics):
            return m
        if isinstance(m, str):
            m = [int(x) for x in m.replace(" ", "").split(",")]
        m = tuple(int(x) for x in m)
        if len(m) != 4:
            raise ValueError("need exactly four characteristics")
        return cls(*m)

    @property
    def N(self) -> int:
        return self.m0 + self.m1 + self.m2 + self.m3

    def as_tuple(self):
        return (self.m0, self.m1, self.m2, self.m3)

    def __getitem__(self, i):
        return self.as_tuple()[i]

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self):
        return ",".join(str(x) for x in self.as_tuple())


def genus(m) -> int:
    m = Characteristics.of(m)
    if min(m) < 0:
        raise NegativeCharacteristic(f"negative characteristic in ({m}); normalize first")
    N = m.N
    if N % 2 == 0:
        return max(max(m), N // 2 - min(m))
    return max(max(m), (N + 1) // 2)


# -- the equation ------------------------------------------------------------

def equation_polys(m, a=None):
    """``(D, Pn, Q0)`` with ``D = z(z-1)(z-a)``, ``P = Pn/D`` and ``Q = (Q0 + l)/(4D)``."""
    m = Characteristics.of(m)
    av = modulus_poly(as_modulus(a))
    h = Fraction(1, 2)
    D = Z * (Z - 1) * (Z - av)
    Pn = ((Z - 1) * (Z - av)).scale(h * (1 - 2 * m.m1)) \
        + (Z * (Z - av)).scale(h * (1 - 2 * m.m2)) \
        + (Z * (Z - 1)).scale(h * (1 - 2 * m.m3))
    Q0 = Z.scale(m.N * (m.N - 2 * m.m0 - 1))
    return D, Pn, Q0


class _ThirdOrder:
    """The product equation split as ``L0 + l*L1`` (cleared by 4 D**2)."""

    def __init__(self, m, a):
        D, Pn, Q0 = equation_polys(m, a)
        dD, dPn, dQ0 = D.diff("z"), Pn.diff("z"), Q0.diff("z")
        self.c3 = (D * D).scale(4)
        self.c2 = (Pn * D).scale(12)
        base1 = (dPn * D - Pn * dD).scale(4) + (Pn * Pn).scale(8)
        self.c1_0 = base1 + (Q0 * D).scale(4)
        self.c0_0 = (dQ0 * D - Q0 * dD).scale(2) + (Pn * Q0).scale(4)
        self.c1_1 = D.scale(4)
        self.c0_1 = dD.scale(-2) + Pn.scale(4)

    def parts(self, f: MultiPoly):
        d1 = f.diff("z")
        d2 = d1.diff("z")
        d3 = d2.diff("z")
        l0 = self.c3 * d3 + self.c2 * d2 + self.c1_0 * d1 + self.c0_0 * f
        l1 = self.c1_1 * d1 + self.c0_1 * f
        return l0, l1

    def apply(self, psi: MultiPoly) -> MultiPoly:
        """Full residual for a polynomial in z, l (and a)."""
        out = ZERO
        for j, c in psi.coeffs_in("l").items():
            l0, l1 = self.parts(c)
            out = out + (l0 + l1 * L) * L ** j
        return out


def eq3_residual(psi: "PsiPolynomial | MultiPoly", m=None, a=None) -> MultiPoly:
    """Residual of the third-order product equation; zero iff ``psi`` solves it."""
    if isinstance(psi, PsiPolynomial):
        m, a, poly = psi.characteristics, psi.a, psi.as_multipoly()
    else:
        poly = as_poly(psi)
    return _ThirdOrder(m, a).apply(poly)


# -- Psi -------------------------------------------------------------------

def leading_coefficient(m, a=None) -> MultiPoly:
    m = Characteristics.of(m)
    av = modulus_poly(as_modulus(a))
    return Z ** m.m1 * (Z - 1) ** m.m2 * (Z - av) ** m.m3


@dataclass(frozen=True)
class PsiPolynomial:
    """``Psi = sum_j coeffs[j] * l**(genus - j)``; each coefficient is in Q[a][z]."""

    characteristics: Characteristics
    a: Fraction | None
    genus: int
    coeffs: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def N(self) -> int:
        return self.characteristics.N

    def as_multipoly(self) -> MultiPoly:
        if "poly" not in self._cache:
            out = ZERO
            g = self.genus
            for j, c in enumerate(self.coeffs):
                out = out + c * L ** (g - j)
            self._cache["poly"] = out
        return self._cache["poly"]

    def to_text(self) -> str:
        return self.as_multipoly().to_text()

    def at_lambda(self, lam) -> MultiPoly:
        """Psi(lam, z) for an exact lam (rational or polynomial in a)."""
        return self.as_multipoly().subs("l", lam)

    def specialize(self, a) -> "PsiPolynomial":
        a = as_modulus(a)
        if self.a is not None:
            if self.a == a:
                return self
            raise ValueError("modulus already fixed")
        return PsiPolynomial(self.characteristics, a, self.genus,
                             tuple(c.subs("a", a) for c in self.coeffs))

    def numeric_coeffs(self, a=None):
        """Nested float lists: ``[[coefficients of z^0..z^N] for each l power 0..g]``."""
        av = self.a if self.a is not None else a
        if av is None:
            raise ValueError("numeric a required")
        key = ("num", complex(av))
        if key not in self._cache:
            rows = []
            for j in range(self.genus, -1, -1):
                c = self.coeffs[j]
                row = [0j] * (self.N + 1)
                for (i, _, k), v in c.terms:
                    row[i] += float(v) * complex(av) ** k
                rows.append(row)
            self._cache[key] = rows
        return self._cache[key]

    def z_poly_numeric(self, lam, a=None):
        """Coefficients (lowest z first) of Psi(lam, .) as complex floats."""
        rows = self.numeric_coeffs(a)
        out = [0j] * (self.N + 1)
        p = 1
        for row in rows:
            for i, v in enumerate(row):
                out[i] += v * p
            p *= lam
        return out

    def to_json(self) -> dict:
        return {
            "characteristics": list(self.characteristics),
            "a": "symbolic" if self.a is None else format_rational(self.a),
            "genus": self.genus,
            "psi": [c.to_text() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "PsiPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        a = None if data["a"] == "symbolic" else parse_rational(data["a"])
        return cls(Characteristics.of(data["characteristics"]), a, int(data["genus"]),
                   tuple(MultiPoly.parse(s) for s in data["psi"]))


def build_psi(m, a=None) -> PsiPolynomial:
    """Solve the product equation for Psi normalised by its leading l-coefficient.

    Every coefficient of ``l**(g-j)``, j >= 1, is an unknown polynomial of
    z-degree N; coefficients of every ``z**p l**q`` are matched and the
    overdetermined system is solved exactly.
    """
    m = Characteristics.of(m)
    a = as_modulus(a)
    g = genus(m)
    N = m.N
    a0 = leading_coefficient(m, a)
    if g == 0:
        return PsiPolynomial(m, a, 0, (a0,))
    op = _ThirdOrder(m, a)
    # image of each unknown basis monomial z**p (split in l-degree 0 and 1)
    images = [op.parts(Z ** p) for p in range(N + 1)]
    l0, l1 = op.parts(a0)

    # rows indexed by (z power e, l power q); column (j, p) -> l**(g-j)*z**p
    rows = {}

    def put(target, col, poly, lshift):
        for e, c in poly.coeffs_in("z").items():
            key = (e, lshift)
            target.setdefault(key, {})[col] = c

    cols = [(j, p) for j in range(1, g + 1) for p in range(N + 1)]
    for idx, (j, p) in enumerate(cols):
        i0, i1 = images[p]
        put(rows, idx, i0, g - j)
        put(rows, idx, i1, g - j + 1)
    rhs = {}
    for e, c in l0.coeffs_in("z").items():
        rhs[(e, g)] = -c
    for e, c in l1.coeffs_in("z").items():
        rhs[(e, g + 1)] = -c
    keys = sorted(set(rows) | set(rhs))
    ncols = len(cols)
    matrix = []
    b = []
    for key in keys:
        row = rows.get(key, {})
        matrix.append([row.get(c, ZERO) for c in range(ncols)])
        b.append(rhs.get(key, ZERO))
    sol = exact_linear_solve(ExactMatrix(tuple(tuple(r) for r in matrix)), b)
    coeffs = [a0]
    for j in range(1, g + 1):
        poly = ZERO
        for p in range(N + 1):
            x = sol[(j - 1) * (N + 1) + p]
            if not x.is_polynomial():
                raise ZDependent(f"coefficient of z^{p} in a_{j} is not polynomial in a: {x}")
            poly = poly + x.num * Z ** p
        coeffs.append(poly)
    return PsiPolynomial(m, a, g, tuple(coeffs))


# -- shifts for negative characteristics -----------------------------------

@dataclass(frozen=True)
class ShiftData:
    """``Y(original, l) = z**p1 (z-1)**p2 (z-a)**p3 * Y(characteristics, mu)``."""

    original: Characteristics
    characteristics: Characteristics
    mu: MultiPoly
    prefactor: tuple
    steps: tuple = ()

    def is_trivial(self) -> bool:
        return self.original == self.characteristics

    def to_json(self) -> dict:
        return {
            "original": list(self.original),
            "characteristics": list(self.characteristics),
            "mu": self.mu.to_text(),
            "prefactor": [format_rational(p) for p in self.prefactor],
        }


def shift_once(m, index: int, lam, a=None):
    """Apply ``m_index -> -m_index - 1`` once; returns (new m, new accessory, exponent)."""
    m = list(Characteristics.of(m))
    lam = as_poly(lam)
    av = modulus_poly(as_modulus(a))
    k = m[index]
    kp = -k - 1
    w = 2 * kp + 1
    if index == 0:
        m[0] = kp
        return Characteristics(*m), lam, Fraction(0)
    if index == 1:
        mu = lam - av.scale(w * (2 * m[2] - 1)) - w * (2 * m[3] - 1)
    elif index == 2:
        mu = lam - av.scale((2 * m[1] - 1) * w)
    elif index == 3:
        mu = lam - (2 * m[1] - 1) * w
    else:
        raise ValueError("index must be 0..3")
    m[index] = kp
    return Characteristics(*m), mu, Fraction(2 * k + 1, 2)


def normalize_characteristics(m, lam=L, a=None) -> ShiftData:
    """Map every negative characteristic to ``-m_i - 1`` tracking the accessory shift."""
    orig = Characteristics.of(m)
    cur = orig
    mu = as_poly(lam)
    pref = [Fraction(0)] * 4
    steps = []
    for i in (1, 2, 3, 0):
        if cur[i] < 0:
            cur, mu, e = shift_once(cur, i, mu, a)
            pref[i] += e
            steps.append(i)
    return ShiftData(orig, cur, mu, tuple(pref), tuple(steps))


# -- Heun parameters --------------------------------------------------------

@dataclass(frozen=True)
class HeunParams:
    gamma: Fraction
    delta: Fraction
    epsilon: Fraction
    q: object
    alpha: Fraction
    beta: Fraction

    @property
    def fuchs_defect(self) -> Fraction:
        return 1 + self.alpha + self.beta - self.gamma - self.delta - self.epsilon


def _rational_sqrt(x: Fraction):
    from math import isqrt
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def heun_params(m, lam=L) -> HeunParams:
    """Standard Heun parameters; alpha >= beta are the roots of t^2 - s t + p."""
    m = Characteristics.of(m)
    h = Fraction(1, 2)
    gamma, delta, eps = h - m.m1, h - m.m2, h - m.m3
    s = gamma + delta + eps - 1
    p = Fraction(m.N * (m.N - 2 * m.m0 - 1), 4)
    root = _rational_sqrt(s * s - 4 * p)
    # the discriminant equals (2 m0 + 1)^2 / 4 for integer characteristics
    assert root is not None
    alpha, beta = (s + root) / 2, (s - root) / 2
    lam = as_poly(lam) if not isinstance(lam, (complex, float)) else lam
    q = lam * Fraction(-1, 4) if not isinstance(lam, MultiPoly) else lam.scale(Fraction(-1, 4))
    return HeunParams(gamma, delta, eps, q, alpha, beta)
