"""The potential U(z), the recursion operator on rational functions with
poles at {0, 1, a}, and detection of the Novikov relation."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra.linsolve import ExactMatrix, RatFunc, exact_linear_solve
from .algebra.multipoly import MultiPoly, Z, A, ZERO
from .algebra.singular import SingularRational, as_modulus, modulus_poly, integrate_rational
from .errors import BoundExceeded, Inconsistent
from .psi import Characteristics


def potential_U(m, a=None) -> SingularRational:
    """``U = m0(m0+1)/4 z + m1(m1+1)/4 a/z + m2(m2+1)/4 (z-a)/(z-1) + m3(m3+1)/4 a(z-1)/(z-a)``."""
    m = Characteristics.of(m)
    a = as_modulus(a)
    av = modulus_poly(a)
    w = [Fraction(x * (x + 1), 4) for x in m]
    u = SingularRational.from_poly(Z.scale(w[0]), a)
    u = u + SingularRational.pole(0, 1, av.scale(w[1]), a)
    # (z-a)/(z-1) = 1 + (1-a)/(z-1);  a(z-1)/(z-a) = a + a(a-1)/(z-a)
    u = u + SingularRational.from_poly(MultiPoly.const(w[2]), a) \
        + SingularRational.pole(1, 1, (1 - av).scale(w[2]), a)
    u = u + SingularRational.from_poly(av.scale(w[3]), a) \
        + SingularRational.pole("a", 1, (av * (av - 1)).scale(w[3]), a)
    return u


def apply_flow_operator(f: SingularRational, U: SingularRational) -> SingularRational:
    """``D f'' + (D'/2) f' - integral(4 U f' + 2 f U')`` with zero integration constant."""
    a = f.a
    av = modulus_poly(a)
    D = SingularRational.from_poly(Z * (Z - 1) * (Z - av), a)
    half_dD = SingularRational.from_poly((Z * (Z - 1) * (Z - av)).diff("z").scale(Fraction(1, 2)), a)
    d1 = f.diff()
    d2 = d1.diff()
    integrand = (U * d1).scale(4) + (f * U.diff()).scale(2)
    return D * d2 + half_dD * d1 - integrate_rational(integrand)


class FlowSequence:
    """Lazily extended sequence I0 = U, I_{n+1} = L(I_n)."""

    def __init__(self, m, a=None):
        self.characteristics = Characteristics.of(m)
        self.a = as_modulus(a)
        self._flows = [potential_U(self.characteristics, self.a)]
        self._lock = threading.Lock()

    @property
    def U(self) -> SingularRational:
        return self._flows[0]

    def __getitem__(self, n: int) -> SingularRational:
        with self._lock:
            while len(self._flows) <= n:
                self._flows.append(apply_flow_operator(self._flows[-1], self._flows[0]))
            return self._flows[n]

    @property
    def flows(self) -> tuple:
        return tuple(self._flows)


@lru_cache(maxsize=256)
def _cached_sequence(m: tuple, a) -> FlowSequence:
    return FlowSequence(m, a)


def flow_sequence(m, a=None) -> FlowSequence:
    """Memoized :class:`FlowSequence` for ``(m, a)``."""
    return _cached_sequence(Characteristics.of(m).as_tuple(), as_modulus(a))


@dataclass(frozen=True)
class NovikovData:
    """``I_g + sum_j constants[j-1] * I_{g-j} = affine``."""

    order: int
    constants: tuple
    affine: RatFunc


def _coordinates(fs):
    """Coordinate rows (one per partial-fraction basis key) over Q[a]."""
    keys = set()
    for f in fs:
        keys.update(f.terms)
    rows = []
    for key in sorted(keys, key=repr):
        cs = [f.coefficient(*key) for f in fs]
        ea = max(c.ea for c in cs)
        eb = max(c.eb for c in cs)
        row = []
        for c in cs:
            row.append(c.num * A ** (ea - c.ea) * (A - 1) ** (eb - c.eb) if c else ZERO)
        rows.append(row)
    return rows


def affine_span_solve(target: SingularRational, basis) -> list:
    """Exact ``x`` with ``target = sum x_i basis_i + x_last``; raises Inconsistent."""
    one = SingularRational.from_poly(MultiPoly.const(1), target.a)
    cols = list(basis) + [one]
    rows = _coordinates(cols + [target])
    A_rows = [r[:-1] for r in rows]
    b = [r[-1] for r in rows]
    while len(A_rows) < len(cols):
        A_rows.append([ZERO] * len(cols))
        b.append(ZERO)
    return exact_linear_solve(ExactMatrix.of(A_rows), b)


def novikov_order(m, a=None) -> NovikovData:
    """Smallest g with I_g in the affine span of I_{g-1}, ..., I_0, 1."""
    m = Characteristics.of(m)
    seq = flow_sequence(m, a)
    bound = sum(x if x >= 0 else -x - 1 for x in m)
    for g in range(bound + 1):
        basis = [seq[g - j] for j in range(1, g + 1)]
        try:
            x = affine_span_solve(seq[g], basis)
        except Inconsistent:
            continue
        return NovikovData(g, tuple(-c for c in x[:-1]), x[-1])
    raise BoundExceeded(f"no Novikov relation up to order {bound} for ({m})")
