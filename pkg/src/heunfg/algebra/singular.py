"""Rational functions of z whose only finite poles are at 0, 1 and a.

A :class:`SingularRational` is kept in partial-fraction form::

    f(z) = sum_e c_e z**e + sum_{p in (0, 1, a)} sum_{j>=1} c_{p,j} (z - p)**-j

Coefficients are :class:`Coeff` values, i.e. elements of Q[a, 1/a, 1/(a-1)]
in a reduced normal form, so the representation is unique.  Products of
principal parts at two different poles generate inverse powers of the pole
separation (a, 1 - a or 1), which is why the coefficient ring is localised.

``a`` is either symbolic (``None``) or a rational number; the same code path
serves both, only the pole separations change from symbols to numbers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors import InvalidModulus, LogTermPresent
from .multipoly import MultiPoly, Z, A, ONE, ZERO, as_poly

POLES = (0, 1, "a")
_A_MINUS_1 = A - 1


def as_modulus(a):
    """Normalise a modulus argument: ``None`` for symbolic, else a Fraction not in {0, 1}."""
    if a is None or (isinstance(a, str) and a.strip().lower() in ("symbolic", "a", "sym")):
        return None
    if isinstance(a, str):
        a = Fraction(a.strip())
    a = Fraction(a)
    if a in (0, 1):
        raise InvalidModulus("a must not be 0 or 1")
    return a


def modulus_poly(a) -> MultiPoly:
    """The value of ``a`` as a polynomial: the indeterminate or a constant."""
    return A if a is None else MultiPoly.const(a)


def pole_value(label, a) -> MultiPoly:
    if label == "a":
        return modulus_poly(a)
    return MultiPoly.const(label)


@dataclass(frozen=True)
class Coeff:
    """``num / (a**ea * (a - 1)**eb)`` with ``num`` in Q[a], reduced."""

    num: MultiPoly
    ea: int = 0
    eb: int = 0

    @staticmethod
    def make(num, ea=0, eb=0) -> "Coeff":
        num = as_poly(num)
        if num.is_zero():
            return Coeff(ZERO)
        while ea and num.low_degree("a") > 0:
            num = MultiPoly({(i, j, k - 1): c for (i, j, k), c in num.terms})
            ea -= 1
        while eb and num.subs("a", 1).is_zero():
            num, _ = num.divmod(_A_MINUS_1, "a")
            eb -= 1
        return Coeff(num, ea, eb)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        other = _coeff(other)
        if not other:
            return self
        if not self:
            return other
        ea, eb = max(self.ea, other.ea), max(self.eb, other.eb)
        n1 = self.num * A ** (ea - self.ea) * _A_MINUS_1 ** (eb - self.eb)
        n2 = other.num * A ** (ea - other.ea) * _A_MINUS_1 ** (eb - other.eb)
        return Coeff.make(n1 + n2, ea, eb)

    __radd__ = __add__

    def __neg__(self):
        return Coeff(-self.num, self.ea, self.eb)

    def __sub__(self, other):
        return self + (-_coeff(other))

    def __mul__(self, other):
        other = _coeff(other)
        if not self or not other:
            return Coeff(ZERO)
        return Coeff.make(self.num * other.num, self.ea + other.ea, self.eb + other.eb)

    __rmul__ = __mul__

    def is_polynomial(self) -> bool:
        return self.ea == 0 and self.eb == 0

    def denominator(self) -> MultiPoly:
        return A ** self.ea * _A_MINUS_1 ** self.eb

    def as_poly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial in a")
        return self.num

    def value(self, a) -> Fraction:
        """Exact value at rational ``a``."""
        d = Fraction(a) ** self.ea * (Fraction(a) - 1) ** self.eb
        return self.num.subs("a", a).constant_value() / d

    def evaluate(self, a) -> complex:
        """Floating-point value at numeric ``a``."""
        return self.num.evaluate(a=a) / (a ** self.ea * (a - 1) ** self.eb)

    def __str__(self):
        if self.is_polynomial():
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.denominator().to_text()})"


def _coeff(x) -> Coeff:
    if isinstance(x, Coeff):
        return x
    return Coeff.make(as_poly(x))


def _inverse_separation(p, q, k, a) -> Coeff:
    """``(p - q)**-k`` for two distinct pole labels."""
    diff = pole_value(p, a) - pole_value(q, a)
    if diff.is_constant():
        return Coeff(MultiPoly.const(diff.constant_value() ** -k))
    # diff is +-a or +-(a - 1)
    sign = 1
    if diff == -A or diff == -_A_MINUS_1:
        sign = -1
        diff = -diff
    num = MultiPoly.const(sign ** k)
    if diff == A:
        return Coeff.make(num, ea=k)
    return Coeff.make(num, eb=k)


def _binom_neg(k: int, l: int) -> int:
    """binomial(-k, l) for k >= 1."""
    return (-1) ** l * comb(k + l - 1, l)


class SingularRational:
    """Immutable partial-fraction form; keys are ``("z", e)`` or ``(pole, j)``."""

    __slots__ = ("_t", "a")

    def __init__(self, terms=None, a=None):
        self.a = as_modulus(a)
        t = {}
        for key, c in (terms or {}).items():
            c = _coeff(c)
            if c:
                label, e = key
                if label == "z":
                    if e < 0:
                        raise ValueError("negative power in polynomial part")
                elif label not in POLES or e < 1:
                    raise ValueError(f"bad principal-part key {key!r}")
                if self.a is not None and "a" in c.num.variables():
                    raise ValueError("symbolic coefficient with numeric modulus")
                t[key] = c
        self._t = t

    @classmethod
    def _raw(cls, t, a):
        f = cls.__new__(cls)
        f._t = {k: v for k, v in t.items() if v}
        f.a = a
        return f

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, a=None):
        return cls._raw({}, as_modulus(a))

    @classmethod
    def from_poly(cls, p, a=None) -> "SingularRational":
        """Embed a polynomial in z (coefficients in Q[a])."""
        a = as_modulus(a)
        p = as_poly(p)
        if a is not None:
            p = p.subs("a", a)
        t = {}
        for e, c in p.coeffs_in("z").items():
            t[("z", e)] = Coeff.make(c)
        return cls._raw(t, a)

    @classmethod
    def pole(cls, label, order, coeff=1, a=None) -> "SingularRational":
        """``coeff * (z - label)**-order``."""
        a = as_modulus(a)
        c = as_poly(coeff) if not isinstance(coeff, Coeff) else coeff
        if a is not None and isinstance(c, MultiPoly):
            c = c.subs("a", a)
        return cls._raw({(label, order): _coeff(c)}, a)

    # -- protocol ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._t)

    def __eq__(self, other):
        if not isinstance(other, SingularRational):
            return NotImplemented
        return self.a == other.a and self._t == other._t

    def __hash__(self):
        return hash((self.a, frozenset(self._t.items())))

    def is_zero(self) -> bool:
        return not self._t

    def __repr__(self):
        return f"SingularRational({self.to_text()!r})"

    def to_text(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for key in sorted(self._t, key=_key_order):
            label, e = key
            c = self._t[key]
            if label == "z":
                mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            else:
                base = "z" if label == 0 else f"(z - {label})"
                mono = f"{base}^-{e}"
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, SingularRational):
            other = SingularRational.from_poly(as_poly(other), self.a)
        if other.a != self.a:
            raise ValueError("moduli differ")
        return other

    def __add__(self, other):
        other = self._check(other)
        t = dict(self._t)
        for k, c in other._t.items():
            t[k] = t[k] + c if k in t else c
        return SingularRational._raw(t, self.a)

    __radd__ = __add__

    def __neg__(self):
        return SingularRational._raw({k: -c for k, c in self._t.items()}, self.a)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) + (-self)

    def scale(self, c) -> "SingularRational":
        c = _coeff(c)
        return SingularRational._raw({k: v * c for k, v in self._t.items()}, self.a)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Coeff)):
            return self.scale(other)
        other = self._check(other)
        acc = {}
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                for k, c in _term_product(k1, k2, self.a):
                    v = c * c1 * c2
                    acc[k] = acc[k] + v if k in acc else v
        return SingularRational._raw(acc, self.a)

    __rmul__ = __mul__

    def diff(self) -> "SingularRational":
        t = {}
        for (label, e), c in self._t.items():
            if label == "z":
                if e:
                    t[("z", e - 1)] = c * e
            else:
                t[(label, e + 1)] = c * (-e)
        return SingularRational._raw(t, self.a)

    def integrate(self) -> "SingularRational":
        """Antiderivative with zero constant term; raises LogTermPresent on a residue."""
        for p in POLES:
            r = self._t.get((p, 1))
            if r:
                raise LogTermPresent(p, str(r))
        t = {}
        for (label, e), c in self._t.items():
            if label == "z":
                t[("z", e + 1)] = c * Fraction(1, e + 1)
            else:
                t[(label, e - 1)] = c * Fraction(-1, e - 1)
        return SingularRational._raw(t, self.a)

    # -- structure --------------------------------------------------------
    def pole_order(self, label) -> int:
        """Order of the pole at ``label`` (``"inf"`` gives the polynomial degree)."""
        if label == "inf":
            label = "z"
            es = [e for (lb, e) in self._t if lb == "z"]
            return max(es) if es else -1
        es = [e for (lb, e) in self._t if lb == label]
        return max(es) if es else 0

    def residue(self, label) -> Coeff:
        return self._t.get((label, 1), Coeff(ZERO))

    def coefficient(self, label, e) -> Coeff:
        return self._t.get((label, e), Coeff(ZERO))

    def polynomial_part(self) -> MultiPoly:
        out = ZERO
        for (label, e), c in self._t.items():
            if label == "z":
                out = out + c.as_poly() * Z ** e
        return out

    def subs_a(self, value) -> "SingularRational":
        """Specialise symbolic ``a`` to a rational."""
        if self.a is not None:
            raise ValueError("modulus already numeric")
        value = as_modulus(value)
        return SingularRational._raw(
            {k: Coeff(MultiPoly.const(c.value(value))) for k, c in self._t.items()}, value)

    def evaluate(self, z, a=None) -> complex:
        """Numeric value at ``z``; ``a`` must be supplied when symbolic."""
        av = self.a if self.a is not None else a
        if av is None:
            raise ValueError("numeric a required")
        av = complex(av)
        total = 0j
        for (label, e), c in self._t.items():
            cv = c.evaluate(av)
            if label == "z":
                total += cv * z ** e
            else:
                p = {0: 0.0, 1: 1.0, "a": av}[label]
                total += cv * (z - p) ** (-e)
        return total

    # -- quotient form ----------------------------------------------------
    def to_quotient(self):
        """Return ``(numerator, orders, (ea, eb))`` with
        ``f = numerator / (a**ea (a-1)**eb * z**k0 (z-1)**k1 (z-a)**ka)``."""
        orders = {p: self.pole_order(p) for p in POLES}
        ea = max((c.ea for c in self._t.values()), default=0)
        eb = max((c.eb for c in self._t.values()), default=0)
        factors = {p: Z - pole_value(p, self.a) for p in POLES}
        den = ONE
        for p in POLES:
            den = den * factors[p] ** orders[p]
        num = ZERO
        for (label, e), c in self._t.items():
            scaled = c.num * A ** (ea - c.ea) * _A_MINUS_1 ** (eb - c.eb)
            if label == "z":
                num = num + scaled * Z ** e * den
            else:
                rest = factors[label] ** (orders[label] - e)
                for q in POLES:
                    if q != label:
                        rest = rest * factors[q] ** orders[q]
                num = num + scaled * rest
        return num, orders, (ea, eb)

    @classmethod
    def from_quotient(cls, numerator, orders, a=None, scale=(0, 0)) -> "SingularRational":
        """Partial-fraction decomposition of
        ``numerator / (a**ea (a-1)**eb * prod (z - p)**orders[p])``."""
        a = as_modulus(a)
        f = cls.from_poly(numerator, a)
        for p in POLES:
            k = orders.get(p, 0)
            if k:
                f = f * cls.pole(p, k, 1, a)
        ea, eb = scale
        if ea or eb:
            if a is None:
                f = f.scale(Coeff.make(ONE, ea, eb))
            else:
                f = f.scale(Fraction(1) / (a ** ea * (a - 1) ** eb))
        return f


def _key_order(key):
    label, e = key
    rank = {"z": 0, 0: 1, 1: 2, "a": 3}[label]
    return (rank, -e if label == "z" else e)


def _poly_in_shift(n, p, a):
    """Expand ``(z - p)**n`` (n >= 0) in powers of z: list of ((\"z\", l), Coeff)."""
    pv = pole_value(p, a)
    return [(("z", l), Coeff.make(comb(n, l) * (-pv) ** (n - l))) for l in range(n + 1)]


def _term_product(k1, k2, a):
    """Partial-fraction expansion of the product of two unit basis terms."""
    (l1, e1), (l2, e2) = k1, k2
    if l1 == "z" and l2 == "z":
        return [(("z", e1 + e2), Coeff(ONE))]
    if l1 != "z" and l2 == "z":
        (l1, e1), (l2, e2) = (l2, e2), (l1, e1)
    if l1 == "z":
        # z**e1 / (z - p)**e2 with z = (z - p) + p
        p = l2
        pv = pole_value(p, a)
        out = []
        for k in range(e1 + 1):
            c = Coeff.make(comb(e1, k) * pv ** (e1 - k))
            n = k - e2
            if n < 0:
                out.append(((p, -n), c))
            else:
                out.extend((key, c * cc) for key, cc in _poly_in_shift(n, p, a))
        return out
    if l1 == l2:
        return [((l1, e1 + e2), Coeff(ONE))]
    # (z-p)**-i (z-q)**-j = sum_k A_k (z-p)**-k + sum_k B_k (z-q)**-k
    p, i, q, j = l1, e1, l2, e2
    out = []
    for k in range(1, i + 1):
        out.append(((p, k), _inverse_separation(p, q, j + i - k, a) * _binom_neg(j, i - k)))
    for k in range(1, j + 1):
        out.append(((q, k), _inverse_separation(q, p, i + j - k, a) * _binom_neg(i, j - k)))
    return out


def integrate_rational(f: SingularRational) -> SingularRational:
    """Antiderivative in z with zero integration constant.

    Raises :class:`LogTermPresent` if ``f`` has a nonzero residue at 0, 1 or a.
    """
    return f.integrate()
