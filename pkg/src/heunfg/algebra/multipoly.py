"""Sparse exact polynomials in z, lambda and a over the rationals.

Terms are stored as ``{(i, j, k): Fraction}`` meaning ``c * z**i * l**j * a**k``
(``l`` stands for the accessory parameter lambda).  Canonical order is graded
lexicographic with z > l > a, highest first; the text form produced by
:meth:`MultiPoly.to_text` follows it and is what test fixtures store.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

VARS = ("z", "l", "a")
_INDEX = {"z": 0, "l": 1, "a": 2}
_ALIASES = {"lambda": "l", "λ": "l", "lam": "l"}


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


def format_rational(c: Fraction) -> str:
    """``p/q`` or ``p`` for integers."""
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _sort_key(mono):
    i, j, k = mono
    return (-(i + j + k), -i, -j, -k)


def _shift(mono, var, by):
    m = list(mono)
    m[var] += by
    return tuple(m)


class MultiPoly:
    """Immutable sparse polynomial in (z, l, a) with Fraction coefficients."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for mono, c in terms.items():
                c = _as_fraction(c)
                if c:
                    if len(mono) != 3 or min(mono) < 0:
                        raise ValueError(f"bad exponent triple {mono!r}")
                    t[tuple(mono)] = c
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        # t already clean: no zeros, tuple keys
        p = cls.__new__(cls)
        p._t = t
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "MultiPoly":
        c = _as_fraction(c)
        return cls._raw({(0, 0, 0): c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        name = _ALIASES.get(name, name)
        mono = [0, 0, 0]
        mono[_INDEX[name]] = power
        return cls._raw({tuple(mono): Fraction(1)})

    @classmethod
    def monomial(cls, c, i=0, j=0, k=0) -> "MultiPoly":
        return cls({(i, j, k): c})

    @classmethod
    def from_coeffs(cls, var: str, coeffs) -> "MultiPoly":
        """Build ``sum(coeffs[e] * var**e)``; ``coeffs`` is a list or dict of MultiPoly/scalars."""
        v = _INDEX[_ALIASES.get(var, var)]
        items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
        t = {}
        for e, c in items:
            c = as_poly(c)
            for mono, val in c._t.items():
                key = _shift(mono, v, e)
                s = t.get(key, 0) + val
                if s:
                    t[key] = s
                else:
                    t.pop(key, None)
        return cls._raw(t)

    # -- basic protocol ---------------------------------------------------
    @property
    def terms(self):
        """Canonically ordered list of ``((i, j, k), coefficient)``."""
        return sorted(self._t.items(), key=lambda kv: _sort_key(kv[0]))

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and (0, 0, 0) in self._t)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self._t.get((0, 0, 0), Fraction(0))

    def __complex__(self) -> complex:
        return complex(self.constant_value())

    def __float__(self) -> float:
        return float(self.constant_value())

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._t == other._t
        try:
            return self._t == MultiPoly.const(other)._t
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = as_poly(other)
        if len(other._t) > len(self._t):
            small, big = self._t, other._t
        else:
            small, big = other._t, self._t
        t = dict(big)
        for mono, c in small.items():
            s = t.get(mono, 0) + c
            if s:
                t[mono] = s
            else:
                del t[mono]
        return MultiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        return self + (-as_poly(other))

    def __rsub__(self, other):
        return as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = as_poly(other)
        if not self._t or not other._t:
            return MultiPoly._raw({})
        t = {}
        get = t.get
        for (i1, j1, k1), c1 in self._t.items():
            for (i2, j2, k2), c2 in other._t.items():
                key = (i1 + i2, j1 + j2, k1 + k2)
                t[key] = get(key, 0) + c1 * c2
        return MultiPoly._raw({m: c for m, c in t.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = _as_fraction(c)
        if not c:
            return MultiPoly._raw({})
        return MultiPoly._raw({m: v * c for m, v in self._t.items()})

    def __truediv__(self, c):
        """Division by a nonzero rational constant only."""
        if isinstance(c, MultiPoly):
            c = c.constant_value()
        c = _as_fraction(c)
        if not c:
            raise ZeroDivisionError("division of MultiPoly by zero")
        return self.scale(1 / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("nonnegative integer power required")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- structure --------------------------------------------------------
    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree when None); -1 for the zero polynomial."""
        if not self._t:
            return -1
        if var is None:
            return max(sum(m) for m in self._t)
        v = _INDEX[_ALIASES.get(var, var)]
        return max(m[v] for m in self._t)

    def low_degree(self, var: str) -> int:
        """Smallest exponent of ``var`` present (the ``var``-adic valuation)."""
        if not self._t:
            raise ValueError("valuation of zero polynomial")
        v = _INDEX[_ALIASES.get(var, var)]
        return min(m[v] for m in self._t)

    def variables(self) -> set:
        return {VARS[v] for m in self._t for v in range(3) if m[v]}

    def coeff(self, i=0, j=0, k=0) -> Fraction:
        return self._t.get((i, j, k), Fraction(0))

    def coeffs_in(self, var: str) -> dict:
        """Collect by powers of ``var``: ``{e: MultiPoly free of var}``."""
        v = _INDEX[_ALIASES.get(var, var)]
        out = {}
        for mono, c in self._t.items():
            e = mono[v]
            out.setdefault(e, {})[_shift(mono, v, -e)] = c
        return {e: MultiPoly._raw(t) for e, t in out.items()}

    def coeff_list(self, var: str) -> list:
        """Dense list of coefficients in ``var``, lowest power first."""
        d = self.coeffs_in(var)
        if not d:
            return []
        zero = MultiPoly._raw({})
        return [d.get(e, zero) for e in range(max(d) + 1)]

    def leading_coeff(self, var: str) -> "MultiPoly":
        if not self._t:
            return MultiPoly._raw({})
        d = self.coeffs_in(var)
        return d[max(d)]

    def diff(self, var: str) -> "MultiPoly":
        v = _INDEX[_ALIASES.get(var, var)]
        t = {}
        for mono, c in self._t.items():
            e = mono[v]
            if e:
                t[_shift(mono, v, -1)] = c * e
        return MultiPoly._raw(t)

    def subs(self, var: str, value) -> "MultiPoly":
        """Substitute a rational or a MultiPoly for ``var``."""
        v = _INDEX[_ALIASES.get(var, var)]
        if isinstance(value, MultiPoly) and not value.is_constant():
            out = MultiPoly._raw({})
            powers = {}
            for e, c in sorted(self.coeffs_in(var).items()):
                if e not in powers:
                    powers[e] = value ** e
                out = out + c * powers[e]
            return out
        if isinstance(value, MultiPoly):
            value = value.constant_value()
        value = _as_fraction(value)
        t = {}
        for mono, c in self._t.items():
            key = _shift(mono, v, -mono[v])
            s = t.get(key, 0) + c * value ** mono[v]
            if s:
                t[key] = s
            else:
                t.pop(key, None)
        return MultiPoly._raw(t)

    def evaluate(self, z=0, l=0, a=0):
        """Numeric value (complex/float) at the given point."""
        total = 0
        for (i, j, k), c in self._t.items():
            total += float(c) * (z ** i) * (l ** j) * (a ** k)
        return total

    def exact_value(self, z=0, l=0, a=0) -> Fraction:
        total = Fraction(0)
        for (i, j, k), c in self._t.items():
            total += c * Fraction(z) ** i * Fraction(l) ** j * Fraction(a) ** k
        return total

    def divmod(self, divisor: "MultiPoly", var: str = "z"):
        """Long division in ``var``; the divisor's leading coefficient must be a rational constant."""
        divisor = as_poly(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dv = divisor.degree(var)
        lc = divisor.leading_coeff(var)
        if not lc.is_constant():
            raise ValueError("divisor must have a constant leading coefficient")
        inv = 1 / lc.constant_value()
        quotient = MultiPoly._raw({})
        rem = self
        x = MultiPoly.var(var)
        while not rem.is_zero() and rem.degree(var) >= dv:
            e = rem.degree(var) - dv
            term = rem.leading_coeff(var).scale(inv) * x ** e
            quotient = quotient + term
            rem = rem - term * divisor
        return quotient, rem

    def primitive_scale(self) -> Fraction:
        """Positive rational ``s`` such that ``s * self`` has coprime integer coefficients."""
        from math import gcd, lcm
        if not self._t:
            return Fraction(1)
        den = 1
        for c in self._t.values():
            den = lcm(den, c.denominator)
        g = 0
        for c in self._t.values():
            g = gcd(g, (c * den).numerator)
        return Fraction(den, g)

    # -- text -------------------------------------------------------------
    def to_text(self) -> str:
        """Canonical text: ``c*z^i*l^j*a^k`` terms in canonical order."""
        if not self._t:
            return "0"
        parts = []
        for n, ((i, j, k), c) in enumerate(self.terms):
            factors = []
            for name, e in zip(VARS, (i, j, k)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if factors and mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([format_rational(mag)] + factors)
            if n == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        """Parse polynomial text (canonical form, or any expression with + - * / ^ ** and parentheses)."""
        return _Parser(text).parse()


def as_poly(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    return MultiPoly.const(x)


ZERO = MultiPoly.const(0)
ONE = MultiPoly.const(1)
Z = MultiPoly.var("z")
L = MultiPoly.var("l")
A = MultiPoly.var("a")


_TOKEN = re.compile(r"\s*(?:(\d+)|(lambda|lam|[zla]|λ)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:pos + 12]!r}")
            num, name, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                self.tokens.append(("var", _ALIASES.get(name, name)))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        p = self.term().scale(sign)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                p = p + t if val == "+" else p - t
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                d = self.factor()
                p = p / d
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                p = p * self.factor()   # implicit multiplication
            else:
                return p

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            return base ** e
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.const(val)
        if kind == "var":
            return MultiPoly.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return p
        if kind == "op" and val == "-":
            return -self.factor()
        raise ValueError(f"unexpected token {val!r}")
