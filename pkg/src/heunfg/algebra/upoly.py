"""Dense univariate polynomial helpers.

Polynomials are plain lists of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  Two flavours share the same
layout: Fraction coefficients (``q_*``, arithmetic over Q) and int
coefficients (``z_*``, arithmetic over Z used by fraction-free elimination).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .multipoly import MultiPoly


def trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p) -> int:
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return trim(out)


def scale(p, c):
    return trim([c * x for x in p])


def derivative(p):
    return trim([i * p[i] for i in range(1, len(p))])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


# -- over Q ----------------------------------------------------------------

def q_divmod(p, d):
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    p = [Fraction(c) for c in p]
    q = [Fraction(0)] * max(len(p) - len(d) + 1, 0)
    inv = 1 / Fraction(d[-1])
    while len(p) >= len(d) and p:
        shift = len(p) - len(d)
        c = p[-1] * inv
        q[shift] = c
        for i, dc in enumerate(d):
            p[shift + i] -= c * dc
        p = trim(p)
    return trim(q), p


def q_monic(p):
    if not p:
        return []
    inv = 1 / Fraction(p[-1])
    return [Fraction(c) * inv for c in p]


def q_gcd(p, q):
    """Monic gcd over Q."""
    p, q = trim(p), trim(q)
    while q:
        _, r = q_divmod(p, q)
        p, q = q, r
    return q_monic(p)


def q_squarefree(p):
    """Yun's algorithm: list of ``(factor, multiplicity)`` with monic squarefree factors."""
    p = q_monic(trim(p))
    if len(p) <= 1:
        return []
    out = []
    dp = derivative(p)
    g = q_gcd(p, dp)
    b = q_divmod(p, g)[0]
    c = q_divmod(dp, g)[0]
    d = sub(c, derivative(b))
    k = 1
    while len(b) > 1:
        a = q_gcd(b, d)
        if len(a) > 1:
            out.append((a, k))
        b = q_divmod(b, a)[0]
        c = q_divmod(d, a)[0]
        d = sub(c, derivative(b))
        k += 1
    return out


def q_primitive(p):
    """Scale to coprime integers with positive leading coefficient; returns int list."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


# -- over Z ----------------------------------------------------------------

def z_exact_div(p, d):
    """Quotient of ``p`` by ``d`` in Z[x]; raises ArithmeticError if not exact."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    if not p:
        return []
    p = list(p)
    ld = d[-1]
    nd = len(d)
    q = [0] * (len(p) - nd + 1) if len(p) >= nd else []
    while p:
        if len(p) < nd:
            raise ArithmeticError("inexact polynomial division")
        shift = len(p) - nd
        c, r = divmod(p[-1], ld)
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[shift] = c
        for i in range(nd):
            p[shift + i] -= c * d[i]
        while p and not p[-1]:
            p.pop()
    return trim(q)


def z_content(p) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


# -- conversion --------------------------------------------------------------

def from_multipoly(p: MultiPoly, var: str):
    """Dense Fraction list of a MultiPoly that only involves ``var``."""
    extra = p.variables() - {var}
    if extra:
        raise ValueError(f"polynomial involves {sorted(extra)} besides {var}")
    return trim([c.constant_value() for c in p.coeff_list(var)])


def to_multipoly(p, var: str) -> MultiPoly:
    return MultiPoly.from_coeffs(var, [Fraction(c) for c in p])
