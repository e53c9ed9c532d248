"""Resultants and discriminants over Q[l] by the subresultant PRS."""
from __future__ import annotations

from fractions import Fraction

from ..errors import DegreeTooLow
from . import upoly
from .multipoly import MultiPoly, as_poly

# A polynomial in z over Q[l] is a list (lowest z-degree first) of
# Fraction lists (lowest l-degree first).


def _lc(P):
    return P[-1]


def _trim(P):
    P = list(P)
    while P and not P[-1]:
        P.pop()
    return P


def _exact(p, d):
    q, r = upoly.q_divmod(p, d)
    if r:
        raise ArithmeticError("inexact division in subresultant sequence")
    return q


def _pseudo_rem(P, Q):
    """lc(Q)**(deg P - deg Q + 1) * P  mod  Q."""
    P = [list(c) for c in P]
    dq = len(Q) - 1
    lq = _lc(Q)
    e = len(P) - dq
    while len(P) - 1 >= dq and P:
        lp = P[-1]
        shift = len(P) - 1 - dq
        P = [upoly.mul(c, lq) for c in P]
        for i, qc in enumerate(Q):
            P[shift + i] = upoly.sub(P[shift + i], upoly.mul(lp, qc))
        P = _trim(P)
        e -= 1
    if e > 0:
        f = _pow(lq, e)
        P = [upoly.mul(c, f) for c in P]
    return P


def _pow(p, n):
    out = [Fraction(1)]
    for _ in range(n):
        out = upoly.mul(out, p)
    return out


def resultant(P, Q):
    """Resultant in z of two polynomials over Q[l] (nested lists)."""
    P, Q = _trim(P), _trim(Q)
    if not P or not Q:
        return []
    s = 1
    if len(P) < len(Q):
        P, Q = Q, P
        if (len(P) - 1) % 2 and (len(Q) - 1) % 2:
            s = -1
    g = [Fraction(1)]
    h = [Fraction(1)]
    while True:
        dA, dB = len(P) - 1, len(Q) - 1
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _pseudo_rem(P, Q)
        P = Q
        div = upoly.mul(g, _pow(h, delta))
        Q = [_exact(c, div) for c in R]
        Q = _trim(Q)
        g = _lc(P)
        # h <- h**(1 - delta) * g**delta
        if delta:
            h = _exact(_pow(g, delta), _pow(h, delta - 1))
        if not Q:
            return []
        if len(Q) - 1 <= 0:
            break
    dA = len(P) - 1
    lb = _lc(Q)
    if dA == 0:
        h = [Fraction(1)]
    else:
        h = _exact(_pow(lb, dA), _pow(h, dA - 1))
    return upoly.scale(h, s)


def _to_nested(p: MultiPoly):
    return _trim([upoly.from_multipoly(c, "l") if not c.is_zero() else []
                  for c in p.coeff_list("z")])


def discriminant_z(p, a=None) -> MultiPoly:
    """Discriminant of ``p`` with respect to z, a polynomial in l over Q.

    ``p`` may involve ``a`` only if a rational value for it is supplied.
    """
    p = as_poly(p)
    if a is not None:
        from .singular import as_modulus
        p = p.subs("a", as_modulus(a))
    if "a" in p.variables():
        raise ValueError("discriminant_z needs a rational value for a")
    n = p.degree("z")
    if n < 2:
        raise DegreeTooLow(f"z-degree {n} < 2")
    P = _to_nested(p)
    dP = _to_nested(p.diff("z"))
    res = resultant(P, dP)
    disc = _exact(res, _lc(P)) if res else []
    if (n * (n - 1) // 2) % 2:
        disc = upoly.scale(disc, -1)
    return upoly.to_multipoly(disc, "l")
