"""Polynomial roots: numeric (Aberth + Newton), exact rational, and exact
roots that are polynomials in the modulus ``a``."""
from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np

from ..errors import NoConvergence
from . import upoly
from .multipoly import MultiPoly, A, L, as_poly

MAX_ITER = 500
DEFAULT_TOL = 1e-12
CLUSTER_RTOL = 1e-8


def _as_complex_list(p):
    if isinstance(p, MultiPoly):
        var = next(iter(p.variables()), "l")
        p = [complex(c) for c in upoly.from_multipoly(p, var)]
    out = [complex(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def backward_error(coeffs, roots) -> float:
    """``max|p - lc*prod(x - r)| / max|p|`` over coefficients (lowest degree first)."""
    p = np.asarray(coeffs, dtype=complex)
    rebuilt = p[-1] * np.poly(np.asarray(roots, dtype=complex))[::-1]
    return float(np.max(np.abs(rebuilt - p)) / np.max(np.abs(p)))


def _aberth_step(pv, dv, z):
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        corr = ratio / (1 - ratio * inv.sum(axis=1))
    return np.where(np.isfinite(corr), corr, 0.0)


def _refine_mp(coeffs, z, dps: int = 40, max_iter: int = 100):
    """Aberth iteration in mpmath starting from double-precision roots.

    Iterates near exactly multiple roots wander at the level of the working
    precision, so the iterate with the smallest backward error is kept.
    """
    best = np.asarray(z, dtype=complex)
    best_err = backward_error(coeffs, best)
    with mpmath.workdps(dps):
        c = [mpmath.mpc(x) for x in coeffs]
        dc = [k * c[k] for k in range(1, len(c))]
        zs = [mpmath.mpc(x) for x in z]
        eps = mpmath.mpf(10) ** (-dps + 8)
        for _ in range(max_iter):
            new = []
            biggest = mpmath.mpf(0)
            for i, zi in enumerate(zs):
                pv = mpmath.polyval(c[::-1], zi)
                dv = mpmath.polyval(dc[::-1], zi)
                if dv == 0:
                    new.append(zi)
                    continue
                ratio = pv / dv
                s = mpmath.fsum(1 / (zi - zj) for j, zj in enumerate(zs) if j != i and zj != zi)
                corr = ratio / (1 - ratio * s)
                new.append(zi - corr)
                biggest = max(biggest, abs(corr) / max(abs(zi), 1))
            zs = new
            cand = np.array([complex(x) for x in zs])
            err = backward_error(coeffs, cand)
            if err < best_err:
                best, best_err = cand, err
            if biggest <= eps or best_err <= 4e-16:
                return best, True
        return best, False


def poly_roots_numeric(p, tol: float = DEFAULT_TOL) -> list:
    """All complex roots (with multiplicity) of ``p``.

    ``p`` is a coefficient sequence, lowest degree first, or a univariate
    :class:`MultiPoly`.  Aberth-Ehrlich simultaneous iteration in double
    precision, polished at 40 digits when the double-precision result misses
    the coefficient backward-error bound ``tol``; :class:`NoConvergence` is
    raised if the bound still fails.
    """
    c = _as_complex_list(p)
    n = len(c) - 1
    if n < 1:
        raise ValueError("polynomial must have degree >= 1")
    # zero roots are exact; deflate them first
    k0 = 0
    while c[k0] == 0:
        k0 += 1
    core = c[k0:]
    m = len(core) - 1
    roots = [0j] * k0
    if m == 0:
        return roots
    lc = core[-1]
    mon = np.array([x / lc for x in core], dtype=complex)
    high = mon[::-1]  # highest degree first for np.polyval
    dhigh = np.polyder(high)
    # Fujiwara-type bound for the initial circle
    radius = 2 * max(abs(mon[k]) ** (1.0 / (m - k)) for k in range(m))
    radius = max(radius, 1e-3)
    angles = 2 * np.pi * np.arange(m) / m + 0.4
    z = radius * 0.5 * np.exp(1j * angles)
    converged = False
    for _ in range(MAX_ITER):
        pv = np.polyval(high, z)
        dv = np.polyval(dhigh, z)
        corr = _aberth_step(pv, dv, z)
        z = z - corr
        rel = float(np.max(np.abs(corr) / np.maximum(np.abs(z), 1.0)))
        if rel <= 1e-14:
            converged = True
            break
    if backward_error(core, z) > 0.1 * tol:
        # double-precision evaluation limits clustered roots; refine at
        # higher working precision and round back
        z, ok = _refine_mp(core, z)
        converged = converged or ok
    err = backward_error(core, z)
    if err > tol:
        if not converged:
            raise NoConvergence(f"Aberth iteration did not converge in {MAX_ITER} steps")
        raise NoConvergence(f"backward error {err:.3e} exceeds tolerance {tol:.1e}")
    out = [complex(x) for x in z]
    if all(x.imag == 0 for x in core):
        # imaginary noise far below double precision left by the refinement
        out = [complex(x.real) if abs(x.imag) <= 1e-25 * max(1.0, abs(x)) else x for x in out]
    return roots + out


def rational_roots(p) -> list:
    """Distinct rational roots of a univariate polynomial over Q (Fraction list or MultiPoly)."""
    if isinstance(p, MultiPoly):
        var = next(iter(p.variables()), "l")
        p = upoly.from_multipoly(p, var)
    p = upoly.trim([Fraction(c) for c in p])
    if len(p) <= 1:
        return []
    out = []
    for f, _ in upoly.q_squarefree(p):
        if len(f) == 2:
            out.append(-f[0] / f[1])
            continue
        for r in poly_roots_numeric([complex(c) for c in f], tol=1e-9):
            if abs(r.imag) > 1e-6 * max(1.0, abs(r)):
                continue
            for bound in (10**3, 10**6, 10**9):
                q = Fraction(r.real).limit_denominator(bound)
                if upoly.evaluate(f, q) == 0:
                    if q not in out:
                        out.append(q)
                    break
    return sorted(out)


def _series_mul(x, y, n):
    out = [Fraction(0)] * n
    for i, xi in enumerate(x[:n]):
        if xi:
            for j, yj in enumerate(y[: n - i]):
                out[i + j] += xi * yj
    return out


def _series_inv(x, n):
    inv0 = 1 / x[0]
    out = [inv0] + [Fraction(0)] * (n - 1)
    for k in range(1, n):
        s = sum(x[j] * out[k - j] for j in range(1, min(k, len(x) - 1) + 1))
        out[k] = -s * inv0
    return out


def _lift_root(p: MultiPoly, a0: Fraction, r0: Fraction, order: int):
    """Power series ``r(t)`` with ``p(r(t), a0 + t) = 0 mod t**order``."""
    shifted = p.subs("a", A + a0)  # a now plays the role of t
    coeffs = [[Fraction(c.coeff(0, 0, k)) for k in range(order)]
              for c in shifted.coeff_list("l")]
    dcoeffs = [[j * v for v in coeffs[j]] for j in range(1, len(coeffs))]

    def horner(cs, r):
        acc = [Fraction(0)] * order
        for c in reversed(cs):
            acc = _series_mul(acc, r, order)
            acc = [u + v for u, v in zip(acc, c)]
        return acc

    r = [r0] + [Fraction(0)] * (order - 1)
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        val = horner(coeffs, r)
        der = horner(dcoeffs, r)
        step = _series_mul(val, _series_inv(der, order), order)
        r = [u - v for u, v in zip(r, step)]
    return r


def _series_to_poly(r, a0) -> MultiPoly:
    t = A - a0
    out = MultiPoly.const(0)
    for k in reversed(range(len(r))):
        out = out * t + r[k]
    return out


def _root_degree_bound(p: MultiPoly) -> int:
    n = p.degree("l")
    cl = p.coeff_list("l")
    bound = 0
    for k in range(n):
        d = cl[k].degree("a")
        if d >= 0:
            bound = max(bound, math.ceil(d / (n - k)))
    return bound


_SPECIALIZATIONS = [Fraction(x) for x in (2, 3, 5, 7, -2, 11, -3, 13, 17, -5, 19, 23)]


def linear_factors_in_a(p) -> list:
    """Roots ``r(a)`` in Q[a] of ``p(l, a)``, monic in ``l``, with multiplicities.

    Returns ``[(root MultiPoly in a, multiplicity), ...]`` and the cofactor
    left after dividing out all found linear factors.  Roots are found at an
    integer specialisation of ``a``, lifted by Newton iteration in
    ``a - a0`` up to the a-degree bound, and confirmed by exact substitution.
    """
    p = as_poly(p)
    if p.variables() - {"l", "a"}:
        raise ValueError("expected a polynomial in l and a")
    lc = p.leading_coeff("l")
    if not lc.is_constant():
        raise ValueError("polynomial must have constant leading coefficient in l")
    rem = p.scale(1 / lc.constant_value())
    found = {}
    progress = True
    while progress and rem.degree("l") >= 1:
        progress = False
        for k in range(rem.degree("l")):
            q = rem
            for _ in range(k):
                q = q.diff("l")
            order = _root_degree_bound(rem) + 1
            root = None
            for a0 in _SPECIALIZATIONS:
                q0 = q.subs("a", a0)
                dq0 = q0.diff("l")
                for r0 in rational_roots(q0):
                    if dq0.subs("l", r0).is_zero():
                        continue
                    cand = _series_to_poly(_lift_root(q, a0, r0, order), a0)
                    if rem.subs("l", cand).is_zero():
                        root = cand
                        break
                if root is not None:
                    break
            if root is not None:
                while rem.degree("l") >= 1 and rem.subs("l", root).is_zero():
                    rem, r = rem.divmod(L - root, "l")
                    assert r.is_zero()
                    found[root] = found.get(root, 0) + 1
                progress = True
                break
    roots = sorted(found.items(), key=lambda kv: kv[0].to_text())
    return roots, rem


def cluster_roots(roots, rtol: float = CLUSTER_RTOL) -> list:
    """Group numerically coincident roots: ``[(mean value, count), ...]``."""
    groups = []
    for r in roots:
        for g in groups:
            if abs(r - g[0]) <= rtol * max(1.0, abs(g[0])):
                g[1].append(r)
                break
        else:
            groups.append([r, [r]])
    return [(complex(np.mean(g[1])), len(g[1])) for g in groups]


def exact_roots_with_multiplicity(p, tol: float = DEFAULT_TOL) -> list:
    """Roots of a univariate polynomial over Q via exact squarefree decomposition.

    Returns ``[(complex root, multiplicity), ...]``; rational roots are exact.
    """
    if isinstance(p, MultiPoly):
        var = next(iter(p.variables()), "l")
        p = upoly.from_multipoly(p, var)
    out = []
    for f, mult in upoly.q_squarefree(p):
        if len(f) == 2:
            out.append((complex(-f[0] / f[1]), mult))
            continue
        for r in poly_roots_numeric([complex(c) for c in f], tol=tol):
            out.append((r, mult))
    return out
