"""Double-exponential (tanh-sinh) quadrature on [0, 1]."""
from __future__ import annotations

import math

import numpy as np

from ..errors import QuadratureNoConvergence

T_MAX = 4.5
MAX_NODES = 2 ** 18


def _nodes(t):
    """Abscissae s, complements 1 - s and weights ds/dt at parameters t."""
    u = 0.5 * math.pi * np.sinh(t)
    s = 1.0 / (1.0 + np.exp(-2.0 * u))
    sc = 1.0 / (1.0 + np.exp(2.0 * u))
    w = math.pi * np.cosh(t) * s * sc
    return s, sc, w


def tanh_sinh(f, tol: float = 1e-12, max_nodes: int = MAX_NODES, min_levels: int = 3):
    """Integrate ``f`` over [0, 1].

    ``f(s, sc)`` receives arrays of abscissae and their complements
    ``1 - s`` (computed without cancellation, so endpoint singularities can
    be evaluated accurately) and returns values of the same shape.  The step
    is halved until two successive estimates agree to
    ``tol * (1 + |I|)``.  Returns ``(value, error_estimate, n_nodes)``.
    """
    h = 0.5
    k = np.arange(-int(T_MAX / h), int(T_MAX / h) + 1)
    t = k * h

    def partial(t):
        s, sc, w = _nodes(t)
        vals = np.asarray(f(s, sc), dtype=complex)
        contrib = vals * w
        return complex(np.sum(np.where(np.isfinite(contrib), contrib, 0.0)))

    total = partial(t)
    n = t.size
    estimate = h * total
    err = math.inf
    level = 0
    while True:
        h /= 2
        level += 1
        t_new = np.arange(h, T_MAX + h / 2, 2 * h)
        t_new = np.concatenate([-t_new[::-1], t_new])
        n += t_new.size
        if n > max_nodes:
            raise QuadratureNoConvergence(
                f"tanh-sinh did not converge with {max_nodes} nodes (last change {err:.2e})")
        total += partial(t_new)
        new = h * total
        err = abs(new - estimate)
        estimate = new
        if level >= min_levels and err <= tol * (1 + abs(new)):
            return new, err, n
