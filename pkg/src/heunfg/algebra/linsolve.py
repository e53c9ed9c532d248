"""Fraction-free exact linear solving over Q[a].

Rows are scaled to integer coefficients, then eliminated with Bareiss'
division-controlled update so every intermediate entry is an exact minor in
Z[a].  The result is returned as reduced rational functions of ``a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import Inconsistent, Underdetermined
from . import upoly
from .multipoly import MultiPoly, as_poly


@dataclass(frozen=True)
class RatFunc:
    """Reduced quotient ``num/den`` of polynomials in ``a``; ``den`` is monic."""

    num: MultiPoly
    den: MultiPoly

    @classmethod
    def from_lists(cls, num, den) -> "RatFunc":
        num, den = upoly.trim(num), upoly.trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = upoly.q_gcd(num, den) if num else [Fraction(1)]
        n = upoly.q_divmod(num, g)[0] if num else []
        d = upoly.q_divmod(den, g)[0]
        lc = Fraction(d[-1])
        n = [Fraction(c) / lc for c in n]
        d = [Fraction(c) / lc for c in d]
        if not n:
            d = [Fraction(1)]
        return cls(upoly.to_multipoly(n, "a"), upoly.to_multipoly(d, "a"))

    @classmethod
    def of(cls, p) -> "RatFunc":
        return cls(as_poly(p), MultiPoly.const(1))

    def is_polynomial(self) -> bool:
        return self.den == 1

    def as_poly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial in a")
        return self.num

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (MultiPoly, int, Fraction)):
            return self.den == 1 and self.num == as_poly(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def subs_a(self, value) -> Fraction:
        return self.num.subs("a", value).constant_value() / self.den.subs("a", value).constant_value()

    def __str__(self):
        if self.is_polynomial():
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"


@dataclass(frozen=True)
class ExactMatrix:
    """Rectangular matrix with entries in Q[a]."""

    rows: tuple

    @classmethod
    def of(cls, rows) -> "ExactMatrix":
        rows = tuple(tuple(as_poly(e) for e in row) for row in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        for row in rows:
            for e in row:
                if e.variables() - {"a"}:
                    raise ValueError("matrix entries must lie in Q[a]")
        return cls(rows)

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def _row_to_ints(entries):
    lists = [upoly.from_multipoly(e, "a") for e in entries]
    den = 1
    for lst in lists:
        for c in lst:
            den = lcm(den, c.denominator)
    return [[int(c * den) for c in lst] for lst in lists]


def _bareiss(rows, ncols):
    """In-place sparse Bareiss elimination.

    ``rows`` are dicts ``col -> int list`` (column ``ncols`` is the right-hand
    side).  Returns ``(rank_rows, pivot_cols, free_cols)``.
    """
    n = len(rows)
    prev = [1]
    r = 0
    pivot_cols, free_cols = [], []
    mul, sub, exact_div = upoly.mul, upoly.sub, upoly.z_exact_div
    for c in range(ncols):
        best, best_key = None, None
        for i in range(r, n):
            e = rows[i].get(c)
            if e:
                key = (len(e), i)
                if best_key is None or key < best_key:
                    best, best_key = i, key
        if best is None:
            free_cols.append(c)
            continue
        rows[r], rows[best] = rows[best], rows[r]
        prow = rows[r]
        p = prow[c]
        trivial = prev == [1]
        for i in range(r + 1, n):
            row = rows[i]
            f = row.pop(c, None)
            new = {}
            cols = set(row)
            if f:
                cols.update(prow)
                cols.discard(c)
            for j in cols:
                v = mul(p, row.get(j, []))
                if f:
                    w = prow.get(j)
                    if w:
                        v = sub(v, mul(f, w))
                if v and not trivial:
                    v = exact_div(v, prev)
                if v:
                    new[j] = v
            rows[i] = new
        prev = p
        pivot_cols.append(c)
        r += 1
    return r, pivot_cols, free_cols


def exact_linear_solve(A, b):
    """Solve ``A x = b`` exactly over Q(a).

    ``A`` is an :class:`ExactMatrix` (or nested list) with at least as many rows
    as columns.  Returns a list of :class:`RatFunc`.  Raises
    :class:`Inconsistent` when no solution exists and :class:`Underdetermined`
    when the solution is not unique.
    """
    if not isinstance(A, ExactMatrix):
        A = ExactMatrix.of(A)
    nrows, ncols = A.shape
    b = [as_poly(x) for x in b]
    if len(b) != nrows:
        raise ValueError("right-hand side length does not match the row count")
    if nrows < ncols:
        raise ValueError("need at least as many rows as columns")
    rows = []
    for i in range(nrows):
        ints = _row_to_ints(list(A.rows[i]) + [b[i]])
        rows.append({j: v for j, v in enumerate(ints) if v})
    rank, pivot_cols, free_cols = _bareiss(rows, ncols)
    for i in range(rank, nrows):
        if rows[i]:
            raise Inconsistent(f"row {i} reduces to 0 = nonzero")
    if free_cols:
        raise Underdetermined(f"{len(free_cols)} free column(s): {free_cols}")

    det = rows[rank - 1][pivot_cols[-1]]
    X = [None] * ncols
    for k in range(rank - 1, -1, -1):
        row = rows[k]
        acc = upoly.mul(det, row.get(ncols, []))
        for j in range(k + 1, ncols):
            u = row.get(j)
            if u and X[j]:
                acc = upoly.sub(acc, upoly.mul(u, X[j]))
        X[k] = upoly.z_exact_div(acc, row[k]) if acc else []
    return [RatFunc.from_lists([Fraction(c) for c in x], [Fraction(c) for c in det]) for x in X]
