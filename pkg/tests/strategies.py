"""Shared hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

from heunfg.algebra import MultiPoly, SingularRational

small_fraction = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))

monomial_key = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 2))


@st.composite
def multipolys(draw, max_terms=4):
    terms = draw(st.dictionaries(monomial_key, small_fraction, max_size=max_terms))
    p = MultiPoly.const(0)
    for (i, j, k), c in terms.items():
        p = p + MultiPoly.monomial(c, i, j, k)
    return p


@st.composite
def a_polys(draw, max_degree=2):
    coeffs = draw(st.lists(small_fraction, min_size=1, max_size=max_degree + 1))
    return MultiPoly.from_coeffs("a", coeffs)


@st.composite
def singular_rationals(draw, a=None):
    """Random element with poles of order <= 2 at 0, 1, a."""
    f = SingularRational.zero(a)
    for e in range(draw(st.integers(0, 2)) + 1):
        c = draw(a_polys(1)) if a is None else MultiPoly.const(draw(small_fraction))
        f = f + SingularRational.from_poly(c * MultiPoly.var("z", e), a)
    for label in (0, 1, "a"):
        for j in range(1, draw(st.integers(0, 2)) + 1):
            c = draw(a_polys(1)) if a is None else MultiPoly.const(draw(small_fraction))
            f = f + SingularRational.pole(label, j, c, a)
    return f


nonnegative_characteristics = st.tuples(*[st.integers(0, 2)] * 4)
