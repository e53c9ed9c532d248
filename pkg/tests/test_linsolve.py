from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heunfg.algebra import A, ExactMatrix, MultiPoly, RatFunc, exact_linear_solve
from heunfg.errors import Inconsistent, Underdetermined
from strategies import a_polys

ONE = MultiPoly.const(1)


def test_identity_system():
    x = exact_linear_solve(ExactMatrix.of([[1, 0], [0, 1]]), [3, Fraction(-1, 2)])
    assert x == [RatFunc.of(3), RatFunc.of(Fraction(-1, 2))]


def test_symbolic_cramer_example():
    x = exact_linear_solve(ExactMatrix.of([[A, ONE], [ONE, ONE]]), [ONE, MultiPoly.const(0)])
    assert x[0].num == ONE and x[0].den == A - 1
    assert x[1].num == -ONE and x[1].den == A - 1


def test_parallel_rows_are_inconsistent():
    with pytest.raises(Inconsistent):
        exact_linear_solve(ExactMatrix.of([[1, 1], [2, 2]]), [1, 3])


def test_rank_deficient_is_underdetermined():
    with pytest.raises(Underdetermined):
        exact_linear_solve(ExactMatrix.of([[1, 1], [2, 2]]), [1, 2])


def test_overdetermined_consistent():
    x = exact_linear_solve(ExactMatrix.of([[1, 0], [0, 1], [1, 1]]), [2, 5, 7])
    assert x == [RatFunc.of(2), RatFunc.of(5)]


def _mat_vec_check(rows, x, b):
    # clear denominators: sum_j A_ij num_j / den_j == b_i
    for row, bi in zip(rows, b):
        den = ONE
        for xj in x:
            den = den * xj.den
        acc = MultiPoly.const(0)
        for aij, xj in zip(row, x):
            acc = acc + aij * xj.num * (den.divmod(xj.den, "a")[0])
        assert acc == bi * den


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(a_polys(1), min_size=n, max_size=n), min_size=n, max_size=n + 1),
    st.lists(a_polys(1), min_size=n + 1, max_size=n + 1))))
def test_solution_satisfies_system(data):
    n, rows, b = data
    b = b[: len(rows)]
    try:
        x = exact_linear_solve(ExactMatrix.of(rows), b)
    except (Inconsistent, Underdetermined):
        return
    _mat_vec_check(rows, x, b)
