import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from heunfg import (
    SpectralCurve, accessory_shift, back_shifted_eigenvalues, branch_factorize, branch_points,
    build_psi, class_multiplicities, enumerate_nk, genus, heun_determinant, heun_polynomial,
    heun_polynomial_eigenvalues, nu_squared, special_lambda_roots, stieltjes_checks,
)
from heunfg.algebra import A, L, MultiPoly, Z
from heunfg.curve import exact_branch_points
from heunfg.errors import EmptyClass
from strategies import nonnegative_characteristics

MODULI = [Fraction(2), Fraction(3), Fraction(7, 2)]


def _close_multisets(xs, ys, rtol=1e-8):
    xs, ys = list(map(complex, xs)), list(map(complex, ys))
    if len(xs) != len(ys):
        return False
    for x in xs:
        k = min(range(len(ys)), key=lambda i: abs(ys[i] - x))
        if abs(ys[k] - x) > rtol * max(1.0, abs(x)):
            return False
        ys.pop(k)
    return True


# -- the curve -----------------------------------------------------------------

def test_trivial_curve():
    assert nu_squared(build_psi((0, 0, 0, 0))).nu2 == L


def test_curve_for_1100_factors():
    assert nu_squared(build_psi((1, 1, 0, 0))).nu2 == (L + A + 1) * (L * L - A.scale(4))


def test_curve_for_1110_factors():
    expected = L * (L + A.scale(3)) * (L + (A - 1).scale(3)) * (L * L + (A.scale(2) - 1).scale(2) * L - 3)
    assert nu_squared(build_psi((1, 1, 1, 0))).nu2 == expected


@given(nonnegative_characteristics)
def test_curve_is_monic_of_odd_degree(m):
    nu2 = nu_squared(build_psi(m)).nu2
    assert nu2.degree("l") == 2 * genus(m) + 1
    assert nu2.leading_coeff("l") == MultiPoly.const(1)
    assert nu2.degree("z") <= 0


def test_curve_json_round_trip():
    curve = nu_squared(build_psi((2, 1, 1, 0)))
    back = SpectralCurve.from_json(json.loads(json.dumps(curve.to_json())))
    assert back.nu2 == curve.nu2 and back.genus == curve.genus


@pytest.mark.parametrize("m, a, expected", [
    ((0, 1, 0, 0), 2, [0, -1, -2]),
    ((1, 1, 1, 1), 3, [0, -12, -4]),
    ((0, 0, 0, 0), 5, [0]),
])
def test_branch_point_examples(m, a, expected):
    assert _close_multisets(branch_points(nu_squared(build_psi(m)), a), expected, 1e-12)


def test_branch_points_are_roots():
    curve = nu_squared(build_psi((2, 1, 1, 1)))
    for lam in branch_points(curve, 3):
        assert abs(curve.evaluate(lam, 3)) < 1e-6 * max(1, abs(lam)) ** 7


def test_exact_branch_points_symbolic():
    curve = nu_squared(build_psi((1, 1, 1, 1)))
    assert {r.to_text() for r in exact_branch_points(curve)} == {"0", "-4*a", "-4"}


# -- sign classes ----------------------------------------------------------------

def test_sign_classes_zero():
    (c,) = enumerate_nk((0, 0, 0, 0))
    assert c.reduced.as_tuple() == (0, 0, 0, 0) and c.count == 1 and c.degree == 0


def test_sign_classes_single_m0():
    classes = enumerate_nk((1, 0, 0, 0))
    assert sorted(c.reduced.as_tuple() for c in classes) == sorted(
        [(1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1)])
    assert all(c.count == 1 for c in classes)


def test_sign_classes_all_ones():
    (c,) = enumerate_nk((1, 1, 1, 1))
    assert c.reduced.as_tuple() == (1, 1, 1, 1) and c.count == 3


@given(st.tuples(*[st.integers(0, 3)] * 4))
def test_counting_law(m):
    classes = enumerate_nk(m)
    assert sum(c.count for c in classes) == 2 * genus(m) + 1
    for c in classes:
        assert 2 * (c.count - 1) == sum(c.reduced)


def test_class_multiplicities():
    m = (2, 1, 0, 2)
    c = next(c for c in enumerate_nk(m) if c.pattern == (0, 1, 0, 0))
    assert c.reduced.as_tuple() == (2, -2, 0, 2)
    assert class_multiplicities(m, c) == (0, 3, 0, 0)


# -- Heun polynomials --------------------------------------------------------------

def test_constant_heun_polynomial():
    sols = heun_polynomial_eigenvalues((0, 0, 0, 0), 0)
    assert len(sols) == 1
    assert sols[0].eigenvalue == MultiPoly.const(0) and sols[0].polynomial == MultiPoly.const(1)


def test_quadratic_heun_polynomials_symbolic():
    sols = heun_polynomial_eigenvalues((1, 1, 1, 1), 2)
    assert {s.eigenvalue.to_text() for s in sols} == {"0", "-4*a", "-4"}


def test_heun_polynomial_solves_the_equation():
    mt, d = (1, 1, 1, 1), 2
    D = Z * (Z - 1) * (Z - A)
    Pn = ((Z - 1) * (Z - A)).scale(-1) + (Z * (Z - A)).scale(-1) + (Z * (Z - 1)).scale(-1)
    Pn = Pn.scale(Fraction(1, 2))
    for s in heun_polynomial_eigenvalues(mt, d):
        F = s.polynomial
        Q = Z.scale(4 * (4 - 2 - 1)) + s.eigenvalue
        assert (D.scale(4) * F.diff("z").diff("z") + Pn.scale(4) * F.diff("z") + Q * F).is_zero()


def test_unattainable_degree():
    with pytest.raises(EmptyClass):
        heun_polynomial((0, 0, 0, 0), 1, Fraction(0))


def test_back_shift_recovers_branch_points():
    assert _close_multisets(back_shifted_eigenvalues((0, 1, 0, 0), 2), [0, -1, -2], 1e-12)


def test_determinant_roots_match_eigenvalues():
    det = heun_determinant((1, 1, 1, 1), 2)
    assert det == L * (L + A.scale(4)) * (L + 4)


def test_accessory_shift_identity_class():
    assert accessory_shift((2, 1, 1, 0), (0, 0, 0, 0)).is_zero()


@settings(max_examples=25)
@given(nonnegative_characteristics, st.sampled_from(MODULI))
def test_two_routes_agree(m, a):
    curve = nu_squared(build_psi(m))
    assert _close_multisets(branch_points(curve, a), back_shifted_eigenvalues(m, a))


# -- factorisation at branch points ------------------------------------------------

def test_factorize_linear_case():
    rec = branch_factorize(build_psi((1, 0, 0, 0)), Fraction(1))
    assert rec.multiplicities == (0, 0, 0, 1)
    assert rec.F == MultiPoly.const(1) and rec.degree == 0


def test_factorize_perfect_square():
    rec = branch_factorize(build_psi((1, 1, 1, 1)), MultiPoly.const(0))
    assert rec.multiplicities == (0, 0, 0, 0)
    assert rec.F == Z * Z - A and rec.degree == 2 and rec.count == 3


def test_factorize_symbolic_branch_point():
    rec = branch_factorize(build_psi((1, 1, 1, 1)), A.scale(-4))
    assert rec.F == Z * Z - (A * Z).scale(2) + A


def test_factorize_numeric_matches_exact():
    psi = build_psi((2, 1, 0, 1), 3)
    for lam in branch_points(nu_squared(psi)):
        rec = branch_factorize(psi, lam)
        M = rec.multiplicities
        assert all(Mi in (0, 2 * mi + 1) for Mi, mi in zip(M, (2, 1, 0, 1)))
        assert rec.degree == (sum((2, 1, 0, 1)) - M[0] - sum(M[1:])) // 2
        z = 0.37 + 0.61j
        lhs = np.polyval(np.array(psi.z_poly_numeric(lam))[::-1], z)
        F = np.polyval(np.array(rec.F_coeffs())[::-1], z)
        rhs = complex(rec.scale) * z ** M[1] * (z - 1) ** M[2] * (z - 3) ** M[3] * F ** 2
        assert abs(lhs - rhs) <= 1e-8 * max(1, abs(lhs))


def test_factorize_json():
    rec = branch_factorize(build_psi((1, 1, 1, 1), 3), Fraction(0))
    data = json.loads(json.dumps(rec.to_json()))
    assert data["F"] == "z^2 - 3" and data["exact"] and data["degree"] == 2


# -- special roots and Stieltjes relations ----------------------------------------

def test_special_roots_example():
    roots = special_lambda_roots(build_psi((0, 1, 0, 0)), 2)
    assert _close_multisets(roots["leading"], [0])
    assert _close_multisets(roots["at_1"], [-2])
    assert _close_multisets(roots["at_a"], [-1])
    assert roots["at_0"] == []


def test_special_roots_constant_psi():
    roots = special_lambda_roots(build_psi((0, 0, 0, 0)), 2)
    assert all(v == [] for v in roots.values())


def test_special_roots_discriminant():
    roots = special_lambda_roots(build_psi((1, 1, 0, 0)), 4)
    assert _close_multisets(roots["discriminant"], [4, -4])
    branch = branch_points(nu_squared(build_psi((1, 1, 0, 0))), 4)
    assert _close_multisets(branch, [-5, 4, -4])


def test_stieltjes_vacuous():
    rec = branch_factorize(build_psi((0, 0, 0, 0), 2), Fraction(0))
    assert stieltjes_checks(rec).passed()


def test_stieltjes_branch_record():
    rec = branch_factorize(build_psi((1, 1, 1, 1), 3), Fraction(-12))
    report = stieltjes_checks(rec)
    assert _close_multisets(report.zeros, [3 + 6 ** 0.5, 3 - 6 ** 0.5])
    assert report.passed(1e-12)


def test_stieltjes_generic_single_zero():
    report = stieltjes_checks(build_psi((1, 0, 0, 0), 2), lam=5)
    assert _close_multisets(report.zeros, [-2])
    assert report.max_residual < 1e-14


@settings(max_examples=20)
@given(nonnegative_characteristics.filter(lambda m: sum(m) > 0),
       st.complex_numbers(min_magnitude=0.5, max_magnitude=20, allow_nan=False, allow_infinity=False))
def test_generic_lambda_zero_structure(m, lam):
    psi = build_psi(m, 3)
    curve = nu_squared(psi)
    if min(abs(lam - b) for b in branch_points(curve)) < 1e-2:
        return
    coeffs = psi.z_poly_numeric(lam)
    assert abs(coeffs[-1]) > 0
    for s in (0, 1, 3):
        assert abs(np.polyval(np.array(coeffs)[::-1], s)) > 0
    report = stieltjes_checks(psi, lam=lam, curve=curve)
    assert report.passed(1e-6)
