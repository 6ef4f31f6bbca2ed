import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from root_of_unity_numerics import ConfigurationError
from chiral_potts_curve import point_from_lambda
from drinfeld_polynomial import (
    SpinPattern, ab_determinant_residual, ab_values, all_patterns, analytic_eigenvalue,
    build_drinfeld, canonical_theta, compute_P, drinfeld_coefficients, eigenvalue_table,
    functional_check, generating_route_check, newton_check, power_sum_ladder_check,
    root_structure_check, s_coefficient_check, theta_check,
)


@pytest.mark.parametrize("N,L,expected", [
    (3, 3, [1, 7, 1]),
    (4, 4, [1, 31, 31, 1]),
    (3, 6, [1, 50, 141, 50, 1]),
    (2, 2, [1, 1]),
])
def test_drinfeld_coefficients(N, L, expected):
    coefficients = drinfeld_coefficients(N, L)
    assert coefficients == expected
    assert all(isinstance(c, int) for c in coefficients)


@pytest.mark.parametrize("N,L", [(3, 3), (4, 4), (3, 6), (5, 5)])
def test_polynomial_at_one(N, L):
    assert compute_P(N, L)(1) == pytest.approx(N ** (L - 1))


def test_rejects_bad_chain_length():
    with pytest.raises(ConfigurationError):
        drinfeld_coefficients(3, 4)


@pytest.mark.parametrize("N,L", [(3, 3), (4, 4), (3, 6)])
def test_root_structure(N, L):
    dd = build_drinfeld(N, L, 0.3)
    assert dd.r == L * (N - 1) // N
    report = root_structure_check(dd)
    assert report["lambda_symmetry"] == 0
    assert report["lambda_ends"] == 0
    assert report["root_product"] < 1e-10
    assert report["pairing"] < 1e-10
    assert newton_check(dd)["relative"] < 1e-10
    assert generating_route_check(N, L) < 1e-9


def test_four_four_has_a_self_paired_root():
    dd = build_drinfeld(4, 4, 0.5)
    assert len(dd.self_paired) == 1
    m = dd.self_paired[0]
    assert dd.roots[m] == pytest.approx(-1)
    assert dd.pairing[m] == m


def test_three_three_roots_pair_with_each_other():
    dd = build_drinfeld(3, 3, 0.3)
    assert dd.pairing == (1, 0)
    assert dd.self_paired == ()
    assert abs(dd.roots[0]) < abs(dd.roots[1])


def test_s_coefficients_and_ladder(model):
    report = s_coefficient_check(model.dd)
    assert report["S0"] < 1e-10
    assert report["series_inverse"] < 1e-9
    assert report["negative_range"] < 1e-9
    assert power_sum_ladder_check(model.dd) < 1e-9


def test_theta_and_rho(model):
    report = theta_check(model.dd)
    assert report["cosh"] < 1e-10
    assert report["rho"] < 1e-12
    assert report["branch"] == 0
    assert np.all(model.dd.theta.real >= 0)


@pytest.mark.parametrize("value", [2.5, -0.3 + 0.2j, 1.0 + 1e-9j, -4.0])
def test_canonical_theta_branch(value):
    theta = canonical_theta(value)
    assert cmath.cosh(2 * theta) == pytest.approx(value, rel=1e-9, abs=1e-9)
    assert theta.real >= 0
    if theta.real == 0:
        assert 0 <= theta.imag < cmath.pi
    else:
        assert abs(theta.imag) <= cmath.pi / 2 + 1e-12


def test_canonical_theta_keeps_principal_sign():
    # acosh(−4)/2 = 1.03 + iπ/2; no iπ shift may flip cosh θ and sinh θ
    theta = canonical_theta(-4.0)
    principal = cmath.acosh(-4.0) / 2
    assert theta == pytest.approx(principal, abs=1e-12)
    theta = canonical_theta(-0.3 - 0.2j)
    principal = cmath.acosh(-0.3 - 0.2j) / 2
    expected = principal if principal.real >= 0 else -principal
    assert theta == pytest.approx(expected, abs=1e-12)


def test_spin_pattern_indexing():
    r = 3
    patterns = all_patterns(r)
    assert patterns[0] == SpinPattern.all_plus(r)
    assert patterns[-1] == SpinPattern.all_minus(r)
    assert [p.index for p in patterns] == list(range(8))
    pattern = SpinPattern.from_index(5, 3)
    assert pattern.xi == (-1, 1, -1)
    assert pattern.label() == "-+-"
    assert pattern.plus_modes == (1,)
    assert pattern.minus_modes == (0, 2)
    assert pattern.flipped(1) == SpinPattern((-1, -1, -1))
    with pytest.raises(ConfigurationError):
        SpinPattern((1, 0))
    with pytest.raises(ConfigurationError):
        SpinPattern.from_index(8, 3)


def test_eigenvalue_is_a_product_over_modes(model33):
    dd, lam = model33.dd, model33.q.lam
    (A1, B1), (A2, B2) = ab_values(0, lam, dd), ab_values(1, lam, dd)
    assert analytic_eigenvalue((1, -1), lam, dd) == pytest.approx((A1 - B1) * (A2 + B2))
    table = eigenvalue_table(lam, dd)
    assert table[3] == pytest.approx((A1 + B1) * (A2 + B2))
    with pytest.raises(ConfigurationError):
        analytic_eigenvalue((1, 1, 1), lam, dd)
    with pytest.raises(ConfigurationError):
        ab_values(0, 0, dd)


def test_ab_determinant(model):
    for j in range(model.dd.r):
        assert ab_determinant_residual(j, model.q, model.dd) < 1e-10


@settings(max_examples=20, deadline=None)
@given(st.floats(min_value=0.5, max_value=2.0), st.floats(min_value=-3.0, max_value=3.0))
def test_functional_relation(radius, angle):
    dd = build_drinfeld(3, 3, 0.3)
    lam = cmath.rect(radius, angle)
    if min(abs(lam - 0.3), abs(lam - 1 / 0.3)) < 1e-2:
        return
    q = point_from_lambda(0.3, lam, 3)
    report = functional_check(lam, dd, dd.p, q)
    assert report["relation"] < 1e-8
    assert report["pattern_spread"] < 1e-12
    assert report["theta_form_upper"] < 1e-8
    assert report["theta_form_lower"] < 1e-8


def test_functional_relation_four_four(model44):
    report = functional_check(model44.q.lam, model44.dd, model44.p, model44.q)
    assert max(report.values()) < 1e-8


def test_summary_is_plain(model33):
    summary = model33.dd.summary()
    assert summary["lambdas"] == [1, 7, 1]
    assert len(summary["roots"]) == 2
