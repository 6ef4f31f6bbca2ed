import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from root_of_unity_numerics import ConfigurationError, SingularPointError
from generating_functions import (
    EdgeConfig, GeneratingKind, configs_with_charge, conjugation_residual, exponent_duality_check,
    g_closed_form, g_poly, gen_function, gram_check, h_identity_check, h_poly, k_coeff, kbar_coeff,
    leading_coeff_check, polynomial_table, product_form, taylor_coefficients, term_count,
)


def test_edge_config_sums():
    conf = EdgeConfig((2, 1, 0), 3)
    assert conf.charge == 3 and conf.k == 1
    assert conf.prefix == (0, 2, 3)
    assert conf.suffix == (1, 0, 0)
    assert conf.site_moment == 2 + 2
    assert conf.complement() == EdgeConfig((0, 1, 2), 3)
    assert conf.label() == "210"
    for pre, n, suf in zip(conf.prefix, conf.n, conf.suffix):
        assert pre + n + suf == conf.charge


def test_edge_config_rejects_out_of_range_entries():
    with pytest.raises(ConfigurationError):
        EdgeConfig((3, 0, 0), 3)


def test_charge_n_configs_for_three_three():
    configs = configs_with_charge(3, 3, 3)
    assert len(configs) == 7
    assert EdgeConfig((1, 1, 1), 3) in configs
    assert [c.n for c in configs] == sorted(c.n for c in configs)


def test_k_coefficients_of_the_zero_configuration():
    zeros = EdgeConfig((0, 0, 0), 3)
    assert k_coeff(zeros, 0) == pytest.approx(1)
    assert k_coeff(zeros, 1) == pytest.approx(3)
    for m in range(7):
        assert kbar_coeff(zeros, m) == pytest.approx(k_coeff(zeros, m))
    with pytest.raises(ConfigurationError):
        k_coeff(zeros, 7)


@pytest.mark.parametrize("N,L", [(3, 3), (4, 4)])
def test_k_coefficients_are_taylor_coefficients(N, L):
    order = (N - 1) * L - N
    for conf in configs_with_charge(N, L, N):
        series = taylor_coefficients(conf, order)
        direct = [k_coeff(conf, m) for m in range(order + 1)]
        np.testing.assert_allclose(series, direct, atol=1e-10)


def test_gen_function_against_truncated_series():
    conf = EdgeConfig((1, 1, 1), 3)
    t = 0.2 + 0.1j
    series = taylor_coefficients(conf, 60)
    assert gen_function(conf, 0) == pytest.approx(1)
    assert gen_function(conf, t) == pytest.approx(np.polynomial.polynomial.polyval(t, series), rel=1e-12)


def test_gen_function_errors():
    with pytest.raises(ConfigurationError):
        gen_function(EdgeConfig((1, 0, 0), 3), 0.1)
    with pytest.raises(SingularPointError):
        gen_function(EdgeConfig((0, 0, 0), 3), 1.0)


def test_g_poly_degree_and_constant_term():
    conf = EdgeConfig((1, 1, 1), 3)
    poly = g_poly(0, conf)
    assert len(poly.coef) == term_count(3, 3, 3) == 2
    assert poly.coef[0] == pytest.approx(1)
    with pytest.raises(ConfigurationError):
        g_poly(0, EdgeConfig((2, 2, 2), 3))


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.1, max_value=0.6), st.floats(min_value=-3.0, max_value=3.0),
       st.sampled_from(list(GeneratingKind)))
def test_closed_form_filter_matches_polynomial(radius, angle, kind):
    t = radius * np.exp(1j * angle)
    for conf in configs_with_charge(3, 3, 3):
        for Q in range(3):
            assert g_closed_form(Q, conf, t, kind) == pytest.approx(g_poly(Q, conf, kind)(t ** 3), abs=1e-10)


@pytest.mark.parametrize("t", [0.15, 0.4, 0.73, 1.9])
def test_bar_polynomial_is_the_conjugate_on_the_real_line(t):
    for conf in configs_with_charge(3, 3, 3):
        assert conjugation_residual(conf, t) < 1e-12


def test_polynomial_table_shape():
    configs, matrix = polynomial_table(3, 3, GeneratingKind.FORWARD)
    assert len(configs) == 7
    assert matrix.shape == (7, 2)


def test_gram_matrix_is_minus_identity(model):
    report = gram_check(model.dd)
    np.testing.assert_allclose(report["gram"], -np.eye(model.dd.r), atol=1e-8)
    assert report["max_residual"] < 1e-8


def test_h_polynomials_match_product_form(model):
    worst = h_identity_check(model.dd)
    assert worst["forward"] < 1e-8
    assert worst["bar"] < 1e-8
    dd = model.dd
    for k in range(dd.r):
        h = h_poly(k, dd)
        for j in range(dd.r):
            if j != k:
                assert abs(h(dd.roots[j])) < 1e-8
        assert h(0) == pytest.approx(-1 / (dd.beta.entries[k, 0] * dd.roots[k]), rel=1e-8)
        assert product_form(k, dd).leading == pytest.approx(1 / dd.beta.entries[k, 0])


def test_h_poly_rejects_bad_mode(model33):
    with pytest.raises(ConfigurationError):
        h_poly(model33.dd.r, model33.dd)


def test_leading_coefficient_limit(model):
    report = leading_coeff_check(model.dd)
    assert report["max_residual"] < 1e-8
    for row in report["modes"]:
        assert -row["direct_sum"] == pytest.approx(row["beta_inverse"], rel=1e-8)


@pytest.mark.parametrize("N,L", [(2, 2), (3, 3), (2, 4), (4, 4)])
def test_exponent_duality(N, L):
    assert exponent_duality_check(N, L) == 0
