import cmath
import dataclasses

import numpy as np
import pytest

from root_of_unity_numerics import SingularPointError
from drinfeld_polynomial import SpinPattern, analytic_eigenvalue
from rotation_operators import (
    E_MINUS, E_PLUS, H, IDENTITY, ModeScalars, all_modes, assemble_sector, epsilon,
    factor_check, mode_algebra_check, mode_gauge, mode_matrices, q_independence_check,
    rotation_identity_residuals, sector_normalization, sector_rep_checks, sign_flip_check,
    xyz, xyz_curve_forms,
)


def test_mode_scalars_factor():
    scalars = ModeScalars(2.0, 0.5, 1.5)
    np.testing.assert_allclose(scalars.factor(), [[1.5, 1.5], [1.5, 2.5]])
    assert scalars.plus == 2.5
    assert scalars.minus == 1.5
    assert scalars.determinant == pytest.approx(np.linalg.det(scalars.factor()))


def test_mode_algebra():
    for name, value in mode_algebra_check().items():
        assert value < 1e-15, name
    np.testing.assert_array_equal(E_PLUS + E_MINUS, [[0, 1], [1, 0]])
    np.testing.assert_array_equal(H @ H, IDENTITY)


def test_epsilon_squares(model):
    dd = model.dd
    for j, z in enumerate(dd.roots):
        eps_bar, eps = epsilon(j, dd)
        assert eps_bar ** 2 == pytest.approx(1 / (dd.kprime * (1 / z - 1) * dd.lambda_p))
        assert eps == pytest.approx(dd.rho * eps_bar)


def test_rotation_identities(model):
    for mode in all_modes(model.dd):
        report = rotation_identity_residuals(mode, model.dd)
        for name, value in report.items():
            assert value < 1e-9, f"mode {mode.j + 1}: {name}"
        assert np.linalg.det(mode.S) == pytest.approx(1, abs=1e-10)
        np.testing.assert_allclose(mode.R @ mode.S.T, IDENTITY, atol=1e-10)


def test_factor_identities(model):
    for mode in all_modes(model.dd):
        report = factor_check(mode, model.q, model.dd)
        report.update(xyz_curve_forms(mode.j, model.q, model.dd))
        for name, value in report.items():
            assert value < 1e-9, f"mode {mode.j + 1}: {name}"


def test_sector_representation(model):
    dd, q = model.dd, model.q
    rep = assemble_sector(q, dd)
    size = 2 ** dd.r
    assert rep.T_rep.shape == (size, size)
    report = sector_rep_checks(q, dd, rep)
    assert set(report) == {"diagonalization", "hat_xy_diagonalization", "hat_yx_diagonalization",
                           "product_spectrum", "det_S_rep", "normalization_square", "R_rep_gauge"}
    for name, value in report.items():
        assert value < 1e-8, name


def test_sector_normalization(model):
    dd = model.dd
    kappa = sector_normalization(dd)
    assert kappa ** 2 == pytest.approx((-dd.lambda_p) ** dd.r, rel=1e-10)
    eps = np.prod([epsilon(j, dd)[1] for j in range(dd.r)])
    assert kappa * eps * (-dd.k) ** dd.r == pytest.approx(dd.N ** (1 - dd.L / 2), rel=1e-10)


def test_gauge_places_mode_weights(model):
    dd, q = model.dd, model.q
    rep = assemble_sector(q, dd)
    forward = [xyz(j, q, dd) for j in range(dd.r)]
    last = 2 ** dd.r - 1
    kappa = rep.normalization
    assert rep.T_rep[last, last] == pytest.approx(kappa * np.prod([s.plus for s in forward]), rel=1e-10)
    # all-plus diagonal: ∏(−z_j) = 1 leaves κ_0∏(X_j − Y_j)
    assert rep.T_rep[0, 0] == pytest.approx(kappa * np.prod([s.minus for s in forward]), rel=1e-9)
    for j in range(dd.r):
        np.testing.assert_allclose(mode_gauge(j, dd), np.diag([-dd.roots[j], 1]))


def test_shifted_theta_branch_keeps_factors(model):
    dd, q = model.dd, model.q
    shifted = dataclasses.replace(dd, theta=dd.theta + 1j * cmath.pi)
    for j in range(dd.r):
        report = factor_check(mode_matrices(j, shifted), q, shifted)
        for name, value in report.items():
            assert value < 1e-9, f"mode {j + 1}: {name}"
    pattern = SpinPattern.all_minus(dd.r)
    flipped = analytic_eigenvalue(pattern, q.lam, shifted)
    assert flipped == pytest.approx((-1) ** dd.r * analytic_eigenvalue(pattern, q.lam, dd), rel=1e-10)


def test_rotations_do_not_depend_on_q(model):
    for mode in all_modes(model.dd):
        report = q_independence_check(mode, model.dd, model.q, model.q2)
        for name, value in report.items():
            assert value < 1e-8, f"mode {mode.j + 1}: {name}"


def test_either_sign_of_s22_works(model):
    for j in range(model.dd.r):
        assert sign_flip_check(j, model.dd, model.q) < 1e-9
        flipped = mode_matrices(j, model.dd, s22_sign=-1)
        original = mode_matrices(j, model.dd)
        np.testing.assert_allclose(flipped.S, -original.S, atol=1e-12)


def test_theta_combinations(model33):
    mode = all_modes(model33.dd)[0]
    e = cmath.exp(mode.theta)
    np.testing.assert_allclose(mode.T, mode.M / e + mode.Nmat * e)
    np.testing.assert_allclose(mode.T_star, mode.M * e + mode.Nmat / e)


def test_root_at_one_is_singular(model33):
    dd = dataclasses.replace(model33.dd, roots=np.array([1.0, 1.0]))
    with pytest.raises(SingularPointError):
        epsilon(0, dd)
