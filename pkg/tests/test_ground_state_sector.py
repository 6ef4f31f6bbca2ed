import numpy as np
import pandas as pd
import pytest

from root_of_unity_numerics import ConfigurationError, UnsupportedPatternError
from drinfeld_polynomial import SpinPattern, all_patterns, build_drinfeld
from chiral_potts_curve import point_from_lambda
from transfer_matrices import ArgumentOrder, build_That, build_T, enumerate_basis
from rotation_operators import assemble_sector
from ground_state_sector import (
    VectorRole, dual_element_checks, dump_eigenvectors_csv, eminus_dual_omega, eminus_omegabar,
    eplus_dual_omegabar, eplus_omega, frame_with_vectors, gram_check, gram_matrices,
    intertwine_full_check, omega_state, omegabar_state, psi_block, psi_explicit, psi_independence,
    psi_matrix, ratio_checks, sector_block_check, sector_element_checks, spectral_constant,
    spectrum_match, support_check, top_scale, top_scale_estimates, x1_power_check,
)


@pytest.fixture(scope="module")
def matrices33(model33):
    p, q, basis = model33.p, model33.q, model33.basis
    return {
        "T": build_T(0, p, q, basis),
        "That": build_That(0, p, q, basis, ArgumentOrder.YX),
        "That_xy": build_That(0, p, q, basis, ArgumentOrder.XY),
    }


def test_ground_states(model33):
    basis = model33.basis
    low, high = omega_state(basis), omegabar_state(basis)
    assert low.amplitudes[basis.omega_index] == 1
    assert high.amplitudes[basis.omegabar_index] == 1
    assert low.norm == high.norm == 1
    assert low.pattern == SpinPattern.all_minus(2)
    assert high.pattern == SpinPattern.all_plus(2)
    assert low.support_charges() == {0}
    assert high.support_charges() == {6}


def test_gram_matrices_are_identity(model):
    report = gram_check(model.dd, model.basis)
    assert report["omega"] < 1e-9
    assert report["omegabar"] < 1e-9
    grams = gram_matrices(model.dd, model.basis)
    assert grams["omega"].shape == (model.dd.r, model.dd.r)


def test_supports(model):
    assert all(support_check(model.dd, model.basis).values())


@pytest.mark.parametrize("getter", [eplus_omega, eminus_dual_omega, eplus_dual_omegabar, eminus_omegabar])
@pytest.mark.parametrize("m", [2, -1])
def test_mode_index_is_checked(model33, getter, m):
    with pytest.raises(ConfigurationError):
        getter(m, model33.dd, model33.basis)


@pytest.mark.parametrize("N,L", [(3, 3), (4, 4), (3, 6), (5, 5)])
def test_x1_power(N, L):
    assert x1_power_check(enumerate_basis(N, L)) < 1e-12


def test_top_scale_is_measured(model, matrices33, model33):
    T = matrices33["T"] if model is model33 else build_T(0, model.p, model.q, model.basis)
    estimates = top_scale_estimates(model.q, model.dd, T)
    assert estimates["analytic"] == top_scale(model.dd)
    assert estimates["from_lower"] == pytest.approx(estimates["analytic"], rel=1e-9)
    assert estimates["from_upper"] == pytest.approx(estimates["analytic"], rel=1e-9)


def test_psi_rules(model44):
    dd, basis = model44.dd, model44.basis
    assert psi_explicit(SpinPattern((-1, -1, -1)), dd, basis).amplitudes[basis.omega_index] == 1
    top = psi_explicit(SpinPattern((1, 1, 1)), dd, basis)
    assert top.amplitudes[basis.omegabar_index] == pytest.approx(top_scale(dd))
    single = psi_explicit(SpinPattern((-1, 1, -1)), dd, basis)
    np.testing.assert_allclose(single.amplitudes, eplus_omega(1, dd, basis).amplitudes)
    near_top = psi_explicit(SpinPattern((1, -1, 1)), dd, basis, scale=2.0)
    np.testing.assert_allclose(near_top.amplitudes, 2.0 * eminus_omegabar(1, dd, basis).amplitudes)
    assert near_top.role is VectorRole.PSI
    assert near_top.pattern == SpinPattern((1, -1, 1))
    with pytest.raises(ConfigurationError):
        psi_explicit(SpinPattern((1, -1)), dd, basis)


def test_middle_patterns_are_unsupported():
    dd = build_drinfeld(3, 6, 0.3)
    basis = enumerate_basis(3, 6)
    with pytest.raises(UnsupportedPatternError):
        psi_explicit(SpinPattern((1, 1, -1, -1)), dd, basis)
    assert psi_explicit(SpinPattern((1, -1, -1, -1)), dd, basis).support_charges() <= {3}


def test_psi_columns_are_independent(model):
    assert psi_independence(model.dd, model.basis) > 1e-8


def test_ratios(model33, matrices33):
    report = ratio_checks(model33.q, model33.dd, model33.basis, model33.p, **matrices33)
    assert len(report) == 12
    for name, value in report.items():
        assert value < 1e-8, name


def test_ratios_four_four(model44):
    report = ratio_checks(model44.q, model44.dd, model44.basis, model44.p)
    assert max(report.values()) < 1e-8


def test_dual_elements(model, model33, matrices33):
    T = matrices33["T"] if model is model33 else None
    report = dual_element_checks(model.q, model.dd, model.basis, model.p, T=T)
    assert report["lowering_dual_omega"] < 1e-8
    assert report["raising_dual_omegabar"] < 1e-8


def test_spectral_constant_is_one(model):
    for q in (model.q, model.q2):
        c = spectral_constant(q, model.dd, model.p)
        assert c == pytest.approx(1, rel=1e-10)


def test_spectrum_match(model):
    frames = [spectrum_match(q, model.dd, model.basis, model.p) for q in (model.q, model.q2)]
    for q, frame in zip((model.q, model.q2), frames):
        assert frame.scale == spectral_constant(q, model.dd, model.p)
        assert len(frame.entries) == 2 ** model.dd.r
        assert frame.max_residual < 1e-6
        assert not frame.degenerate
        assert frame.collisions == []
        assert len(set(frame.assignment().values())) == 2 ** model.dd.r


def test_sector_elements(model):
    for q in (model.q, model.q2):
        report = sector_element_checks(q, model.dd, model.basis, model.p)
        for name, value in report.items():
            assert value < 1e-8, name


@pytest.mark.slow
def test_sector_elements_beyond_explicit_psi():
    dd = build_drinfeld(3, 6, 0.3)
    basis = enumerate_basis(3, 6)
    q = point_from_lambda(0.3, 1.3 + 0.4j, 3)
    report = sector_element_checks(q, dd, basis, dd.p)
    for name, value in report.items():
        assert value < 1e-7, name


def test_psi_block_recovers_assembled_matrices(model):
    dd, basis, p = model.dd, model.basis, model.p
    for q in (model.q, model.q2):
        report = sector_block_check(q, dd, basis, p)
        for name in ("T", "That_xy", "That_yx"):
            assert report[f"block_{name}"] < 1e-7, name
            assert report[f"closure_{name}"] < 1e-9, name


def test_psi_block_entries(model33, matrices33):
    q, dd, basis = model33.q, model33.dd, model33.basis
    rep = assemble_sector(q, dd)
    block, closure = psi_block(matrices33["T"].matrix, psi_matrix(dd, basis))
    np.testing.assert_allclose(block, rep.T_rep, rtol=1e-7, atol=1e-9 * np.abs(rep.T_rep).max())
    assert closure < 1e-9
    last = 2 ** dd.r - 1
    assert block[last, last] == pytest.approx(matrices33["T"].matrix[basis.omega_index, basis.omega_index])


def test_intertwining(model):
    report = intertwine_full_check(model.q, model.dd, model.basis, model.p)
    assert set(report["residuals"]) == {"T", "That_xy", "That_yx"}
    for name in ("T", "That_xy", "That_yx"):
        assert report["residuals"][name] < 1e-7, name
        assert report["spread"][name] < 1e-6, name
        assert abs(report["constants"][name] - 1) < 1e-9, name
    assert report["X"].shape == (model.basis.dimension, 2 ** model.dd.r)
    assert set(report["patterns"]) == {p.index for p in all_patterns(model.dd.r)}


def test_intertwining_sign_per_pattern(model):
    # 𝒯X_i = 𝒢_iY_i column by column: a wrong sign of 𝒢_i shows up as a constant of −1
    for q in (model.q, model.q2):
        report = intertwine_full_check(q, model.dd, model.basis, model.p)
        for index, constants in report["pattern_constants"].items():
            for name, value in constants.items():
                assert value == pytest.approx(1, abs=1e-8), f"pattern {index}: {name}"
        for index, residuals in report["patterns"].items():
            assert max(residuals.values()) < 1e-7, f"pattern {index}"


def test_intertwining_needs_explicit_psi():
    dd = build_drinfeld(3, 6, 0.3)
    with pytest.raises(UnsupportedPatternError):
        intertwine_full_check(None, dd, None, dd.p)


def test_eigenvector_dump(model33, matrices33, tmp_path):
    q, dd, basis, p = model33.q, model33.dd, model33.basis, model33.p
    frame = spectrum_match(q, dd, basis, p, T=matrices33["T"], That_xy=matrices33["That_xy"])
    report = intertwine_full_check(q, dd, basis, p, **matrices33)
    frame = frame_with_vectors(frame, report, basis)
    entry = frame.entries[3]
    assert entry.x_vector.role is VectorRole.X
    assert set(entry.residuals) == {"T", "That_xy", "That_yx"}

    path = dump_eigenvectors_csv(frame, basis, tmp_path / "vectors.csv")
    lines = path.read_text(encoding="utf-8").splitlines()
    headers = [line for line in lines if line.startswith("#")]
    assert len(headers) == 4
    assert headers[0].startswith("# pattern=++ index=0 eigenvalue=")
    block = pd.read_csv(tmp_path / "vectors.csv", comment="#", dtype={"config": str})
    assert block["config"].iloc[0] == "000"


def test_sector_block_needs_explicit_psi():
    dd = build_drinfeld(3, 6, 0.3)
    with pytest.raises(UnsupportedPatternError):
        sector_block_check(None, dd, None, dd.p)
