import json

import numpy as np
import pandas as pd
import pytest

from root_of_unity_numerics import ConfigurationError
from chiral_potts_curve import conjugate_point, point_from_lambda
from drinfeld_polynomial import build_drinfeld
from generating_functions import EdgeConfig
from transfer_matrices import (
    ArgumentOrder, TransferVariant, build_That, build_T, closed_form_checks,
    commuting_family_residual, contracted_element, dump_matrix_csv, enumerate_basis,
    physical_matrix, shift_operator, translation_residual, weight_W, weight_Wbar,
)


@pytest.mark.parametrize("N,L", [(2, 2), (3, 3), (4, 4), (3, 6)])
def test_basis_dimension_and_order(N, L):
    basis = enumerate_basis(N, L)
    assert basis.dimension == N ** (L - 1)
    assert np.all(basis.charges % N == 0)
    rows = [tuple(row) for row in basis.edges]
    assert rows == sorted(rows)
    assert basis.omega_index == 0
    assert basis.omegabar_index == basis.dimension - 1


def test_basis_errors():
    with pytest.raises(ConfigurationError):
        enumerate_basis(3, 4)
    with pytest.raises(ConfigurationError):
        enumerate_basis(3, 6, size_cap=100)
    basis = enumerate_basis(3, 3)
    with pytest.raises(ConfigurationError):
        basis.position((1, 0, 0))
    assert basis.position(EdgeConfig((1, 1, 1), 3)) == basis.position((1, 1, 1))


def test_weights_at_zero_and_periodicity(model33):
    p, q = model33.p, model33.q
    assert weight_W(p, q, 0) == 1
    assert weight_Wbar(p, q, 0) == 1
    assert weight_W(p, q, 3) == pytest.approx(1, rel=1e-11)
    assert weight_Wbar(p, q, 3) == pytest.approx(1, rel=1e-11)


def test_q_sector_is_validated(model33):
    with pytest.raises(ConfigurationError):
        build_T(3, model33.p, model33.q, model33.basis)
    other = point_from_lambda(0.3, 1.3 + 0.4j, 4)
    with pytest.raises(ConfigurationError):
        build_T(0, model33.p, other, model33.basis)


def test_closed_forms(model):
    report = closed_form_checks(model.q, model.p, model.basis, model.dd)
    for name, value in report.items():
        assert value < 1e-9, name
    assert "omegabar_omega_vanishing" not in report


@pytest.mark.parametrize("Q", [1, 2])
def test_charge_sectors_decouple_ground_states(model33, Q):
    report = closed_form_checks(model33.q, model33.p, model33.basis, model33.dd, Q=Q)
    assert set(report) == {"omega_column", "omegabar_column",
                           "omegabar_omega_vanishing", "omega_omegabar_vanishing"}
    assert report["omegabar_omega_vanishing"] < 1e-12
    assert report["omega_omegabar_vanishing"] < 1e-12
    assert report["omega_column"] < 1e-9
    assert report["omegabar_column"] < 1e-9


@pytest.mark.slow
def test_three_six_charge_one():
    dd = build_drinfeld(3, 6, 0.3)
    basis = enumerate_basis(3, 6)
    q = point_from_lambda(0.3, 1.3 + 0.4j, 3)
    report = closed_form_checks(q, dd.p, basis, dd, Q=1)
    assert report["omegabar_omega_vanishing"] < 1e-12
    assert report["omega_omegabar_vanishing"] < 1e-12


@pytest.mark.parametrize("Q", [0, 1])
def test_translation_invariance(model33, Q):
    T = build_T(Q, model33.p, model33.q, model33.basis)
    That = build_That(Q, model33.p, model33.q, model33.basis)
    assert translation_residual(T) < 1e-12
    assert translation_residual(That) < 1e-12


def test_shift_operator_has_order_L(model44):
    U = shift_operator(model44.basis)
    power = np.linalg.matrix_power(U, model44.L)
    np.testing.assert_allclose(power, np.eye(model44.basis.dimension), atol=1e-12)


def test_commuting_family(model):
    residual = commuting_family_residual(model.p, model.q, model.q2, model.basis)
    assert residual < 1e-8


def test_xy_order_is_the_conjugate_point(model33):
    p, q, basis = model33.p, model33.q, model33.basis
    xy = build_That(0, p, q, basis, ArgumentOrder.XY)
    yx = build_That(0, p, conjugate_point(q), basis, ArgumentOrder.YX)
    np.testing.assert_allclose(xy.matrix, yx.matrix, rtol=1e-12, atol=1e-14)
    assert xy.variant is TransferVariant.T_HAT
    assert xy.order is ArgumentOrder.XY


def test_element_and_contraction(model33):
    T = build_T(0, model33.p, model33.q, model33.basis)
    D = model33.basis.dimension
    lo = np.zeros(D)
    lo[model33.basis.omega_index] = 1
    assert contracted_element(lo, T, lo) == pytest.approx(T.element((0, 0, 0), (0, 0, 0)))
    with pytest.raises(ConfigurationError):
        contracted_element(np.ones(D + 1), T, lo)
    scaled = physical_matrix(T)
    ratio = scaled[0, 0] / T.matrix[0, 0]
    np.testing.assert_allclose(scaled, ratio * T.matrix, rtol=1e-12)


def test_dump_matrix_csv(model33, tmp_path):
    T = build_T(0, model33.p, model33.q, model33.basis)
    path = tmp_path / "T.csv"
    header_path = dump_matrix_csv(T, path, kprime=0.3 + 0j)
    frame = pd.read_csv(path)
    assert list(frame.columns) == ["row", "col", "re", "im"]
    assert len(frame) == 81
    rebuilt = np.zeros((9, 9), dtype=complex)
    rebuilt[frame["row"].to_numpy(), frame["col"].to_numpy()] = frame["re"].to_numpy() + 1j * frame["im"].to_numpy()
    np.testing.assert_allclose(rebuilt, T.matrix, rtol=1e-13)
    header = json.loads(header_path.read_text(encoding="utf-8"))
    assert header["N"] == 3 and header["L"] == 3 and header["Q"] == 0
    assert header["kprime"] == [0.3, 0.0]
    assert header["ordering"][0] == "000"
    assert header["variant"] == "T"
