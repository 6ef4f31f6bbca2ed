import json
import warnings

import pandas as pd
import pytest

from chiral_potts_curve import ModelConfig
from comprehensive_verification_system import (
    SUBCOMMAND_SUITES, ChiralPottsVerificationSystem, CheckRecord, CheckStatus,
    VerificationSuite, run,
)


@pytest.fixture(scope="module")
def report33():
    return run(ModelConfig(N=3, L=3, kprime=0.3, samples=2, seed=7))


def test_full_run_passes(report33):
    bad = [f"{r.suite.value}/{r.name}: {r.residual}" for r in report33.checks
           if r.status in (CheckStatus.FAILED, CheckStatus.ERROR)]
    assert bad == []
    assert report33.exit_code == 0
    assert {r.suite for r in report33.checks} == set(VerificationSuite)
    assert report33.drinfeld["lambdas"] == [1, 7, 1]


def test_report_layout(report33):
    data = json.loads(report33.to_json())
    assert set(data) == {"config", "drinfeld", "checks", "spectrum", "timing", "version", "seed"}
    assert data["seed"] == 7
    assert data["timing"] == {}
    assert data["config"]["N"] == 3
    assert len(data["spectrum"]) == 2 * 4
    first = data["checks"][0]
    assert set(first) >= {"suite", "name", "anchor", "residual", "tolerance", "status", "sample"}
    row = data["spectrum"][0]
    assert isinstance(row["eigenvalue"], list) and len(row["eigenvalue"]) == 2


def test_reports_are_reproducible(report33):
    again = run(ModelConfig(N=3, L=3, kprime=0.3, samples=2, seed=7))
    assert again.to_json() == report33.to_json()


def test_worker_count_does_not_change_the_report(report33):
    threaded = run(ModelConfig(N=3, L=3, kprime=0.3, samples=2, seed=7, workers=2))
    first, second = json.loads(report33.to_json()), json.loads(threaded.to_json())
    assert first == second


def test_seed_changes_the_samples(report33):
    other = run(ModelConfig(N=3, L=3, kprime=0.3, samples=2, seed=8),
                suites=SUBCOMMAND_SUITES["spectrum"])
    lambdas = {tuple(row["lambda_q"]) for row in json.loads(other.to_json())["spectrum"]}
    original = {tuple(row["lambda_q"]) for row in json.loads(report33.to_json())["spectrum"]}
    assert lambdas.isdisjoint(original)


def test_csv_output(report33, tmp_path):
    written = report33.write_csv(tmp_path / "report.csv")
    assert [p.name for p in written] == ["report.checks.csv", "report.spectrum.csv"]
    checks = pd.read_csv(written[0])
    assert list(checks.columns) == ["suite", "name", "sample", "residual", "tolerance", "status", "anchor"]
    assert len(checks) == len(report33.checks)
    spectrum = pd.read_csv(written[1])
    assert {"eigenvalue_re", "eigenvalue_im", "numeric_re", "residual"} <= set(spectrum.columns)


def test_charge_sectors_skip_matching():
    report = run(ModelConfig(N=3, L=3, Q=1, kprime=0.3, samples=1, seed=1))
    skipped = {r.suite for r in report.checks if r.status is CheckStatus.SKIPPED}
    assert {VerificationSuite.SPECTRUM, VerificationSuite.INTERTWINING} <= skipped
    vanishing = [r for r in report.records(VerificationSuite.ELEMENTS) if "vanishing" in r.name]
    assert vanishing and all(r.status is CheckStatus.PASSED for r in vanishing)
    assert report.spectrum == []
    assert report.exit_code == 0


def test_drinfeld_only_run_has_no_sector_work():
    report = run(ModelConfig(N=4, L=4, kprime=0.5, samples=1), suites=SUBCOMMAND_SUITES["drinfeld"])
    assert {r.suite for r in report.checks} <= {VerificationSuite.DRINFELD, VerificationSuite.GENERATING}
    warnings = [r.name for r in report.checks if r.status is CheckStatus.WARNING]
    assert "self_paired_roots" in warnings
    assert report.exit_code == 0


def test_timing_is_opt_in():
    report = run(ModelConfig(N=3, L=3, kprime=0.3, samples=1), suites=[VerificationSuite.DRINFELD],
                 timing=True)
    assert report.timing["total"] == 1
    assert "drinfeld" in report.timing["per_suite"]


def test_failed_record_sets_exit_code():
    report = run(ModelConfig(N=3, L=3, kprime=0.3, samples=1), suites=[VerificationSuite.DRINFELD])
    report.checks.append(CheckRecord("forced", "forced", VerificationSuite.DRINFELD, 1.0, 0.0, CheckStatus.FAILED))
    assert report.exit_code == 1


def test_plot_spectrum(tmp_path):
    system = ChiralPottsVerificationSystem(ModelConfig(N=3, L=3, kprime=0.3, samples=1), verbose=False)
    assert system.plot_spectrum(tmp_path / "none.png") is None
    system.run([VerificationSuite.SPECTRUM])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        path = system.plot_spectrum(tmp_path / "spectrum.png")
    assert path.exists() and path.stat().st_size > 0
    assert not [w for w in caught if "Glyph" in str(w.message)]
