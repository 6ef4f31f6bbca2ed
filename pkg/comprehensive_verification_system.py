#!/usr/bin/env python3
"""
نظام التحقق الشامل - Comprehensive Verification System
أدوات التحقق من نموذج بوتس الشيرالي

🧪 تشغيل مجموعات التحقق على عينات q مبذورة
✅ سجل لكل فحص: المتبقي، التسامح، الحالة
📊 تقارير JSON حتمية وجداول CSV ورسم اختياري للطيف
"""

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from root_of_unity_numerics import ChiralPottsError, binomial_reflection_residual
from chiral_potts_curve import CurvePoint, ModelConfig, sample_q_points, weight_periodicity_check
from generating_functions import (
    GeneratingKind, configs_with_charge, conjugation_residual, exponent_duality_check,
    g_closed_form, g_poly, gram_check as polynomial_gram_check, h_identity_check, leading_coeff_check,
)
from drinfeld_polynomial import (
    DrinfeldData, ab_determinant_residual, build_drinfeld, functional_check, generating_route_check,
    newton_check, power_sum_ladder_check, root_structure_check, s_coefficient_check, theta_check,
)
from transfer_matrices import (
    ArgumentOrder, SectorBasis, build_T, build_That, closed_form_checks,
    commuting_family_residual, enumerate_basis, translation_residual,
)
from ground_state_sector import (
    dual_element_checks, gram_check as sector_gram_check, intertwine_full_check, psi_independence,
    ratio_checks, sector_block_check, sector_element_checks, spectrum_match, support_check,
    top_scale_estimates, x1_power_check,
)
from rotation_operators import (
    all_modes, assemble_sector, factor_check, mode_algebra_check, q_independence_check,
    rotation_identity_residuals, sector_rep_checks, sign_flip_check, xyz_curve_forms,
)
from performance_analyzer import SuitePerformanceAnalyzer

REPORT_VERSION = "1.0.0"
SIGNIFICANT_DIGITS = 12
VANISHING_TOLERANCE = 1e-12
# largest r for which every Ψ pattern has an explicit form
EXPLICIT_PSI_MAX_R = 3


class CheckStatus(Enum):
    """حالات الفحص"""
    PASSED = "passed"
    FAILED = "failed"
    WARNING = "warning"
    SKIPPED = "skipped"
    ERROR = "error"


class VerificationSuite(Enum):
    """مجموعات التحقق"""
    DRINFELD = "drinfeld"
    GENERATING = "generating"
    ELEMENTS = "elements"
    SPECTRUM = "spectrum"
    ROTATIONS = "rotations"
    INTERTWINING = "intertwining"


SUBCOMMAND_SUITES: Dict[str, Tuple[VerificationSuite, ...]] = {
    "drinfeld": (VerificationSuite.DRINFELD, VerificationSuite.GENERATING),
    "elements": (VerificationSuite.ELEMENTS,),
    "spectrum": (VerificationSuite.SPECTRUM,),
    "rotations": (VerificationSuite.ROTATIONS,),
    "verify": tuple(VerificationSuite),
}

STATUS_MARKS = {
    CheckStatus.PASSED: "✅",
    CheckStatus.FAILED: "❌",
    CheckStatus.WARNING: "⚠️",
    CheckStatus.SKIPPED: "⏭️",
    CheckStatus.ERROR: "💥",
}

ANCHORS: Dict[str, str] = {
    "lambda_symmetry": "Λ_n = Λ_{r−n}",
    "lambda_ends": "Λ_0 = Λ_r = 1",
    "root_product": "∏(−z_ℓ) = 1",
    "pairing": "z_m z_{m*} = 1",
    "newton": "nΛ_n = Σ d_j Λ_{n−j}",
    "series_inverse": "Σ S_n z^n = 1/P(z)",
    "negative_range": "S_n = 0 for 1−r < n < 0",
    "S0": "S_0 = 1",
    "power_sum_ladder": "Σ_n β_{m*,n} d_{n+k} = −z_m^{−k}",
    "theta_cosh": "2cosh2θ_j = k′ + 1/k′ − k²t_p^N z_j/k′",
    "theta_rho": "ρ² = N^{1/r} k′/k²",
    "theta_branch": "Re θ_j ≥ 0",
    "generating_route": "P(z) = G_0(0…0, z) = Ḡ_0(0…0, z)",
    "beta_lagrange": "Σ_n β_{j,n} z_k^n = δ_{jk}",
    "beta_vandermonde": "Σ_k z_k^n β_{k,m} = δ_{nm}",
    "self_paired_roots": "z_{m*} ≠ z_m",
    "functional_relation": "𝒢(λ)𝒢(1/λ) = t_p^{rN} N ∏((t_q/t_p)^N − z_j)",
    "functional_pattern_spread": "𝒢(λ)𝒢(1/λ) independent of ξ",
    "functional_theta_upper": "𝒢(λ)𝒢(1/λ) = N(k′/k²)^r ∏ e^{−2θ}(e^{2θ} − λ^{−1})(e^{2θ} − λ)",
    "functional_theta_lower": "𝒢(λ)𝒢(1/λ) = N(k′/k²)^r ∏ e^{2θ}(e^{−2θ} − λ^{−1})(e^{−2θ} − λ)",
    "ab_determinant": "A_j² − B_j² = ρ²k²(t_p^N z_j − t_q^N)/(k′λ_q)",
    "polynomial_gram": "β_{m,0}β_{k,0}z_k Σ Ḡ(z_m)G(z_k) = −δ_{mk}",
    "leading_coefficient": "lim z^{1−r} h̄_k(z) = β_{k,0}^{−1}",
    "h_forward": "h_k(z) = β_{k,0}^{−1} ∏_{ℓ≠k}(z − z_ℓ)",
    "h_bar": "h̄_k(z) = β_{k,0}^{−1} ∏_{ℓ≠k}(z − z_ℓ)",
    "exponent_duality": "Σ n′_j N_j = Σ n_j N̄′_j",
    "binomial_reflection": "[N−1−n, ν] = (−1)^ν ω^{−nν−ν(ν+1)/2}[ν+n, ν]",
    "conjugation": "Ḡ(t^N) = conj G(t^N) for real t",
    "filter_identity": "G_Q(t^N) = t^{−Q}N^{−1} Σ_a ω^{−Qa} g(tω^a)",
    "curve": "q lies on the chiral Potts curve",
    "weight_periodicity": "W(n + N) = W(n)",
    "translation_T": "[𝒯_Q, U] = 0",
    "translation_That": "[𝒯̂_Q, U] = 0",
    "commuting_family": "[𝒯̂𝒯(q_1), 𝒯̂𝒯(q_2)] = 0",
    "scale_constant": "c = 1 from the all-minus closed forms of 𝒯̂ and 𝒯",
    "degenerate_q": "analytic 𝒢² pairwise distinct",
    "match_collisions": "distinct numeric eigenvalue per pattern",
    "spectrum_inclusion": "c𝒢(λ_q, ξ)² ∈ spectrum(𝒯̂_0(x_q, y_q)𝒯_0)",
    "gram_omega": "⟨Ω|E_m⁻ E_k⁺|Ω⟩ = δ_{mk}",
    "gram_omegabar": "⟨Ω̄|E_m⁺ E_k⁻|Ω̄⟩ = δ_{mk}",
    "x1_power": "ω^{−(N−1)L(L+1)/2} = ω^{L(L+1)/2}",
    "psi_independence": "σ_min(Ψ) > 0",
    "top_scale_agreement": "Ω̄ scale from ⟨Ω̄|𝒯|Ω⟩ = from ⟨Ω|𝒯|Ω̄⟩",
    "top_scale_value": "∏E_j⁺|Ω⟩ = ω^{−L(L+1)/2}(−1)^r|Ω̄⟩",
    "lowering_dual_omega": "⟨Ω|E_m⁻𝒯_0|Ω⟩ = −y_p^{rN}(1 − x_q^N/y_p^N)N^{1−L/2}∏_{ℓ≠m}(x_q^N/y_p^N − z_ℓ)",
    "raising_dual_omegabar": "⟨Ω̄|E_m⁺𝒯_0|Ω̄⟩ = −z_m(μ_p x_p/μ_q)^{rN}(1 − y_q^N/x_p^N)N^{1−L/2}∏_{ℓ≠m}(y_q^N/x_p^N − z_ℓ)",
    "mode_algebra": "sl2 relations of H, E⁺, E⁻",
    "sign_flip": "identities invariant under s_22 → −s_22",
    "q_independence": "S_j, R_j independent of q",
    "sector_rep": "𝒯_rep = 𝒮Λℛ^{−1}, 𝒯̂_rep = ℛΛ𝒮^{−1}, κ_0² = (−λ_p)^r",
    "sector_element": "⟨Ω|𝒯|Ω⟩ = κ_0∏(X_j + Y_j), ⟨Ω|E_m⁻𝒯|Ω⟩ = κ_0Z_m∏_{j≠m}(X_j + Y_j)",
    "sector_block": "Ψ⁺𝒯_0Ψ = 𝒯_rep",
    "intertwine_constant": "𝒯X = κ𝒢Y with κ = 1",
    "intertwine_spread": "one κ for every pattern",
    "intertwine_residual": "‖𝒯X_i − κ𝒢_iY_i‖ ≤ tol‖𝒯‖‖X_i‖",
}


def _anchor(name: str) -> str:
    base = name.split(":")[0]
    return ANCHORS.get(base, base.replace("_", " "))


@dataclass
class CheckRecord:
    """سجل فحص"""
    name: str
    anchor: str
    suite: VerificationSuite
    residual: Optional[float]
    tolerance: Optional[float]
    status: CheckStatus
    sample: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def sort_key(self) -> Tuple[str, str, int]:
        return (self.suite.value, self.name, -1 if self.sample is None else self.sample)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "suite": self.suite.value,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "status": self.status.value,
            "sample": self.sample,
            "details": self.details,
        }


@dataclass
class RunReport:
    """تقرير التشغيل"""
    config: ModelConfig
    drinfeld: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckRecord] = field(default_factory=list)
    spectrum: List[Dict[str, Any]] = field(default_factory=list)
    timing: Dict[str, Any] = field(default_factory=dict)
    version: str = REPORT_VERSION

    @property
    def seed(self) -> int:
        return self.config.seed

    def count(self, status: CheckStatus) -> int:
        return sum(1 for record in self.checks if record.status is status)

    @property
    def exit_code(self) -> int:
        """0 when nothing failed or errored, 1 otherwise."""
        return 1 if self.count(CheckStatus.FAILED) or self.count(CheckStatus.ERROR) else 0

    def records(self, suite: Optional[VerificationSuite] = None) -> List[CheckRecord]:
        return [record for record in self.checks if suite is None or record.suite is suite]

    def to_dict(self) -> Dict[str, Any]:
        return _jsonable({
            "config": self.config.as_dict(),
            "drinfeld": self.drinfeld,
            "checks": [record.to_dict() for record in sorted(self.checks, key=CheckRecord.sort_key)],
            "spectrum": sorted(self.spectrum, key=lambda row: (row["sample"], row["pattern_index"])),
            "timing": self.timing,
            "version": self.version,
            "seed": self.seed,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2, sort_keys=True)

    def write_json(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.write_text(self.to_json() + "\n", encoding="utf-8")
        return path

    def checks_frame(self) -> pd.DataFrame:
        rows = []
        for record in sorted(self.checks, key=CheckRecord.sort_key):
            row = record.to_dict()
            row.pop("details")
            rows.append(row)
        return pd.DataFrame(rows, columns=["suite", "name", "sample", "residual", "tolerance", "status", "anchor"])

    def spectrum_frame(self) -> pd.DataFrame:
        rows = []
        for row in sorted(self.spectrum, key=lambda r: (r["sample"], r["pattern_index"])):
            flat = {}
            for key, value in row.items():
                if isinstance(value, complex):
                    flat[f"{key}_re"], flat[f"{key}_im"] = value.real, value.imag
                else:
                    flat[key] = value
            rows.append(flat)
        return pd.DataFrame(rows)

    def write_csv(self, path: Union[str, Path]) -> List[Path]:
        """`<stem>.checks.csv` and, when present, `<stem>.spectrum.csv`."""
        path = Path(path)
        stem = path.with_suffix("")
        written = [stem.with_name(stem.name + ".checks.csv")]
        self.checks_frame().to_csv(written[0], index=False, float_format="%.12g")
        if self.spectrum:
            written.append(stem.with_name(stem.name + ".spectrum.csv"))
            self.spectrum_frame().to_csv(written[1], index=False, float_format="%.12g")
        return written

    def summary_lines(self) -> List[str]:
        lines = [f"📊 {len(self.checks)} فحص: "
                 + ", ".join(f"{STATUS_MARKS[s]} {self.count(s)}" for s in CheckStatus)]
        for record in sorted(self.checks, key=CheckRecord.sort_key):
            if record.status in (CheckStatus.FAILED, CheckStatus.ERROR, CheckStatus.WARNING):
                where = "" if record.sample is None else f" [q{record.sample}]"
                residual = "-" if record.residual is None else f"{record.residual:.2e}"
                lines.append(f"   {STATUS_MARKS[record.status]} {record.suite.value}/{record.name}{where}: {residual}")
        return lines


def _round_significant(value: float) -> Union[float, str]:
    if math.isnan(value) or math.isinf(value):
        return str(value)
    if value == 0:
        return 0.0
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}")


def _jsonable(value: Any) -> Any:
    """Complex → [re, im]; floats rounded to 12 significant digits; enums by value."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return _round_significant(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        value = complex(value)
        return [_round_significant(value.real), _round_significant(value.imag)]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class RunContext:
    """Shared, read-only inputs of one run plus per-sample matrix caches."""
    config: ModelConfig
    dd: DrinfeldData
    p: CurvePoint
    points: List[CurvePoint]
    basis: Optional[SectorBasis] = None
    matrices: Dict[Tuple[int, str], Any] = field(default_factory=dict)
    frames: Dict[int, Any] = field(default_factory=dict)

    def matrix(self, sample: int, name: str):
        key = (sample, name)
        if key not in self.matrices:
            q, Q = self.points[sample], self.config.Q
            if name == "T":
                value = build_T(Q, self.p, q, self.basis)
            elif name == "That":
                value = build_That(Q, self.p, q, self.basis, ArgumentOrder.YX)
            else:
                value = build_That(Q, self.p, q, self.basis, ArgumentOrder.XY)
            self.matrices[key] = value
        return self.matrices[key]


class ChiralPottsVerificationSystem:
    """
    نظام التحقق الشامل

    🧪 Runs the selected suites over seeded q samples:
    - drinfeld / generating: per-configuration algebra
    - elements: closed-form matrix elements and ratios
    - spectrum: eigenvalue inclusion and ground-state vectors
    - rotations: per-mode 2×2 identities
    - intertwining: 𝒯X = 𝒢Y for r ≤ 3
    """

    def __init__(self, config: ModelConfig, verbose: bool = True, timing: bool = False):
        self.config = config
        self.verbose = verbose
        self.timing = timing
        self.analyzer = SuitePerformanceAnalyzer(verbose=verbose) if timing else None

    def _say(self, message: str):
        if self.verbose:
            print(message)

    # ---------- records ----------

    def _record(self, suite: VerificationSuite, name: str, residual: float, tolerance: float,
                sample: Optional[int] = None, warn_only: bool = False,
                details: Optional[Dict[str, Any]] = None) -> CheckRecord:
        residual = float(residual)
        if not math.isnan(residual) and residual <= tolerance:
            status = CheckStatus.PASSED
        else:
            status = CheckStatus.WARNING if warn_only else CheckStatus.FAILED
        return CheckRecord(name, _anchor(name), suite, residual, tolerance, status, sample, details or {})

    def _records(self, suite: VerificationSuite, prefix: str, values: Dict[str, float], tolerance: float,
                 sample: Optional[int] = None) -> List[CheckRecord]:
        return [self._record(suite, f"{prefix}:{key}", value, tolerance, sample)
                for key, value in values.items()]

    def _skipped(self, suite: VerificationSuite, name: str, reason: str) -> CheckRecord:
        return CheckRecord(name, _anchor(name), suite, None, None, CheckStatus.SKIPPED, details={"reason": reason})

    def _error(self, suite: VerificationSuite, error: Exception, sample: Optional[int]) -> CheckRecord:
        name = f"{suite.value}_error"
        return CheckRecord(name, type(error).__name__, suite, None, None, CheckStatus.ERROR, sample,
                           {"error": str(error), "type": type(error).__name__})

    def _guarded(self, suite: VerificationSuite, job: Callable[[], List[CheckRecord]],
                 sample: Optional[int] = None) -> List[CheckRecord]:
        try:
            return job()
        except (ChiralPottsError, np.linalg.LinAlgError) as e:
            return [self._error(suite, e, sample)]

    def _per_sample(self, suite: VerificationSuite, context: RunContext,
                    job: Callable[[int, CurvePoint], List[CheckRecord]]) -> List[CheckRecord]:
        def run_one(sample: int) -> List[CheckRecord]:
            return self._guarded(suite, lambda: job(sample, context.points[sample]), sample)

        samples = range(len(context.points))
        if self.config.workers > 1:
            with ThreadPoolExecutor(max_workers=self.config.workers) as executor:
                batches = list(executor.map(run_one, samples))
        else:
            batches = [run_one(sample) for sample in samples]
        return [record for batch in batches for record in batch]

    # ---------- suites ----------

    def _suite_drinfeld(self, context: RunContext) -> List[CheckRecord]:
        suite, dd, config = VerificationSuite.DRINFELD, context.dd, self.config
        tight = 100 * config.tol_root
        records: List[CheckRecord] = []
        for key, value in root_structure_check(dd).items():
            records.append(self._record(suite, key, value, tight))
        records.append(self._record(suite, "newton", newton_check(dd)["relative"], tight))
        for key, value in s_coefficient_check(dd).items():
            records.append(self._record(suite, key, value, config.tol_linalg))
        records.append(self._record(suite, "power_sum_ladder", power_sum_ladder_check(dd), config.tol_linalg))
        for key, value in theta_check(dd).items():
            records.append(self._record(suite, f"theta_{key}", value, config.tol_linalg))
        records.append(self._record(suite, "generating_route", generating_route_check(config.N, config.L),
                                    config.tol_linalg * max(dd.lambdas)))
        beta = dd.beta.residuals()
        records.append(self._record(suite, "beta_lagrange", beta["f_j(z_k)"], config.tol_linalg))
        records.append(self._record(suite, "beta_vandermonde", beta["sum_k"], config.tol_linalg))
        records.append(self._record(suite, "self_paired_roots", float(len(dd.self_paired)), 0.0, warn_only=True,
                                    details={"modes": [m + 1 for m in dd.self_paired]}))

        def sample_job(sample: int, q: CurvePoint) -> List[CheckRecord]:
            found = functional_check(q.lam, dd, context.p, q)
            loose = 10 * config.tol_linalg
            out = [
                self._record(suite, "functional_relation", found["relation"], loose, sample),
                self._record(suite, "functional_pattern_spread", found["pattern_spread"], 1e3 * VANISHING_TOLERANCE, sample),
                self._record(suite, "functional_theta_upper", found["theta_form_upper"], loose, sample),
                self._record(suite, "functional_theta_lower", found["theta_form_lower"], loose, sample),
            ]
            worst = max(ab_determinant_residual(j, q, dd) for j in range(dd.r))
            out.append(self._record(suite, "ab_determinant", worst, loose, sample))
            return out

        return records + self._per_sample(suite, context, sample_job)

    def _suite_generating(self, context: RunContext) -> List[CheckRecord]:
        suite, dd, config = VerificationSuite.GENERATING, context.dd, self.config
        loose = 10 * config.tol_linalg
        records = [
            self._record(suite, "polynomial_gram", polynomial_gram_check(dd)["max_residual"], loose),
            self._record(suite, "leading_coefficient", leading_coeff_check(dd)["max_residual"], loose),
            self._record(suite, "exponent_duality", exponent_duality_check(config.N, config.L), 0.5),
            self._record(suite, "binomial_reflection", binomial_reflection_residual(config.N), config.tol_linalg),
        ]
        for kind, value in h_identity_check(dd).items():
            records.append(self._record(suite, f"h_{kind}", value, loose))

        configs = configs_with_charge(config.N, config.L, config.N)
        conjugation = max(conjugation_residual(conf, 0.7) for conf in configs)
        records.append(self._record(suite, "conjugation", conjugation, config.tol_linalg))
        t = 0.37 + 0.21j
        worst = 0.0
        for Q in range(config.N):
            for conf in configs:
                direct = g_poly(Q, conf, GeneratingKind.FORWARD)(t ** config.N)
                filtered = g_closed_form(Q, conf, t, GeneratingKind.FORWARD)
                worst = max(worst, abs(direct - filtered) / max(abs(direct), 1.0))
        records.append(self._record(suite, "filter_identity", worst, config.tol_linalg))
        return records

    def _suite_elements(self, context: RunContext) -> List[CheckRecord]:
        suite, dd, config, p = VerificationSuite.ELEMENTS, context.dd, self.config, context.p
        basis = context.basis

        def sample_job(sample: int, q: CurvePoint) -> List[CheckRecord]:
            T = context.matrix(sample, "T")
            out = [self._record(suite, "curve", q.max_curve_residual(config.kprime), config.tol_linalg, sample)]
            out += self._records(suite, "weight_periodicity", weight_periodicity_check(p, q, config.N),
                                 config.tol_linalg, sample)
            That = context.matrix(sample, "That")
            for name, value in closed_form_checks(q, p, basis, dd, config.Q, T=T,
                                                  That=That if config.Q == 0 else None).items():
                tolerance = VANISHING_TOLERANCE if name.endswith("vanishing") else config.tol_linalg
                out.append(self._record(suite, f"closed_form:{name}", value, tolerance, sample))
            out.append(self._record(suite, "translation_T", translation_residual(T), config.tol_linalg, sample))
            out.append(self._record(suite, "translation_That", translation_residual(That), config.tol_linalg, sample))
            if config.Q != 0:
                return out
            ratios = ratio_checks(q, dd, basis, p, T=T, That=That, That_xy=context.matrix(sample, "That_xy"))
            out += self._records(suite, "ratio", ratios, 10 * config.tol_linalg, sample)
            out += self._records(suite, "dual_element", dual_element_checks(q, dd, basis, p, T=T),
                                 config.tol_linalg, sample)
            return out

        records = self._per_sample(suite, context, sample_job)
        if len(context.points) > 1:
            records += self._guarded(suite, lambda: [self._record(
                suite, "commuting_family",
                commuting_family_residual(p, context.points[0], context.points[1], basis, config.Q),
                config.tol_linalg)])
        return records

    def _suite_spectrum(self, context: RunContext) -> List[CheckRecord]:
        suite, dd, config, p = VerificationSuite.SPECTRUM, context.dd, self.config, context.p
        basis = context.basis
        if config.Q != 0:
            return [self._skipped(suite, "spectrum_inclusion", "Q ≠ 0 sectors are not matched")]

        loose = 10 * config.tol_linalg
        records: List[CheckRecord] = []
        for name, value in sector_gram_check(dd, basis).items():
            records.append(self._record(suite, f"gram_{name}", value, loose))
        for name, ok in support_check(dd, basis).items():
            records.append(self._record(suite, f"support:{name}", 0.0 if ok else 1.0, 0.5))
        records.append(self._record(suite, "x1_power", x1_power_check(basis), config.tol_linalg))
        if dd.r <= EXPLICIT_PSI_MAX_R:
            sigma = psi_independence(dd, basis)
            records.append(CheckRecord(
                "psi_independence", _anchor("psi_independence"), suite, sigma, 1e-8,
                CheckStatus.PASSED if sigma > 1e-8 else CheckStatus.FAILED))
        else:
            records.append(self._skipped(suite, "psi_independence", f"r = {dd.r} has middle patterns"))

        def sample_job(sample: int, q: CurvePoint) -> List[CheckRecord]:
            frame = spectrum_match(q, dd, basis, p, config.tol_spec,
                                   T=context.matrix(sample, "T"), That_xy=context.matrix(sample, "That_xy"))
            context.frames[sample] = frame
            out = [
                self._record(suite, "spectrum_inclusion", frame.max_residual, config.tol_spec, sample),
                self._record(suite, "scale_constant", abs(frame.scale - 1), config.tol_linalg, sample,
                             details={"c": frame.scale}),
                self._record(suite, "degenerate_q", float(frame.degenerate), 0.0, sample, warn_only=True),
                self._record(suite, "match_collisions", float(len(frame.collisions)), 0.0, sample,
                             warn_only=frame.degenerate, details={"patterns": list(frame.collisions)}),
            ]
            estimates = top_scale_estimates(q, dd, context.matrix(sample, "T"))
            spread = abs(estimates["from_lower"] - estimates["from_upper"]) / abs(estimates["from_upper"])
            out.append(self._record(suite, "top_scale_agreement", spread, config.tol_linalg, sample))
            out.append(self._record(suite, "top_scale_value",
                                    abs(estimates["from_lower"] - estimates["analytic"]), config.tol_spec, sample,
                                    warn_only=True, details={"measured": estimates["from_lower"]}))
            return out

        return records + self._per_sample(suite, context, sample_job)

    def _suite_rotations(self, context: RunContext) -> List[CheckRecord]:
        suite, dd, config = VerificationSuite.ROTATIONS, context.dd, self.config
        tol = config.tol_linalg
        modes = all_modes(dd)
        records = self._records(suite, "mode_algebra", mode_algebra_check(), tol)
        for mode in modes:
            worst = rotation_identity_residuals(mode, dd)
            name = max(worst, key=worst.get)
            records.append(self._record(suite, f"identities:mode{mode.j + 1}", worst[name], tol,
                                        details={"worst": name, "residuals": worst}))

        def sample_job(sample: int, q: CurvePoint) -> List[CheckRecord]:
            out = []
            for mode in modes:
                factors = factor_check(mode, q, dd)
                factors.update(xyz_curve_forms(mode.j, q, dd))
                name = max(factors, key=factors.get)
                out.append(self._record(suite, f"factors:mode{mode.j + 1}", factors[name], tol, sample,
                                        details={"worst": name, "residuals": factors}))
                out.append(self._record(suite, f"sign_flip:mode{mode.j + 1}",
                                        sign_flip_check(mode.j, dd, q), tol, sample))
            rep = assemble_sector(q, dd, modes)
            out += self._records(suite, "sector_rep", sector_rep_checks(q, dd, rep), 10 * tol, sample)
            if config.Q != 0:
                return out
            T = context.matrix(sample, "T")
            out += self._records(suite, "sector_element",
                                 sector_element_checks(q, dd, context.basis, context.p, T=T), 10 * tol, sample)
            if dd.r <= EXPLICIT_PSI_MAX_R:
                blocks = sector_block_check(q, dd, context.basis, context.p, modes, T=T,
                                            That=context.matrix(sample, "That"),
                                            That_xy=context.matrix(sample, "That_xy"))
                out += self._records(suite, "sector_block", blocks, 100 * tol, sample)
            return out

        records += self._per_sample(suite, context, sample_job)
        if len(context.points) > 1:
            q1, q2 = context.points[:2]
            for mode in modes:
                records += self._guarded(suite, lambda mode=mode: self._records(
                    suite, f"q_independence:mode{mode.j + 1}", q_independence_check(mode, dd, q1, q2), tol))
        return records

    def _suite_intertwining(self, context: RunContext) -> List[CheckRecord]:
        suite, dd, config, p = VerificationSuite.INTERTWINING, context.dd, self.config, context.p
        if config.Q != 0:
            return [self._skipped(suite, "intertwine_residual", "Q ≠ 0 sectors are not intertwined")]
        if dd.r > EXPLICIT_PSI_MAX_R:
            return [self._skipped(suite, "intertwine_residual", f"r = {dd.r} has middle patterns")]
        modes = all_modes(dd)

        def sample_job(sample: int, q: CurvePoint) -> List[CheckRecord]:
            report = intertwine_full_check(
                q, dd, context.basis, p, modes, T=context.matrix(sample, "T"),
                That=context.matrix(sample, "That"), That_xy=context.matrix(sample, "That_xy"))
            out = []
            for name in ("T", "That_xy", "That_yx"):
                kappa = report["constants"][name]
                out.append(self._record(suite, f"intertwine_residual:{name}", report["residuals"][name],
                                        100 * config.tol_linalg, sample))
                out.append(self._record(suite, f"intertwine_spread:{name}", report["spread"][name],
                                        100 * config.tol_linalg, sample))
                out.append(self._record(suite, f"intertwine_constant:{name}", abs(kappa - 1), config.tol_linalg,
                                        sample, details={"kappa": kappa}))
            return out

        return self._per_sample(suite, context, sample_job)

    SUITE_RUNNERS = {
        VerificationSuite.DRINFELD: _suite_drinfeld,
        VerificationSuite.GENERATING: _suite_generating,
        VerificationSuite.ELEMENTS: _suite_elements,
        VerificationSuite.SPECTRUM: _suite_spectrum,
        VerificationSuite.ROTATIONS: _suite_rotations,
        VerificationSuite.INTERTWINING: _suite_intertwining,
    }

    # ---------- run ----------

    def prepare(self) -> RunContext:
        config = self.config
        dd = build_drinfeld(config.N, config.L, config.kprime, config.lambda_p, tol_root=config.tol_root)
        points = sample_q_points(config, dd.p)
        return RunContext(config=config, dd=dd, p=dd.p, points=points)

    def run(self, suites: Optional[Iterable[VerificationSuite]] = None) -> RunReport:
        """تشغيل مجموعات التحقق"""
        suites = tuple(VerificationSuite) if suites is None else tuple(suites)
        config = self.config
        report = RunReport(config=config)
        self._say(f"🧪⚡ التحقق: N={config.N}, L={config.L}, Q={config.Q}, k′={config.kprime}, "
                  f"عينات={config.samples}, بذرة={config.seed}")

        try:
            context = self.prepare()
        except ChiralPottsError as e:
            report.checks.append(self._error(VerificationSuite.DRINFELD, e, None))
            self._say(f"❌ تعذر بناء كثيرة حدود درينفيلد: {e}")
            return report
        report.drinfeld = context.dd.summary()
        if context.dd.self_paired:
            self._say(f"⚠️ جذور مقترنة بنفسها: {[m + 1 for m in context.dd.self_paired]}")
        if any(s not in (VerificationSuite.DRINFELD, VerificationSuite.GENERATING) for s in suites):
            context.basis = enumerate_basis(config.N, config.L, config.size_cap)

        for suite in suites:
            self._say(f"\n🧪 {suite.value}")
            runner = self.SUITE_RUNNERS[suite]
            if self.analyzer is not None:
                records, _ = self.analyzer.measure_performance(
                    self._guarded, suite, lambda runner=runner: runner(self, context), label=suite.value)
            else:
                records = self._guarded(suite, lambda runner=runner: runner(self, context))
            report.checks.extend(records)
            for record in sorted(records, key=CheckRecord.sort_key):
                if record.status is not CheckStatus.PASSED:
                    self._say(f"   {STATUS_MARKS[record.status]} {record.name}: {record.residual}")
            self._say(f"   ✅ {sum(r.status is CheckStatus.PASSED for r in records)}/{len(records)}")

        for sample, frame in sorted(context.frames.items()):
            for index, entry in sorted(frame.entries.items()):
                report.spectrum.append({
                    "sample": sample,
                    "lambda_q": frame.q.lam,
                    "pattern": entry.pattern.label(),
                    "pattern_index": index,
                    "eigenvalue": entry.analytic,
                    "square": frame.scale * entry.analytic ** 2,
                    "numeric": entry.numeric,
                    "residual": entry.residual,
                })
        self._frames = context.frames
        if self.analyzer is not None:
            report.timing = self.analyzer.get_performance_summary()
            self._say("\n" + self.analyzer.generate_performance_report())
        for line in report.summary_lines():
            self._say(line)
        return report

    def plot_spectrum(self, path: Union[str, Path], sample: int = 0) -> Optional[Path]:
        """Scatter of the numeric spectrum of 𝒯̂_0𝒯_0 with the c𝒢² markers of one sample."""
        frames = getattr(self, "_frames", {})
        if sample not in frames:
            return None
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        frame = frames[sample]
        analytic = np.array([frame.scale * e.analytic ** 2 for e in frame.entries.values()])
        fig, ax = plt.subplots(figsize=(6, 6))
        ax.scatter(frame.spectrum.real, frame.spectrum.imag, s=8, color="gray", label="spectrum")
        ax.scatter(analytic.real, analytic.imag, s=60, facecolors="none", edgecolors="crimson",
                   label=r"$c\,G^2$")
        ax.set_xlabel("Re")
        ax.set_ylabel("Im")
        ax.set_title(f"N={self.config.N}, L={self.config.L}, $\\lambda_q$={frame.q.lam:.3f}")
        ax.legend()
        fig.tight_layout()
        path = Path(path)
        fig.savefig(path, dpi=120)
        plt.close(fig)
        return path


def run(config: ModelConfig, suites: Optional[Sequence[VerificationSuite]] = None,
        verbose: bool = False, timing: bool = False) -> RunReport:
    return ChiralPottsVerificationSystem(config, verbose=verbose, timing=timing).run(suites)


def test_comprehensive_verification_system():
    """تشغيل تجريبي"""
    report = run(ModelConfig(N=3, L=3, kprime=0.3, samples=2, seed=42), verbose=True)
    print(f"   exit code {report.exit_code}")


def main():
    """الدالة الرئيسية"""
    test_comprehensive_verification_system()


if __name__ == "__main__":
    main()
