#!/usr/bin/env python3
"""
قطاع الحالة الأرضية - Ground-State Sector
أدوات التحقق من نموذج بوتس الشيرالي

🌍 المتجهات الصريحة |Ω⟩, |Ω̄⟩, E⁺|Ω⟩, E⁻|Ω̄⟩ والمتجهات الثنائية
🎯 مطابقة القيم الذاتية التحليلية مع التفكيك العددي الكثيف
🔗 فحص التشابك الكامل 𝒯X = 𝒢Y عبر مؤثرات الدوران
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from scipy import linalg

from root_of_unity_numerics import (
    ConfigurationError, UnsupportedPatternError, omega_power, relative_error,
)
from chiral_potts_curve import CurvePoint
from generating_functions import GeneratingKind, polynomial_table
from drinfeld_polynomial import (
    DrinfeldData, SpinPattern, all_patterns, analytic_eigenvalue,
)
from transfer_matrices import (
    ArgumentOrder, SectorBasis, TransferMatrix, build_T, build_That,
)
from rotation_operators import (
    ModeMatrices, all_modes, assemble_sector, sector_normalization, xyz, xyz_bar, xyz_prime,
)

SUPPORT_TOLERANCE = 1e-12


class VectorRole(Enum):
    """دور المتجه"""
    KET = "ket"
    DUAL = "dual"
    PSI = "psi"
    X = "X"
    Y = "Y"


@dataclass(eq=False)
class SectorVector:
    """متجه القطاع - complex amplitudes over a SectorBasis."""
    amplitudes: np.ndarray
    basis: SectorBasis
    role: VectorRole = VectorRole.KET
    pattern: Optional[SpinPattern] = None
    label: str = ""

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def dot(self, other: "SectorVector") -> complex:
        """Bilinear pairing, no conjugation."""
        return complex(self.amplitudes @ other.amplitudes)

    def scaled(self, factor: complex) -> "SectorVector":
        return SectorVector(factor * self.amplitudes, self.basis, self.role, self.pattern, self.label)

    def support_charges(self, tolerance: float = SUPPORT_TOLERANCE) -> set:
        scale = max(self.norm, 1e-300)
        live = np.abs(self.amplitudes) > tolerance * scale
        return set(int(c) for c in self.basis.charges[live])


@dataclass
class FrameEntry:
    pattern: SpinPattern
    analytic: complex
    numeric: Optional[complex] = None
    residual: Optional[float] = None
    x_vector: Optional[SectorVector] = None
    y_vector: Optional[SectorVector] = None
    residuals: Dict[str, float] = field(default_factory=dict)


@dataclass
class SectorFrame:
    """إطار القطاع - per-pattern eigenvalues, matches and (optionally) X, Y vectors."""
    q: CurvePoint
    entries: Dict[int, FrameEntry] = field(default_factory=dict)
    scale: complex = 1.0
    degenerate: bool = False
    collisions: List[int] = field(default_factory=list)
    spectrum: Optional[np.ndarray] = None

    @property
    def max_residual(self) -> float:
        values = [e.residual for e in self.entries.values() if e.residual is not None]
        return max(values, default=0.0)

    def assignment(self) -> Dict[int, int]:
        """pattern index → position of the matched numeric eigenvalue."""
        return {index: int(np.argmin(np.abs(self.spectrum - entry.numeric)))
                for index, entry in self.entries.items() if entry.numeric is not None}


# ==================== المتجهات الصريحة - Explicit vectors ====================

def _unit(basis: SectorBasis, position: int, label: str, pattern: SpinPattern) -> SectorVector:
    amplitudes = np.zeros(basis.dimension, dtype=complex)
    amplitudes[position] = 1.0
    return SectorVector(amplitudes, basis, VectorRole.PSI, pattern, label)


def omega_state(basis: SectorBasis, r: Optional[int] = None) -> SectorVector:
    r = r if r is not None else basis.L * (basis.N - 1) // basis.N
    return _unit(basis, basis.omega_index, "Ω", SpinPattern.all_minus(r))


def omegabar_state(basis: SectorBasis, r: Optional[int] = None) -> SectorVector:
    r = r if r is not None else basis.L * (basis.N - 1) // basis.N
    return _unit(basis, basis.omegabar_index, "Ω̄", SpinPattern.all_plus(r))


def _g_values(dd: DrinfeldData, kind: GeneratingKind, m: int):
    configs, matrix = polynomial_table(dd.N, dd.L, kind)
    powers = dd.roots[m] ** np.arange(matrix.shape[1])
    return configs, matrix @ powers


def _checked_mode(m: int, dd: DrinfeldData) -> int:
    if not 0 <= m < dd.r:
        raise ConfigurationError(f"mode index {m} outside [0, {dd.r})")
    return m


def _charge_n_vector(dd: DrinfeldData, basis: SectorBasis, m: int, kind: GeneratingKind,
                     coefficient: complex, moment_sign: int, top: bool,
                     role: VectorRole, label: str) -> SectorVector:
    """Σ_conf coefficient · ω^{moment_sign·Σ j n_j} G(conf, z_m) on conf or its complement."""
    configs, values = _g_values(dd, kind, m)
    amplitudes = np.zeros(basis.dimension, dtype=complex)
    for conf, value in zip(configs, values):
        position = basis.position(conf.complement() if top else conf)
        amplitudes[position] = coefficient * omega_power(dd.N, moment_sign * conf.site_moment) * value
    return SectorVector(amplitudes, basis, role, label=label)


def eplus_omega(m: int, dd: DrinfeldData, basis: SectorBasis) -> SectorVector:
    """E_m⁺|Ω⟩ = β_{m,0} z_m Σ ω^{−Σ j n_j} G(conf, z_m)|conf⟩."""
    _checked_mode(m, dd)
    coefficient = dd.beta.entries[m, 0] * dd.roots[m]
    vector = _charge_n_vector(dd, basis, m, GeneratingKind.FORWARD, coefficient, -1, False,
                              VectorRole.PSI, f"E{m + 1}+|Ω⟩")
    vector.pattern = SpinPattern.all_minus(dd.r).flipped(m)
    return vector


def eminus_dual_omega(m: int, dd: DrinfeldData, basis: SectorBasis) -> SectorVector:
    """⟨Ω|E_m⁻ = −β_{m,0} Σ ⟨conf| ω^{Σ j n_j} Ḡ(conf, z_m)."""
    _checked_mode(m, dd)
    return _charge_n_vector(dd, basis, m, GeneratingKind.BAR, -dd.beta.entries[m, 0], 1, False,
                            VectorRole.DUAL, f"⟨Ω|E{m + 1}-")


def eplus_dual_omegabar(m: int, dd: DrinfeldData, basis: SectorBasis) -> SectorVector:
    """⟨Ω̄|E_m⁺ = −β_{m,0} z_m Σ ⟨N−1−conf| Ḡ(conf, z_m)."""
    _checked_mode(m, dd)
    coefficient = -dd.beta.entries[m, 0] * dd.roots[m]
    return _charge_n_vector(dd, basis, m, GeneratingKind.BAR, coefficient, 0, True,
                            VectorRole.DUAL, f"⟨Ω̄|E{m + 1}+")


def eminus_omegabar(m: int, dd: DrinfeldData, basis: SectorBasis) -> SectorVector:
    """E_m⁻|Ω̄⟩ = β_{m,0} Σ G(conf, z_m)|N−1−conf⟩."""
    _checked_mode(m, dd)
    vector = _charge_n_vector(dd, basis, m, GeneratingKind.FORWARD, dd.beta.entries[m, 0], 0, True,
                              VectorRole.PSI, f"E{m + 1}-|Ω̄⟩")
    vector.pattern = SpinPattern.all_plus(dd.r).flipped(m)
    return vector


def gram_matrices(dd: DrinfeldData, basis: SectorBasis) -> Dict[str, np.ndarray]:
    """⟨Ω|E_m⁻ · E_k⁺|Ω⟩ and ⟨Ω̄|E_m⁺ · E_k⁻|Ω̄⟩; both are δ_{mk}."""
    r = dd.r
    bottom = np.array([[eminus_dual_omega(m, dd, basis).dot(eplus_omega(k, dd, basis)) for k in range(r)]
                       for m in range(r)])
    top = np.array([[eplus_dual_omegabar(m, dd, basis).dot(eminus_omegabar(k, dd, basis)) for k in range(r)]
                    for m in range(r)])
    return {"omega": bottom, "omegabar": top}


def gram_check(dd: DrinfeldData, basis: SectorBasis) -> Dict[str, float]:
    identity = np.eye(dd.r)
    return {name: float(np.max(np.abs(matrix - identity))) for name, matrix in gram_matrices(dd, basis).items()}


def support_check(dd: DrinfeldData, basis: SectorBasis) -> Dict[str, bool]:
    """Every explicit vector lives on the charge class it claims."""
    top_charge = dd.L * (dd.N - 1) - dd.N
    ok = {"eplus_omega": True, "eminus_dual_omega": True, "eplus_dual_omegabar": True, "eminus_omegabar": True}
    for m in range(dd.r):
        ok["eplus_omega"] &= eplus_omega(m, dd, basis).support_charges() <= {dd.N}
        ok["eminus_dual_omega"] &= eminus_dual_omega(m, dd, basis).support_charges() <= {dd.N}
        ok["eplus_dual_omegabar"] &= eplus_dual_omegabar(m, dd, basis).support_charges() <= {top_charge}
        ok["eminus_omegabar"] &= eminus_omegabar(m, dd, basis).support_charges() <= {top_charge}
    return ok


def x1_power_check(basis: SectorBasis) -> float:
    """|ω^{−(N−1)L(L+1)/2} − ω^{L(L+1)/2}|: both phases of the top-state identity agree."""
    N, L = basis.N, basis.L
    triangle = L * (L + 1) // 2
    return abs(omega_power(N, -(N - 1) * triangle) - omega_power(N, triangle))


def top_scale(dd: DrinfeldData) -> complex:
    """∏_j E_j⁺|Ω⟩ = ω^{−L(L+1)/2}(−1)^r |Ω̄⟩."""
    return omega_power(dd.N, -dd.L * (dd.L + 1) // 2) * (-1) ** dd.r


def top_scale_estimates(q: CurvePoint, dd: DrinfeldData, T: TransferMatrix) -> Dict[str, complex]:
    """
    The Ω̄ scale measured from ⟨Ω̄|𝒯|Ω⟩ and from ⟨Ω|𝒯|Ω̄⟩ against the
    mode-product elements ∏Z_j and ∏(X_j + Y_j).
    """
    basis = T.basis
    lo, hi = basis.omega_index, basis.omegabar_index
    forward = [xyz(j, q, dd) for j in range(dd.r)]
    plus = np.prod([s.plus for s in forward])
    zed = np.prod([s.Z for s in forward])
    matrix = T.matrix
    from_lower = matrix[hi, lo] * plus / (matrix[lo, lo] * zed)
    from_upper = matrix[lo, lo] * zed / (plus * matrix[lo, hi])
    return {"from_lower": complex(from_lower), "from_upper": complex(from_upper), "analytic": top_scale(dd)}


def psi_explicit(pattern: SpinPattern, dd: DrinfeldData, basis: SectorBasis,
                 scale: Optional[complex] = None) -> SectorVector:
    """
    Ψ(ξ) = ∏_{m∈J} E_m⁺|Ω⟩ for the patterns within one flip of either
    extreme; `scale` is the Ω̄ factor of ∏_j E_j⁺|Ω⟩.
    """
    if pattern.r != dd.r:
        raise ConfigurationError(f"pattern length {pattern.r} differs from r = {dd.r}")
    scale = top_scale(dd) if scale is None else scale
    plus, minus = pattern.plus_modes, pattern.minus_modes
    if not plus:
        vector = omega_state(basis, dd.r)
    elif not minus:
        vector = omegabar_state(basis, dd.r).scaled(scale)
    elif len(plus) == 1:
        vector = eplus_omega(plus[0], dd, basis)
    elif len(minus) == 1:
        vector = eminus_omegabar(minus[0], dd, basis).scaled(scale)
    else:
        raise UnsupportedPatternError(
            f"pattern {pattern.label()} is two or more flips away from both ground states")
    vector.pattern = pattern
    vector.role = VectorRole.PSI
    return vector


def psi_matrix(dd: DrinfeldData, basis: SectorBasis, scale: Optional[complex] = None) -> np.ndarray:
    """Columns Ψ(ξ) in pattern-index order."""
    return np.column_stack([psi_explicit(p, dd, basis, scale).amplitudes for p in all_patterns(dd.r)])


def psi_independence(dd: DrinfeldData, basis: SectorBasis) -> float:
    """Smallest singular value of the column-normalized Ψ matrix."""
    psi = psi_matrix(dd, basis)
    psi = psi / np.linalg.norm(psi, axis=0)
    return float(np.min(linalg.svdvals(psi)))


# ==================== النسب - Ratio checks ====================

def _ratio_family(dd: DrinfeldData, q: CurvePoint, p: CurvePoint):
    """Closed forms of the four ratio families for every mode."""
    N = dd.N
    xp, yp, xq, yq = p.x ** N, p.y ** N, q.x ** N, q.y ** N
    for m, z in enumerate(dd.roots):
        yield m, {
            "ratio1": (xq - yp * z) / (xq - yp),
            "ratio2": (xp - yq / z) / (xp - yq),
            "ratio3_omega": -(xp - yq / z) / (xp - yq),
            "ratio3_omegabar": -(xq - yp * z) / (xq - yp),
            "ratio4_omega": -(xp - xq / z) / (xp - xq),
            "ratio4_omegabar": -(yq - yp * z) / (yq - yp),
        }


def ratio_checks(q: CurvePoint, dd: DrinfeldData, basis: SectorBasis, p: CurvePoint,
                 T: Optional[TransferMatrix] = None, That: Optional[TransferMatrix] = None,
                 That_xy: Optional[TransferMatrix] = None) -> Dict[str, float]:
    """
    Each ratio of ground-state elements, from the brute-force matrices
    against its closed form and against the X/Y/Z scalars of the mode.
    """
    T = T if T is not None else build_T(0, p, q, basis)
    That = That if That is not None else build_That(0, p, q, basis, ArgumentOrder.YX)
    That_xy = That_xy if That_xy is not None else build_That(0, p, q, basis, ArgumentOrder.XY)
    lo, hi = basis.omega_index, basis.omegabar_index
    worst: Dict[str, float] = {}

    def record(name: str, value: float):
        worst[name] = max(worst.get(name, 0.0), value)

    for m, closed in _ratio_family(dd, q, p):
        forward, bar, prime = xyz(m, q, dd), xyz_bar(m, q, dd), xyz_prime(m, q, dd)
        raise_m, lower_m = eplus_omega(m, dd, basis).amplitudes, eminus_omegabar(m, dd, basis).amplitudes
        brute = {
            "ratio1": T.matrix[lo, lo] / (eminus_dual_omega(m, dd, basis).amplitudes @ T.matrix[:, lo]),
            "ratio2": T.matrix[hi, hi] / (eplus_dual_omegabar(m, dd, basis).amplitudes @ T.matrix[:, hi]),
            "ratio3_omega": That.matrix[lo, lo] / (That.matrix[lo, :] @ raise_m),
            "ratio3_omegabar": That.matrix[hi, hi] / (That.matrix[hi, :] @ lower_m),
            "ratio4_omega": That_xy.matrix[lo, lo] / (That_xy.matrix[lo, :] @ raise_m),
            "ratio4_omegabar": That_xy.matrix[hi, hi] / (That_xy.matrix[hi, :] @ lower_m),
        }
        scalars = {
            "ratio1": forward.plus / forward.Z,
            "ratio2": forward.minus / forward.Z,
            "ratio3_omega": bar.plus / bar.Z,
            "ratio3_omegabar": bar.minus / bar.Z,
            "ratio4_omega": prime.plus / prime.Z,
            "ratio4_omegabar": prime.minus / prime.Z,
        }
        for name, value in closed.items():
            record(name, relative_error(brute[name], value))
            record(f"{name}_scalars", relative_error(scalars[name], value))
    return worst


def dual_element_checks(q: CurvePoint, dd: DrinfeldData, basis: SectorBasis, p: CurvePoint,
                        T: Optional[TransferMatrix] = None) -> Dict[str, float]:
    """⟨Ω|E_m⁻𝒯_0|Ω⟩ and ⟨Ω̄|E_m⁺𝒯_0|Ω̄⟩ against their product forms."""
    T = T if T is not None else build_T(0, p, q, basis)
    N, L, r = dd.N, dd.L, dd.r
    lo, hi = basis.omega_index, basis.omegabar_index
    scale = N ** (1 - L / 2)
    zq = (q.x / p.y) ** N
    zhat = (q.y / p.x) ** N
    bottom, top = 0.0, 0.0
    for m in range(r):
        others = np.delete(dd.roots, m)
        expected = -p.y ** (r * N) * (1 - zq) * scale * np.prod(zq - others)
        value = eminus_dual_omega(m, dd, basis).amplitudes @ T.matrix[:, lo]
        bottom = max(bottom, relative_error(value, expected))
        expected = -dd.roots[m] * (p.mu * p.x / q.mu) ** (r * N) * (1 - zhat) * scale * np.prod(zhat - others)
        value = eplus_dual_omegabar(m, dd, basis).amplitudes @ T.matrix[:, hi]
        top = max(top, relative_error(value, expected))
    return {"lowering_dual_omega": bottom, "raising_dual_omegabar": top}


# ==================== التمثيل - Sector representation ====================

def sector_element_checks(q: CurvePoint, dd: DrinfeldData, basis: SectorBasis, p: CurvePoint,
                          T: Optional[TransferMatrix] = None) -> Dict[str, float]:
    """
    Brute-force ground-state elements of 𝒯_0 against the assembled mode
    products: ⟨Ω|𝒯|Ω⟩ = κ_0∏(X_j + Y_j), ⟨Ω̄|𝒯|Ω̄⟩ = κ_0∏(X_j − Y_j),
    ⟨Ω|E_m⁻𝒯|Ω⟩ = κ_0Z_m∏_{j≠m}(X_j + Y_j), ⟨Ω̄|E_m⁺𝒯|Ω̄⟩ = κ_0Z_m∏_{j≠m}(X_j − Y_j)
    and the two corner elements through κ_0∏Z_j. Valid for every r.
    """
    T = T if T is not None else build_T(0, p, q, basis)
    matrix = T.matrix
    lo, hi = basis.omega_index, basis.omegabar_index
    kappa = sector_normalization(dd)
    forward = [xyz(j, q, dd) for j in range(dd.r)]
    plus = np.array([s.plus for s in forward])
    minus = np.array([s.minus for s in forward])
    zed = np.prod([s.Z for s in forward])
    scale = top_scale(dd)

    lowering, raising = 0.0, 0.0
    for m, scalars in enumerate(forward):
        others = np.arange(dd.r) != m
        value = eminus_dual_omega(m, dd, basis).amplitudes @ matrix[:, lo]
        lowering = max(lowering, relative_error(value, kappa * scalars.Z * np.prod(plus[others])))
        value = eplus_dual_omegabar(m, dd, basis).amplitudes @ matrix[:, hi]
        raising = max(raising, relative_error(value, kappa * scalars.Z * np.prod(minus[others])))
    return {
        "omega_diagonal": relative_error(matrix[lo, lo], kappa * np.prod(plus)),
        "omegabar_diagonal": relative_error(matrix[hi, hi], kappa * np.prod(minus)),
        "lowering": lowering,
        "raising": raising,
        "omegabar_omega": relative_error(matrix[hi, lo], scale * kappa * zed),
        "omega_omegabar": relative_error(matrix[lo, hi], kappa * zed / scale),
    }


def psi_block(matrix: np.ndarray, psi: np.ndarray) -> Tuple[np.ndarray, float]:
    """Ψ⁺MΨ and the relative part of MΨ outside span Ψ."""
    images = matrix @ psi
    block = linalg.lstsq(psi, images)[0]
    closure = np.linalg.norm(images - psi @ block) / (np.linalg.norm(matrix) * np.linalg.norm(psi))
    return block, float(closure)


def sector_block_check(q: CurvePoint, dd: DrinfeldData, basis: SectorBasis, p: CurvePoint,
                       modes: Optional[List[ModeMatrices]] = None,
                       T: Optional[TransferMatrix] = None,
                       That: Optional[TransferMatrix] = None,
                       That_xy: Optional[TransferMatrix] = None) -> Dict[str, float]:
    """Ψ⁺𝒯_0Ψ, Ψ⁺𝒯̂_0Ψ entrywise against the assembled sector matrices, r ≤ 3."""
    if dd.r > 3:
        raise UnsupportedPatternError(f"r = {dd.r}: middle patterns have no explicit Ψ")
    T = T if T is not None else build_T(0, p, q, basis)
    That = That if That is not None else build_That(0, p, q, basis, ArgumentOrder.YX)
    That_xy = That_xy if That_xy is not None else build_That(0, p, q, basis, ArgumentOrder.XY)
    rep = assemble_sector(q, dd, modes)
    psi = psi_matrix(dd, basis)
    results: Dict[str, float] = {}
    for name, matrix, assembled in (("T", T.matrix, rep.T_rep),
                                    ("That_xy", That_xy.matrix, rep.That_xy_rep),
                                    ("That_yx", That.matrix, rep.That_rep)):
        block, closure = psi_block(matrix, psi)
        results[f"closure_{name}"] = closure
        results[f"block_{name}"] = float(np.linalg.norm(block - assembled) / np.linalg.norm(assembled))
    return results


# ==================== الطيف - Spectrum ====================

def spectral_constant(q: CurvePoint, dd: DrinfeldData, p: CurvePoint) -> complex:
    """
    c in spectrum(𝒯̂_0(x_q, y_q)𝒯_0) ∋ c𝒢², fixed by the all-minus elements:
    ⟨Ω|𝒯̂|Ω⟩⟨Ω|𝒯|Ω⟩ from their closed forms over ∏(X′_j + Y′_j)(X_j + Y_j).
    """
    N, r = dd.N, dd.r
    scale = N ** (1 - dd.L / 2)
    P = dd.polynomial
    forward = scale * p.y ** (r * N) * P((q.x / p.y) ** N)
    hat = scale * p.x ** (r * N) * P((q.x / p.x) ** N)
    modes = np.prod([xyz(j, q, dd).plus * xyz_prime(j, q, dd).plus for j in range(r)])
    return complex(forward * hat / modes)


def spectrum_match(q: CurvePoint, dd: DrinfeldData, basis: SectorBasis, p: CurvePoint,
                   tol_spec: float = 1e-6, T: Optional[TransferMatrix] = None,
                   That_xy: Optional[TransferMatrix] = None) -> SectorFrame:
    """
    Locate c·𝒢(λ_q, ξ)² for every pattern among the eigenvalues of
    𝒯̂_0(x_q, y_q)𝒯_0(x_q, y_q), with c = spectral_constant(q).
    """
    T = T if T is not None else build_T(0, p, q, basis)
    That_xy = That_xy if That_xy is not None else build_That(0, p, q, basis, ArgumentOrder.XY)
    spectrum = linalg.eigvals(That_xy.matrix @ T.matrix)

    patterns = all_patterns(dd.r)
    analytic = np.array([analytic_eigenvalue(pattern, q.lam, dd) for pattern in patterns])
    squares = analytic ** 2
    scale = spectral_constant(q, dd, p)

    frame = SectorFrame(q=q, scale=scale, spectrum=spectrum)
    gaps = np.abs(squares[:, None] - squares[None, :]) / np.abs(squares[:, None])
    np.fill_diagonal(gaps, np.inf)
    frame.degenerate = bool(np.min(gaps) < tol_spec) if len(squares) > 1 else False

    used = set()
    for pattern, value in zip(patterns, analytic):
        target = scale * value ** 2
        distance = np.abs(spectrum - target)
        position = int(np.argmin(distance))
        if position in used:
            frame.collisions.append(pattern.index)
        used.add(position)
        frame.entries[pattern.index] = FrameEntry(
            pattern=pattern, analytic=value, numeric=complex(spectrum[position]),
            residual=float(distance[position]) / abs(target))
    return frame


# ==================== التشابك - Intertwining ====================

def _fit_constant(lhs: np.ndarray, rhs: np.ndarray) -> complex:
    """κ minimizing ‖lhs − κ rhs‖."""
    return complex(np.vdot(rhs, lhs) / np.vdot(rhs, rhs))


def intertwine_full_check(q: CurvePoint, dd: DrinfeldData, basis: SectorBasis, p: CurvePoint,
                          modes: Optional[List[ModeMatrices]] = None,
                          T: Optional[TransferMatrix] = None,
                          That: Optional[TransferMatrix] = None,
                          That_xy: Optional[TransferMatrix] = None) -> Dict[str, object]:
    """
    X = Ψℛ and Y = Ψ𝒮 column by column; checks 𝒯X_i = 𝒢_iY_i,
    𝒯̂(x_q, y_q)Y_i = 𝒢_iX_i and 𝒯̂(y_q, x_q)Y_i = 𝒢(1/λ_q)_iX_i with no free
    constant. The per-identity κ fitted on the all-minus pattern is reported
    alongside; it must come out as 1 and be shared by every pattern.
    """
    if dd.r > 3:
        raise UnsupportedPatternError(f"r = {dd.r}: middle patterns have no explicit Ψ")
    modes = modes if modes is not None else all_modes(dd)
    T = T if T is not None else build_T(0, p, q, basis)
    That = That if That is not None else build_That(0, p, q, basis, ArgumentOrder.YX)
    That_xy = That_xy if That_xy is not None else build_That(0, p, q, basis, ArgumentOrder.XY)

    rep = assemble_sector(q, dd, modes)
    psi = psi_matrix(dd, basis)
    X, Y = psi @ rep.R_rep, psi @ rep.S_rep
    patterns = all_patterns(dd.r)
    forward = np.array([analytic_eigenvalue(pattern, q.lam, dd) for pattern in patterns])
    inverse = np.array([analytic_eigenvalue(pattern, 1 / q.lam, dd) for pattern in patterns])

    identities = {
        "T": (T.matrix, X, Y, forward),
        "That_xy": (That_xy.matrix, Y, X, forward),
        "That_yx": (That.matrix, Y, X, inverse),
    }
    anchor = patterns[-1].index
    report: Dict[str, object] = {
        "constants": {}, "spread": {}, "residuals": {}, "patterns": {}, "pattern_constants": {},
    }
    for name, (matrix, source, target, eigen) in identities.items():
        images = matrix @ source
        kappa = _fit_constant(images[:, anchor], eigen[anchor] * target[:, anchor])
        spread, worst = 0.0, 0.0
        norm = np.linalg.norm(matrix)
        for pattern in patterns:
            i = pattern.index
            local = _fit_constant(images[:, i], eigen[i] * target[:, i])
            spread = max(spread, relative_error(local, kappa))
            gap = np.linalg.norm(images[:, i] - eigen[i] * target[:, i])
            residual = float(gap / (norm * np.linalg.norm(source[:, i])))
            worst = max(worst, residual)
            report["patterns"].setdefault(i, {})[name] = residual
            report["pattern_constants"].setdefault(i, {})[name] = local
        report["constants"][name] = kappa
        report["spread"][name] = spread
        report["residuals"][name] = worst
    report["X"], report["Y"] = X, Y
    return report


def frame_with_vectors(frame: SectorFrame, intertwining: Dict[str, object], basis: SectorBasis) -> SectorFrame:
    """Attach the X and Y columns of an intertwining run to a spectrum frame."""
    X, Y = intertwining["X"], intertwining["Y"]
    for index, entry in frame.entries.items():
        entry.x_vector = SectorVector(X[:, index], basis, VectorRole.X, entry.pattern)
        entry.y_vector = SectorVector(Y[:, index], basis, VectorRole.Y, entry.pattern)
        entry.residuals.update(intertwining["patterns"].get(index, {}))
    return frame


def dump_eigenvectors_csv(frame: SectorFrame, basis: SectorBasis, path: Union[str, Path]) -> Path:
    """Per pattern: a `#` header line with bits and eigenvalue, then (config, re, im) rows."""
    path = Path(path)
    labels = basis.labels()
    with open(path, "w", encoding="utf-8", newline="") as f:
        for index in sorted(frame.entries):
            entry = frame.entries[index]
            vector = entry.x_vector
            if vector is None:
                continue
            value = entry.analytic
            f.write(f"# pattern={entry.pattern.label()} index={index} "
                    f"eigenvalue={value.real:.15e},{value.imag:.15e}\n")
            block = pd.DataFrame({"config": labels, "re": vector.amplitudes.real, "im": vector.amplitudes.imag})
            block.to_csv(f, index=False, float_format="%.15e")
    return path


def test_ground_state_sector():
    from chiral_potts_curve import point_from_lambda, si_point
    from drinfeld_polynomial import build_drinfeld
    from transfer_matrices import enumerate_basis

    print("🌍⚡ قطاع الحالة الأرضية")
    dd = build_drinfeld(3, 3, 0.3)
    basis = enumerate_basis(3, 3)
    p = si_point(0.3, 3)
    q = point_from_lambda(0.3, 1.3 + 0.4j, 3)
    print(f"   Gram: {gram_check(dd, basis)}")
    frame = spectrum_match(q, dd, basis, p)
    print(f"   spectrum: c = {frame.scale:.6f}, max residual {frame.max_residual:.1e}")
    report = intertwine_full_check(q, dd, basis, p)
    print(f"   Ψ⁺𝒯Ψ against the mode products: {sector_block_check(q, dd, basis, p)}")
    print(f"   intertwining residuals: {report['residuals']}")


if __name__ == "__main__":
    test_ground_state_sector()
