#!/usr/bin/env python3
"""
مصفوفات النقل - Transfer Matrices
أدوات التحقق من نموذج بوتس الشيرالي

🧱 قاعدة متغيرات الحواف ذات الشحنة ≡ 0 mod N
⚖️ أوزان بولتزمان W و W̄
🏗️ بناء 𝒯_Q و 𝒯̂_Q الكثيف وعناصرها المغلقة الشكل
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

import numpy as np
import pandas as pd

from root_of_unity_numerics import (
    ConfigurationError, SingularPointError, relative_error, root_of_unity,
)
from chiral_potts_curve import CurvePoint, conjugate_point
from generating_functions import (
    EdgeConfig, GeneratingKind, configs_with_charge, g_poly,
)

SINGULAR_TOLERANCE = 1e-12
# entries per block in the vectorized builders
CHUNK_ENTRIES = 2_000_000


class TransferVariant(Enum):
    """نوع المصفوفة"""
    T = "T"
    T_HAT = "T_hat"


class ArgumentOrder(Enum):
    """ترتيب الوسائط (x_q, y_q) أو (y_q, x_q)"""
    XY = "(x_q,y_q)"
    YX = "(y_q,x_q)"


# ==================== القاعدة - Basis ====================

@dataclass(frozen=True, eq=False)
class SectorBasis:
    """Lexicographically ordered edge configurations with charge ≡ 0 mod N."""
    N: int
    L: int
    edges: np.ndarray
    index: Dict[Tuple[int, ...], int] = field(repr=False)

    @property
    def dimension(self) -> int:
        return self.edges.shape[0]

    @property
    def prefix(self) -> np.ndarray:
        """prefix[c, j] = N_j of configuration c (0-based j)."""
        return np.cumsum(self.edges, axis=1) - self.edges

    @property
    def charges(self) -> np.ndarray:
        return self.edges.sum(axis=1)

    def position(self, n) -> int:
        key = tuple(int(v) for v in (n.n if isinstance(n, EdgeConfig) else n))
        if key not in self.index:
            raise ConfigurationError(f"configuration {key} is not in the sector basis")
        return self.index[key]

    def config(self, position: int) -> EdgeConfig:
        return EdgeConfig(tuple(self.edges[position]), self.N)

    @property
    def omega_index(self) -> int:
        return self.position((0,) * self.L)

    @property
    def omegabar_index(self) -> int:
        return self.position((self.N - 1,) * self.L)

    def labels(self) -> list:
        return ["".join(str(v) for v in row) for row in self.edges]


def enumerate_basis(N: int, L: int, size_cap: int = 100000) -> SectorBasis:
    if N < 2 or L < 1 or L % N != 0:
        raise ConfigurationError(f"L={L} must be a positive multiple of N={N}")
    if N ** (L - 1) > size_cap:
        raise ConfigurationError(f"sector dimension N^(L−1) = {N ** (L - 1)} exceeds the size cap {size_cap}")
    grid = np.indices((N,) * L).reshape(L, -1).T
    edges = grid[grid.sum(axis=1) % N == 0]
    index = {tuple(int(v) for v in row): i for i, row in enumerate(edges)}
    return SectorBasis(N=N, L=L, edges=edges, index=index)


# ==================== الأوزان - Weights ====================

def weight_W(p: CurvePoint, q: CurvePoint, n: int) -> complex:
    """W_pq(n) = (μ_p/μ_q)^n ∏_{j=1}^n (y_q − x_p ω^j)/(y_p − x_q ω^j)."""
    omega = root_of_unity(p.N)
    value = (p.mu / q.mu) ** n
    for j in range(1, n + 1):
        denominator = p.y - q.x * omega ** j
        if abs(denominator) < SINGULAR_TOLERANCE:
            raise SingularPointError(f"W denominator y_p − x_q ω^{j} vanishes")
        value *= (q.y - p.x * omega ** j) / denominator
    return value


def weight_Wbar(p: CurvePoint, q: CurvePoint, n: int) -> complex:
    """W̄_p′q(n) = (μ_q/μ_p)^n ∏_{j=1}^n (ω y_p − x_q ω^j)/(y_q − x_p ω^j)."""
    omega = root_of_unity(p.N)
    value = (q.mu / p.mu) ** n
    for j in range(1, n + 1):
        denominator = q.y - p.x * omega ** j
        if abs(denominator) < SINGULAR_TOLERANCE:
            raise SingularPointError(f"W̄ denominator y_q − x_p ω^{j} vanishes")
        value *= (omega * p.y - q.x * omega ** j) / denominator
    return value


# ==================== المصفوفات - Matrices ====================

@dataclass(eq=False)
class TransferMatrix:
    """Dense 𝒯_Q or 𝒯̂_Q over a sector basis; rows are bra configurations."""
    matrix: np.ndarray
    basis: SectorBasis
    Q: int
    p: CurvePoint
    q: CurvePoint
    variant: TransferVariant
    order: ArgumentOrder = ArgumentOrder.XY

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.matrix))

    def element(self, bra, ket) -> complex:
        return complex(self.matrix[self.basis.position(bra), self.basis.position(ket)])

    def header(self, kprime: Optional[complex] = None) -> Dict[str, object]:
        return {
            "N": self.basis.N, "L": self.basis.L, "Q": self.Q,
            "kprime": None if kprime is None else [kprime.real, kprime.imag],
            "lambda_p": [self.p.lam.real, self.p.lam.imag],
            "lambda_q": [self.q.lam.real, self.q.lam.imag],
            "variant": self.variant.value, "order": self.order.value,
            "ordering": self.basis.labels(),
        }


def _site_table(upper: complex, upper_w: complex, lower: complex,
                lower_w: complex, mu_ratio: complex, N: int, name: str) -> np.ndarray:
    """
    table[s, n] = (lower^N − lower_w^N) ω^s/(lower − lower_w ω^s)
                  · mu_ratio^n ∏_{ℓ=1}^n (upper − upper_w ω^{ℓ+s})/(lower − lower_w ω^{ℓ+s}).
    """
    omega = root_of_unity(N)
    table = np.zeros((N, N), dtype=complex)
    for s in range(N):
        for lift in range(N):
            if abs(lower - lower_w * omega ** ((s + lift) % N)) < SINGULAR_TOLERANCE:
                raise SingularPointError(f"{name} denominator vanishes at phase ω^{(s + lift) % N}")
        value = (lower ** N - lower_w ** N) * omega ** s / (lower - lower_w * omega ** s)
        table[s, 0] = value
        for n in range(1, N):
            phase = omega ** ((n + s) % N)
            value *= mu_ratio * (upper - upper_w * phase) / (lower - lower_w * phase)
            table[s, n] = value
    return table


def _assemble(basis: SectorBasis, table: np.ndarray, Q: int, hat: bool) -> np.ndarray:
    """
    Σ_a ω^{−Qa} ∏_j table[(a − C_j + N′_j) mod N, e_j] N^{−L/2}, where the
    column offset C_j is N_{j+1} (𝒯) or N_j (𝒯̂) and e_j is the column edge
    (𝒯) or the row edge (𝒯̂).
    """
    N, L, D = basis.N, basis.L, basis.dimension
    omega = root_of_unity(N)
    edges = basis.edges
    prefix = basis.prefix
    if hat:
        column_offsets = prefix
    else:
        column_offsets = np.concatenate([prefix[:, 1:], basis.charges[:, None]], axis=1)

    chunk = max(1, CHUNK_ENTRIES // max(1, D * L))
    out = np.zeros((D, D), dtype=complex)
    for start in range(0, D, chunk):
        rows = slice(start, min(start + chunk, D))
        base = prefix[rows][:, None, :] - column_offsets[None, :, :]
        if hat:
            site_edges = np.broadcast_to(edges[rows][:, None, :], base.shape)
        else:
            site_edges = np.broadcast_to(edges[None, :, :], base.shape)
        block = np.zeros(base.shape[:2], dtype=complex)
        for a in range(N):
            block += omega ** ((-Q * a) % N) * np.prod(table[(base + a) % N, site_edges], axis=2)
        out[rows] = block
    return out * N ** (-L / 2)


def _check_sector(Q: int, p: CurvePoint, q: CurvePoint, basis: SectorBasis):
    if not 0 <= Q < basis.N:
        raise ConfigurationError(f"Q must lie in [0, {basis.N}), got {Q}")
    if p.N != basis.N or q.N != basis.N:
        raise ConfigurationError("curve points and basis disagree on N")


def build_T(Q: int, p: CurvePoint, q: CurvePoint, basis: SectorBasis) -> TransferMatrix:
    """⟨n′|𝒯_Q(x_q, y_q)|n⟩ as the a-sum of site products."""
    _check_sector(Q, p, q, basis)
    table = _site_table(q.y, p.x, p.y, q.x, p.mu / q.mu, basis.N, "𝒯 (y_p − x_q ω^s)")
    return TransferMatrix(_assemble(basis, table, Q, hat=False), basis, Q, p, q, TransferVariant.T)


def build_That(Q: int, p: CurvePoint, q: CurvePoint, basis: SectorBasis,
               order: ArgumentOrder = ArgumentOrder.YX) -> TransferMatrix:
    """
    ⟨n′|𝒯̂_Q(y_q, x_q)|n⟩; the (x_q, y_q) order is the same formula at the
    conjugate point q′ = (y_q, x_q, 1/μ_q).
    """
    _check_sector(Q, p, q, basis)
    point = q if order is ArgumentOrder.YX else conjugate_point(q)
    table = _site_table(point.x, p.y, p.x, point.y, point.mu / p.mu, basis.N, "𝒯̂ (x_p − y_q ω^s)")
    return TransferMatrix(_assemble(basis, table, Q, hat=True), basis, Q, p, q, TransferVariant.T_HAT, order)


def physical_prefactor(q: CurvePoint, p: CurvePoint, variant: TransferVariant, L: int) -> complex:
    """N^{L/2}(x_q − y_p)^L/(x_q^N − y_p^N)^L for T_q; y_p → x_p for T̂_q."""
    N = q.N
    partner = p.y if variant is TransferVariant.T else p.x
    denominator = q.x ** N - partner ** N
    if abs(denominator) < SINGULAR_TOLERANCE:
        raise SingularPointError("x_q^N coincides with the p-point value; physical prefactor undefined")
    return N ** (L / 2) * (q.x - partner) ** L / denominator ** L


def physical_matrix(tm: TransferMatrix) -> np.ndarray:
    return physical_prefactor(tm.q, tm.p, tm.variant, tm.basis.L) * tm.matrix


def contracted_element(dual, M: Union[TransferMatrix, np.ndarray], vec) -> complex:
    """Bilinear ⟨dual|M|vec⟩, no conjugation."""
    left = np.asarray(getattr(dual, "amplitudes", dual))
    right = np.asarray(getattr(vec, "amplitudes", vec))
    matrix = M.matrix if isinstance(M, TransferMatrix) else np.asarray(M)
    if left.shape[0] != matrix.shape[0] or right.shape[0] != matrix.shape[1]:
        raise ConfigurationError(
            f"dimension mismatch: dual {left.shape[0]}, matrix {matrix.shape}, vector {right.shape[0]}")
    return complex(left @ matrix @ right)


# ==================== التناظر الانتقالي - Translation ====================

def shift_operator(basis: SectorBasis, Q: int = 0) -> np.ndarray:
    """U|n⟩ = ω^{−Q n_1}|n_2, ..., n_L, n_1⟩."""
    omega = root_of_unity(basis.N)
    U = np.zeros((basis.dimension, basis.dimension), dtype=complex)
    for col, row in enumerate(basis.edges):
        shifted = tuple(int(v) for v in np.roll(row, -1))
        U[basis.index[shifted], col] = omega ** ((-Q * int(row[0])) % basis.N)
    return U


def translation_residual(tm: TransferMatrix) -> float:
    """‖[M, U]‖ / ‖M‖."""
    U = shift_operator(tm.basis, tm.Q)
    return float(np.linalg.norm(tm.matrix @ U - U @ tm.matrix)) / max(tm.norm, 1e-300)


def commuting_family_residual(p: CurvePoint, q1: CurvePoint, q2: CurvePoint, basis: SectorBasis, Q: int = 0) -> float:
    """‖[T̂(q_1)T(q_1), T̂(q_2)T(q_2)]‖ / (‖·‖‖·‖), T̂ in the (x_q, y_q) order."""
    products = []
    for q in (q1, q2):
        products.append(build_That(Q, p, q, basis, ArgumentOrder.XY).matrix @ build_T(Q, p, q, basis).matrix)
    first, second = products
    scale = np.linalg.norm(first) * np.linalg.norm(second)
    return float(np.linalg.norm(first @ second - second @ first)) / max(scale, 1e-300)


# ==================== العناصر المغلقة - Closed forms ====================

def _row_formula(basis: SectorBasis, Q: int, p: CurvePoint, q: CurvePoint, top: bool) -> np.ndarray:
    """⟨n|𝒯_Q|Ω⟩ (top=False) or ⟨n|𝒯_Q|Ω̄⟩ (top=True) for every basis row n."""
    N, L = basis.N, basis.L
    omega = root_of_unity(N)
    sites = np.arange(1, L + 1)
    values = np.zeros(basis.dimension, dtype=complex)
    for a in range(N):
        if top:
            phases = omega ** ((a + sites[None, :] + basis.prefix) % N)
            factors = (p.mu / q.mu) ** (N - 1) * phases * (q.y ** N - p.x ** N) / (q.y - p.x * phases)
        else:
            phases = omega ** ((a + basis.prefix) % N)
            factors = phases * (p.y ** N - q.x ** N) / (p.y - q.x * phases)
        values += omega ** ((-Q * a) % N) * np.prod(factors, axis=1)
    return values * N ** (-L / 2)


def _relative_vector_error(values: np.ndarray, expected: np.ndarray) -> float:
    return float(np.max(np.abs(values - expected))) / max(float(np.max(np.abs(expected))), 1e-300)


def closed_form_checks(q: CurvePoint, p: CurvePoint, basis: SectorBasis, dd, Q: int = 0,
                       T: Optional[TransferMatrix] = None,
                       That: Optional[TransferMatrix] = None) -> Dict[str, float]:
    """
    Relative residuals of the ground-state rows and columns of 𝒯_Q and, for
    Q = 0, of 𝒯̂_0(y_q, x_q). For Q ≠ 0 the Ω̄↔Ω elements must vanish; those
    entries are reported as |element| / ‖𝒯‖.
    """
    N, L, r = basis.N, basis.L, dd.r
    omega = root_of_unity(N)
    T = T if T is not None else build_T(Q, p, q, basis)
    matrix = T.matrix
    lo, hi = basis.omega_index, basis.omegabar_index
    scale = N ** (1 - L / 2)
    phase = L * (L + 1) // 2
    results = {
        "omega_column": _relative_vector_error(matrix[:, lo], _row_formula(basis, Q, p, q, top=False)),
        "omegabar_column": _relative_vector_error(matrix[:, hi], _row_formula(basis, Q, p, q, top=True)),
    }
    if Q != 0:
        results["omegabar_omega_vanishing"] = abs(matrix[hi, lo]) / max(T.norm, 1e-300)
        results["omega_omegabar_vanishing"] = abs(matrix[lo, hi]) / max(T.norm, 1e-300)
        return results

    P = dd.polynomial
    top_gap = (p.y ** N - q.x ** N) ** r
    results["omega_diagonal"] = relative_error(matrix[lo, lo], scale * p.y ** (r * N) * P((q.x / p.y) ** N))
    results["omegabar_omega"] = relative_error(matrix[hi, lo], scale * omega ** ((-phase) % N) * top_gap)
    results["omega_omegabar"] = relative_error(matrix[lo, hi], scale * omega ** (phase % N) * top_gap)
    results["off_diagonal_symmetry"] = relative_error(matrix[hi, lo], matrix[lo, hi])
    results["omegabar_diagonal"] = relative_error(
        matrix[hi, hi], scale * (p.mu * q.y / q.mu) ** (r * N) * P((p.x / q.y) ** N))

    That = That if That is not None else build_That(0, p, q, basis, ArgumentOrder.YX)
    hat = That.matrix
    configs = configs_with_charge(N, L, N)
    charge_column, hat_row, hat_top_row = [], [], []
    zq = (q.x / p.y) ** N
    zhat = (q.y / p.x) ** N
    for conf in configs:
        row = basis.position(conf)
        top = basis.position(conf.complement())
        moment = conf.site_moment
        charge_column.append((matrix[row, lo], scale * omega ** ((-moment) % N) * p.y ** (r * N) * (1 - zq)
                     * g_poly(0, conf, GeneratingKind.FORWARD)(zq)))
        hat_row.append((hat[lo, row], scale * omega ** (moment % N) * p.x ** (r * N) * (1 - zhat)
                     * g_poly(0, conf, GeneratingKind.BAR)(zhat)))
        hat_top_row.append((hat[hi, top], scale * (p.y * q.mu / p.mu) ** (r * N) * (1 - zq)
                     * g_poly(0, conf, GeneratingKind.BAR)(zq)))
    for name, pairs in (("charge_n_column", charge_column), ("hat_charge_n_row", hat_row), ("hat_top_row", hat_top_row)):
        values, expected = (np.array(side) for side in zip(*pairs))
        results[name] = _relative_vector_error(values, expected)

    results["hat_omega_diagonal"] = relative_error(hat[lo, lo], scale * p.x ** (r * N) * P(zhat))
    results["hat_omegabar_diagonal"] = relative_error(hat[hi, hi], scale * (p.y * q.mu / p.mu) ** (r * N) * P(zq))
    return results


# ==================== التفريغ - Dumps ====================

def dump_matrix_csv(tm: TransferMatrix, path: Union[str, Path], kprime: Optional[complex] = None) -> Path:
    """CSV of (row, col, re, im) plus a `<name>.header.json` sidecar."""
    path = Path(path)
    rows, cols = np.indices(tm.matrix.shape)
    frame = pd.DataFrame({
        "row": rows.ravel(), "col": cols.ravel(),
        "re": tm.matrix.real.ravel(), "im": tm.matrix.imag.ravel(),
    })
    frame.to_csv(path, index=False, float_format="%.15e")
    header_path = path.with_suffix(".header.json")
    with open(header_path, "w", encoding="utf-8") as f:
        json.dump(tm.header(kprime), f, ensure_ascii=False, indent=2, sort_keys=True)
    return header_path


def test_transfer_matrices():
    from chiral_potts_curve import point_from_lambda, si_point
    from drinfeld_polynomial import build_drinfeld

    print("🏗️⚡ مصفوفات النقل")
    basis = enumerate_basis(3, 3)
    dd = build_drinfeld(3, 3, 0.3)
    p = si_point(0.3, 3)
    q = point_from_lambda(0.3, 1.3 + 0.4j, 3)
    T = build_T(0, p, q, basis)
    print(f"   basis size {basis.dimension}, ‖𝒯‖ = {T.norm:.6f}")
    print(f"   translation residual {translation_residual(T):.1e}")
    for name, value in closed_form_checks(q, p, basis, dd, T=T).items():
        print(f"   {'✅' if value < 1e-10 else '❌'} {name}: {value:.1e}")


if __name__ == "__main__":
    test_transfer_matrices()
