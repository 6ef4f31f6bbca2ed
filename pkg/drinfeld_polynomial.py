#!/usr/bin/env python3
"""
كثيرة حدود درينفيلد - Drinfeld Polynomial
أدوات التحقق من نموذج بوتس الشيرالي

🌟 المعاملات الصحيحة Λ_n والجذور z_j وإقرانها z_{m*} = 1/z_m
📐 مصفوفة بيتا ومعاملات S_n والزوايا θ_j والثابت ρ
⚡ القيم الذاتية التحليلية 𝒢(λ_q, ξ) = ∏(A_j − ξ_j B_j) والعلاقة الدالية
"""

import cmath
import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from root_of_unity_numerics import (
    BetaMatrix, CPolynomial, ConfigurationError, DegenerateRootsError,
    PAIRING_TOLERANCE, lagrange_beta, newton_identity_check, poly_roots,
    power_sums, relative_error, root_of_unity,
)
from chiral_potts_curve import CurvePoint, point_from_lambda


# ==================== أنماط السبين - Spin patterns ====================

@dataclass(frozen=True)
class SpinPattern:
    """
    نمط السبين - ξ ∈ {±1}^r.

    Index convention: mode 1 is the most significant bit and a 0 bit means
    ξ = +1, so index 0 is all-plus (|Ω̄⟩) and index 2^r − 1 is all-minus (|Ω⟩).
    """
    xi: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(int(v) for v in self.xi))
        if any(v not in (1, -1) for v in self.xi):
            raise ConfigurationError(f"spin pattern entries must be ±1, got {self.xi}")

    @property
    def r(self) -> int:
        return len(self.xi)

    @classmethod
    def all_minus(cls, r: int) -> "SpinPattern":
        return cls((-1,) * r)

    @classmethod
    def all_plus(cls, r: int) -> "SpinPattern":
        return cls((1,) * r)

    @classmethod
    def from_index(cls, index: int, r: int) -> "SpinPattern":
        if not 0 <= index < 2 ** r:
            raise ConfigurationError(f"pattern index {index} outside [0, {2 ** r})")
        bits = [(index >> (r - 1 - j)) & 1 for j in range(r)]
        return cls(tuple(1 if b == 0 else -1 for b in bits))

    @property
    def index(self) -> int:
        value = 0
        for v in self.xi:
            value = 2 * value + (0 if v == 1 else 1)
        return value

    @property
    def plus_modes(self) -> Tuple[int, ...]:
        """J = {j : ξ_j = +1}, 0-based."""
        return tuple(j for j, v in enumerate(self.xi) if v == 1)

    @property
    def minus_modes(self) -> Tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.xi) if v == -1)

    def flipped(self, mode: int) -> "SpinPattern":
        xi = list(self.xi)
        xi[mode] = -xi[mode]
        return SpinPattern(tuple(xi))

    def label(self) -> str:
        return "".join("+" if v == 1 else "-" for v in self.xi)


def all_patterns(r: int) -> List[SpinPattern]:
    return [SpinPattern.from_index(i, r) for i in range(2 ** r)]


# ==================== كثيرة الحدود - The polynomial ====================

def drinfeld_coefficients(N: int, L: int) -> List[int]:
    """Λ_ℓ = coefficient of t^{ℓN} in (1 + t + ... + t^{N−1})^L, exact integers."""
    if N < 2 or L < 1 or L % N != 0:
        raise ConfigurationError(f"need N >= 2 and L a positive multiple of N, got N={N}, L={L}")
    series = [1]
    for _ in range(L):
        grown = [0] * (len(series) + N - 1)
        for i, c in enumerate(series):
            for shift in range(N):
                grown[i + shift] += c
        series = grown
    r = L * (N - 1) // N
    return [series[l * N] for l in range(r + 1)]


def compute_P(N: int, L: int) -> CPolynomial:
    return CPolynomial(drinfeld_coefficients(N, L))


@dataclass(frozen=True, eq=False)
class DrinfeldData:
    """
    بيانات درينفيلد - everything derived from P(z) at a given (k′, λ_p).

    Mode indices are 0-based throughout; pairing[m] is the index with
    z_{pairing[m]} = 1/z_m.
    """
    N: int
    L: int
    kprime: complex
    lambda_p: complex
    p: CurvePoint
    lambdas: Tuple[int, ...]
    polynomial: CPolynomial
    roots: np.ndarray
    pairing: Tuple[int, ...]
    self_paired: Tuple[int, ...]
    beta: BetaMatrix
    S: np.ndarray
    theta: np.ndarray
    rho: complex
    d: np.ndarray

    @property
    def r(self) -> int:
        return len(self.roots)

    @property
    def omega(self) -> complex:
        return root_of_unity(self.N)

    @property
    def k(self) -> complex:
        return cmath.sqrt(1 - self.kprime ** 2)

    @property
    def tpN(self) -> complex:
        return self.p.t ** self.N

    def summary(self) -> Dict[str, object]:
        return {
            "lambdas": list(self.lambdas),
            "roots": list(self.roots),
            "pairing": list(self.pairing),
            "self_paired": list(self.self_paired),
            "theta": list(self.theta),
            "rho": self.rho,
        }


def _pair_roots(roots: np.ndarray, pairing_tol: float) -> Tuple[Tuple[int, ...], float]:
    r = len(roots)
    pairing = []
    worst = 0.0
    for m in range(r):
        gaps = np.abs(roots[m] * roots - 1)
        partner = int(np.argmin(gaps))
        pairing.append(partner)
        worst = max(worst, float(gaps[partner]))
    for m, partner in enumerate(pairing):
        if pairing[partner] != m:
            raise DegenerateRootsError(f"root pairing is not an involution at mode {m + 1}")
    if worst > max(pairing_tol, 1e-8):
        raise DegenerateRootsError(f"roots are not closed under z → 1/z (residual {worst:.2e})")
    return tuple(pairing), worst


def canonical_theta(cosh_2theta: complex) -> complex:
    """
    θ = ±arccosh(cosh 2θ)/2 with Re θ >= 0, so Im θ stays in [−π/2, π/2].
    Only a purely imaginary θ is shifted by iπ into [0, π); for Re θ > 0 that
    shift would flip the signs of cosh θ and sinh θ together.
    """
    theta = cmath.acosh(cosh_2theta) / 2
    if theta.real < 0 or (theta.real == 0 and theta.imag < 0):
        theta = -theta
    if theta.real == 0:
        while theta.imag < 0:
            theta += 1j * math.pi
        while theta.imag >= math.pi:
            theta -= 1j * math.pi
    return theta


def build_drinfeld(N: int, L: int, kprime: complex, lambda_p: complex = 1.0,
                   tol_root: float = 1e-12, pairing_tol: float = PAIRING_TOLERANCE) -> DrinfeldData:
    kprime = complex(kprime)
    lambdas = drinfeld_coefficients(N, L)
    polynomial = CPolynomial(lambdas)
    roots = np.array(poly_roots(polynomial, tol_root=tol_root, pairing_tol=pairing_tol))
    pairing, _ = _pair_roots(roots, pairing_tol)
    self_paired = tuple(m for m, partner in enumerate(pairing) if partner == m)
    beta = lagrange_beta(roots, pairing_tol=pairing_tol)
    r = len(roots)

    S = np.array([np.sum(roots ** (-n) * beta.entries[:, 0]) for n in range(r)])

    p = point_from_lambda(kprime, lambda_p, N)
    k = cmath.sqrt(1 - kprime ** 2)
    tpN = p.t ** N
    theta = np.array([canonical_theta((kprime + 1 / kprime - k ** 2 * tpN * z / kprime) / 2) for z in roots])
    rho = N ** (1.0 / (2 * r)) * cmath.sqrt(kprime / k ** 2)

    return DrinfeldData(
        N=N, L=L, kprime=kprime, lambda_p=complex(lambda_p), p=p,
        lambdas=tuple(lambdas), polynomial=polynomial, roots=roots,
        pairing=pairing, self_paired=self_paired, beta=beta, S=S,
        theta=theta, rho=rho, d=power_sums(roots, r),
    )


# ==================== القيم الذاتية - Eigenvalues ====================

def ab_values(j: int, lam_q: complex, dd: DrinfeldData) -> Tuple[complex, complex]:
    """A_j = ρ cosh θ_j (1 − λ_q^{−1}), B_j = ρ sinh θ_j (1 + λ_q^{−1})."""
    if lam_q == 0:
        raise ConfigurationError("λ_q must be nonzero")
    theta = dd.theta[j]
    inverse = 1 / complex(lam_q)
    return dd.rho * cmath.cosh(theta) * (1 - inverse), dd.rho * cmath.sinh(theta) * (1 + inverse)


def _pattern_signs(pattern: Union[SpinPattern, Sequence[int]]) -> Tuple[int, ...]:
    return pattern.xi if isinstance(pattern, SpinPattern) else tuple(pattern)


def analytic_eigenvalue(pattern: Union[SpinPattern, Sequence[int]], lam_q: complex, dd: DrinfeldData) -> complex:
    """𝒢(λ_q, ξ) = ∏_j (A_j − ξ_j B_j)."""
    xi = _pattern_signs(pattern)
    if len(xi) != dd.r:
        raise ConfigurationError(f"pattern length {len(xi)} differs from r = {dd.r}")
    value = complex(1.0)
    for j, sign in enumerate(xi):
        A, B = ab_values(j, lam_q, dd)
        value *= A - sign * B
    return value


def eigenvalue_table(lam_q: complex, dd: DrinfeldData) -> Dict[int, complex]:
    return {pattern.index: analytic_eigenvalue(pattern, lam_q, dd) for pattern in all_patterns(dd.r)}


def ab_determinant_residual(j: int, q: CurvePoint, dd: DrinfeldData) -> float:
    """A_j² − B_j² against ρ²k²(t_p^N z_j − t_q^N)/(k′λ_q)."""
    A, B = ab_values(j, q.lam, dd)
    expected = dd.rho ** 2 * dd.k ** 2 * (dd.tpN * dd.roots[j] - q.t ** dd.N) / (dd.kprime * q.lam)
    return relative_error(A ** 2 - B ** 2, expected)


def functional_check(lam_q: complex, dd: DrinfeldData, p: CurvePoint, q: CurvePoint) -> Dict[str, float]:
    """
    𝒢(λ)𝒢(1/λ) = t_p^{rN} N ∏_j((t_q/t_p)^N − z_j), its θ form
    N(k′/k²)^r ∏ e^{∓2θ}(e^{±2θ} − 1/λ)(e^{±2θ} − λ), and the pattern
    independence of the product.
    """
    N, r = dd.N, dd.r
    tpN, tqN = p.t ** N, q.t ** N
    rhs = tpN ** r * N * np.prod(tqN / tpN - dd.roots)

    products = [analytic_eigenvalue(pattern, lam_q, dd) * analytic_eigenvalue(pattern, 1 / lam_q, dd)
                for pattern in all_patterns(r)]
    lhs = products[-1]
    spread = max(relative_error(value, lhs) for value in products)

    theta_forms = []
    for sign in (1, -1):
        value = N * (dd.kprime / dd.k ** 2) ** r
        for theta in dd.theta:
            e = cmath.exp(2 * sign * theta)
            value *= (e - 1 / lam_q) * (e - lam_q) / e
        theta_forms.append(relative_error(value, rhs))

    return {
        "relation": relative_error(lhs, rhs),
        "pattern_spread": spread,
        "theta_form_upper": theta_forms[0],
        "theta_form_lower": theta_forms[1],
    }


# ==================== فحوص الجذور - Root checks ====================

def root_structure_check(dd: DrinfeldData) -> Dict[str, float]:
    lam = dd.lambdas
    symmetric = max(abs(lam[n] - lam[dd.r - n]) for n in range(dd.r + 1))
    pairing = max(abs(dd.roots[m] * dd.roots[dd.pairing[m]] - 1) for m in range(dd.r))
    return {
        "lambda_symmetry": float(symmetric),
        "lambda_ends": float(abs(lam[0] - 1) + abs(lam[-1] - 1)),
        "root_product": float(abs(np.prod(-dd.roots) - 1)),
        "pairing": float(pairing),
    }


def newton_check(dd: DrinfeldData) -> Dict[str, object]:
    report = newton_identity_check(dd.lambdas, dd.roots)
    report["relative"] = report["max_residual"] / report["scale"]
    return report


def s_coefficient_check(dd: DrinfeldData) -> Dict[str, float]:
    """S_n against the power-series inverse of P, and S_n = 0 for 1−r < n < 0."""
    lam = np.array(dd.lambdas, dtype=complex)
    series = np.zeros(dd.r, dtype=complex)
    for m in range(dd.r):
        series[m] = (1.0 if m == 0 else 0.0) - np.dot(lam[1:m + 1], series[m - 1::-1][:m])
    negative = [abs(np.sum(dd.roots ** n * dd.beta.entries[:, 0])) for n in range(1, dd.r - 1)]
    return {
        "series_inverse": float(np.max(np.abs(series - dd.S))),
        "negative_range": float(max(negative, default=0.0)),
        "S0": float(abs(dd.S[0] - 1)),
    }


def power_sum_ladder_check(dd: DrinfeldData) -> float:
    """max |Σ_n β_{m*,n} d_{n+k} + z_m^{−k}| for 0 <= k <= r−1 (d_0 = −r)."""
    r = dd.r
    d = power_sums(dd.roots, 2 * r - 2)
    worst = 0.0
    for m in range(r):
        row = dd.beta.entries[dd.pairing[m]]
        for k in range(r):
            value = np.dot(row, d[k:k + r])
            worst = max(worst, abs(value + dd.roots[m] ** (-k)))
    return worst


def theta_check(dd: DrinfeldData) -> Dict[str, float]:
    """2cosh2θ_j against its defining value, ρ² = N^{1/r}k′/k², Re θ_j >= 0."""
    expected = dd.kprime + 1 / dd.kprime - dd.k ** 2 * dd.tpN * dd.roots / dd.kprime
    return {
        "cosh": float(np.max(np.abs(2 * np.cosh(2 * dd.theta) - expected))),
        "rho": relative_error(dd.rho ** 2, dd.N ** (1 / dd.r) * dd.kprime / dd.k ** 2),
        "branch": float(max(0.0, -float(np.min(dd.theta.real)))),
    }


def generating_route_check(N: int, L: int) -> float:
    """compute_P against G_0 and Ḡ_0 of the all-zero configuration."""
    from generating_functions import EdgeConfig, GeneratingKind, g_poly

    zeros = EdgeConfig((0,) * L, N)
    target = np.array(drinfeld_coefficients(N, L), dtype=complex)
    worst = 0.0
    for kind in GeneratingKind:
        coef = g_poly(0, zeros, kind).padded(len(target))
        worst = max(worst, float(np.max(np.abs(coef - target))))
    return worst


def test_drinfeld_polynomial():
    print("🌟⚡ كثيرة حدود درينفيلد")
    for N, L in ((3, 3), (4, 4), (3, 6)):
        print(f"   (N, L) = ({N}, {L}): Λ = {drinfeld_coefficients(N, L)}")
    dd = build_drinfeld(3, 3, 0.3)
    print(f"   roots = {[f'{z.real:.6f}' for z in dd.roots]}, θ = {[f'{t.real:.6f}' for t in dd.theta]}")
    print(f"   Newton identities: {newton_check(dd)['relative']:.1e}")


if __name__ == "__main__":
    test_drinfeld_polynomial()
