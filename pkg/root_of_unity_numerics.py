#!/usr/bin/env python3
"""
الحسابات العددية لجذور الوحدة - Root-of-Unity Numerics
أدوات التحقق من نموذج بوتس الشيرالي

🧮 جذور الوحدة والمضاريب والمعاملات الثنائية المشوهة بـ ω
📐 كثيرات حدود مركبة مع إيجاد الجذور وتلميعها
⚡ عكس مصفوفة فاندرموند عبر استيفاء لاغرانج
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial


# ==================== الأخطاء - Errors ====================

class ChiralPottsError(Exception):
    """Base class for every error raised by the toolkit."""


class ConfigurationError(ChiralPottsError, ValueError):
    """خطأ في الإعدادات - invalid model or run configuration."""


class DegenerateRootsError(ChiralPottsError, ValueError):
    """Coincident polynomial roots; Lagrange data undefined."""


class SingularPointError(ChiralPottsError, ZeroDivisionError):
    """A denominator of a weight, pole or closed form vanishes."""


class RootConvergenceError(ChiralPottsError, ArithmeticError):
    """Root polishing did not reach the residual target."""

    def __init__(self, message: str, residuals: Sequence[float]):
        super().__init__(message)
        self.residuals = list(residuals)


class UnsupportedPatternError(ChiralPottsError, NotImplementedError):
    """A spin pattern whose eigenvector cannot be written down explicitly."""


# ==================== الدقة - Precision ====================

class CalculationPrecision(Enum):
    """دقة الحسابات"""
    MEDIUM = "medium"
    HIGH = "high"
    ULTRA_HIGH = "ultra_high"


# معاملات الدقة
PRECISION_SETTINGS: Dict[CalculationPrecision, Dict[str, float]] = {
    CalculationPrecision.MEDIUM: {"tol_root": 1e-10, "tol_linalg": 1e-7, "tol_spec": 1e-5, "max_iter": 20},
    CalculationPrecision.HIGH: {"tol_root": 1e-12, "tol_linalg": 1e-9, "tol_spec": 1e-6, "max_iter": 50},
    CalculationPrecision.ULTRA_HIGH: {"tol_root": 1e-13, "tol_linalg": 1e-10, "tol_spec": 1e-7, "max_iter": 100},
}

DEFAULT_PRECISION = CalculationPrecision.HIGH

# relative distance below which two roots count as coincident
PAIRING_TOLERANCE = 1e-8


# ==================== جذور الوحدة - Roots of unity ====================

def root_of_unity(N: int) -> complex:
    """ω = exp(2πi/N), the primitive root with the smallest positive argument."""
    if not isinstance(N, (int, np.integer)) or N < 2:
        raise ConfigurationError(f"N must be an integer >= 2, got {N!r}")
    return cmath.exp(2j * math.pi / N)


def omega_power(N: int, exponent: int) -> complex:
    """ω^exponent with the exponent reduced mod N first."""
    return root_of_unity(N) ** (int(exponent) % N)


def omega_number(m: int, N: int) -> complex:
    """[m] = (1 − ω^m)/(1 − ω)."""
    omega = root_of_unity(N)
    return (1 - omega ** m) / (1 - omega)


def omega_factorial(n: int, N: int) -> complex:
    """[n]! = [1][2]...[n] for 0 <= n <= N−1."""
    if n < 0 or n >= N:
        raise ConfigurationError(f"ω-factorial needs 0 <= n <= N−1, got n={n}, N={N}")
    value = complex(1.0)
    for m in range(1, n + 1):
        value *= omega_number(m, N)
    return value


def gauss_binomial(n_upper: int, n_lower: int, N: int) -> complex:
    """
    المعامل الثنائي المشوه - the ω-binomial [n_upper over n_lower].

    Evaluated through the product form so that n_upper may run up to
    2(N−1). An empty coefficient (n_lower < 0 or n_lower > n_upper) is 0.
    """
    if n_lower < 0 or n_lower > n_upper:
        return 0j
    if n_lower >= N:
        raise ConfigurationError(f"ω-binomial lower index must stay below N={N}, got {n_lower}")
    omega = root_of_unity(N)
    value = complex(1.0)
    for i in range(1, n_lower + 1):
        value *= (1 - omega ** (n_upper - n_lower + i)) / (1 - omega ** i)
    return value


def binomial_reflection_residual(N: int) -> float:
    """
    Max deviation of [N−1−n over ν] = (−1)^ν ω^{−nν−ν(ν+1)/2} [ν+n over ν]
    over all n, ν >= 0 with n + ν <= N−1.
    """
    worst = 0.0
    for n in range(N):
        for nu in range(N - n):
            lhs = gauss_binomial(N - 1 - n, nu, N)
            rhs = (-1) ** nu * omega_power(N, -n * nu - nu * (nu + 1) // 2) * gauss_binomial(nu + n, nu, N)
            worst = max(worst, abs(lhs - rhs))
    return worst


# ==================== كثيرات الحدود - Polynomials ====================

class CPolynomial(Polynomial):
    """
    كثيرة حدود مركبة - complex polynomial, ascending coefficients.

    A thin subclass of numpy's Polynomial so arithmetic, evaluation and
    trimming come from numpy; results of arithmetic stay CPolynomial.
    """

    def __init__(self, coef, domain=None, window=None, symbol="z"):
        super().__init__(np.asarray(coef, dtype=complex), domain=domain, window=window, symbol=symbol)

    @property
    def coefficients(self) -> np.ndarray:
        return self.coef

    @property
    def leading(self) -> complex:
        return complex(self.trim().coef[-1])

    def horner(self, z: complex) -> complex:
        value = 0j
        for c in self.coef[::-1]:
            value = value * z + c
        return value

    def padded(self, length: int) -> np.ndarray:
        """Coefficient array zero-padded (or checked) to a fixed length."""
        coef = self.coef
        if len(coef) > length and np.any(coef[length:] != 0):
            raise ConfigurationError(f"polynomial of degree {len(coef) - 1} does not fit {length} coefficients")
        out = np.zeros(length, dtype=complex)
        out[:min(length, len(coef))] = coef[:length]
        return out

    @classmethod
    def from_roots(cls, roots: Sequence[complex], scale: complex = 1.0) -> "CPolynomial":
        if len(roots) == 0:
            return cls([scale])
        return cls(scale * np.polynomial.polynomial.polyfromroots(np.asarray(roots, dtype=complex)))


def _root_sort_key(z: complex) -> Tuple[float, float]:
    return (round(abs(z), 10), round(cmath.phase(z), 10))


def poly_roots(p: CPolynomial, tol_root: float = 1e-12, max_iter: int = 50,
               pairing_tol: float = PAIRING_TOLERANCE) -> List[complex]:
    """
    Roots from the companion-matrix eigenvalues, each polished by Newton
    steps (at least two). Sorted by modulus, then argument.
    """
    p = CPolynomial(p.coef).trim()
    degree = p.degree()
    if degree < 1:
        raise ConfigurationError("poly_roots needs a polynomial of degree >= 1")

    derivative = p.deriv()
    scale = float(np.max(np.abs(p.coef)))
    roots = []
    for z in np.polynomial.polynomial.polyroots(p.coef):
        z = complex(z)
        for step in range(max_iter):
            slope = derivative(z)
            if slope == 0:
                break
            delta = p(z) / slope
            z -= delta
            if step >= 1 and abs(delta) <= 1e-16 * max(1.0, abs(z)):
                break
        roots.append(z)

    residuals = [abs(p(z)) / (scale * max(1.0, abs(z)) ** degree) for z in roots]
    if max(residuals) > tol_root:
        raise RootConvergenceError(
            f"root polish stalled: max scaled residual {max(residuals):.3e} > {tol_root:.1e}", residuals)

    for i in range(degree):
        for j in range(i + 1, degree):
            if abs(roots[i] - roots[j]) <= pairing_tol * max(1.0, abs(roots[i])):
                raise DegenerateRootsError(f"roots {roots[i]:.6g} and {roots[j]:.6g} coincide")

    return sorted(roots, key=_root_sort_key)


# ==================== مصفوفة بيتا - Lagrange / Vandermonde ====================

@dataclass(frozen=True)
class BetaMatrix:
    """
    β_{j,n}: coefficient of z^n in f_j(z) = ∏_{ℓ≠j}(z − z_ℓ)/(z_j − z_ℓ).

    `entries[j, n]` with 0-based mode j and power n; the matrix is the
    inverse of the Vandermonde matrix V[k, n] = z_k^n.
    """
    entries: np.ndarray
    roots: Tuple[complex, ...]

    @property
    def r(self) -> int:
        return len(self.roots)

    def f(self, j: int, z: complex) -> complex:
        return complex(np.polynomial.polynomial.polyval(z, self.entries[j]))

    def vandermonde(self) -> np.ndarray:
        return np.vander(np.asarray(self.roots), self.r, increasing=True)

    def residuals(self) -> Dict[str, float]:
        """Both orthogonality relations: Σ_n β_{j,n} z_k^n = δ and Σ_k z_k^n β_{k,m} = δ."""
        V = self.vandermonde()
        identity = np.eye(self.r)
        return {
            "f_j(z_k)": float(np.max(np.abs(self.entries @ V.T - identity))),
            "sum_k": float(np.max(np.abs(V.T @ self.entries - identity))),
        }


def lagrange_beta(roots: Sequence[complex], pairing_tol: float = PAIRING_TOLERANCE) -> BetaMatrix:
    roots = tuple(complex(z) for z in roots)
    r = len(roots)
    if r == 0:
        raise ConfigurationError("lagrange_beta needs at least one root")

    entries = np.zeros((r, r), dtype=complex)
    for j in range(r):
        others = [roots[l] for l in range(r) if l != j]
        weight = complex(1.0)
        for z in others:
            gap = roots[j] - z
            if abs(gap) <= pairing_tol * max(1.0, abs(roots[j])):
                raise DegenerateRootsError(f"roots {roots[j]:.6g} and {z:.6g} coincide; β undefined")
            weight *= gap
        entries[j] = CPolynomial.from_roots(others, 1.0 / weight).padded(r)
    return BetaMatrix(entries=entries, roots=roots)


def power_sums(roots: Sequence[complex], n_max: int) -> np.ndarray:
    """d_n = −Σ_j z_j^{−n} for n = 0..n_max (d_0 = −r)."""
    z = np.asarray(roots, dtype=complex)
    return np.array([-np.sum(z ** (-n)) for n in range(n_max + 1)])


def newton_identity_check(lambdas: Sequence[Union[int, complex]], roots: Sequence[complex]) -> Dict[str, object]:
    """n Λ_n = Σ_{j=1}^n d_j Λ_{n−j} for n = 1..r."""
    lam = np.asarray([complex(c) for c in lambdas])
    r = len(lam) - 1
    d = power_sums(roots, r)
    residuals = []
    for n in range(1, r + 1):
        rhs = sum(d[j] * lam[n - j] for j in range(1, n + 1))
        residuals.append(abs(n * lam[n] - rhs))
    return {
        "power_sums": d[1:],
        "residuals": residuals,
        "max_residual": max(residuals) if residuals else 0.0,
        "scale": float(np.max(np.abs(lam))),
    }


def relative_error(value: complex, reference: complex, floor: float = 1e-300) -> float:
    return abs(value - reference) / max(abs(reference), floor)


def matrix_residual(lhs: np.ndarray, rhs: np.ndarray, scale: Optional[float] = None) -> float:
    """max |lhs − rhs| divided by the operand magnitude (or an explicit scale)."""
    if scale is None:
        scale = max(float(np.max(np.abs(lhs))), float(np.max(np.abs(rhs))), 1e-300)
    return float(np.max(np.abs(np.asarray(lhs) - np.asarray(rhs)))) / scale


def test_root_of_unity_numerics():
    """عرض سريع - quick demonstration."""
    print("🧮⚡ الحسابات العددية لجذور الوحدة")
    print(f"   ω(3) = {root_of_unity(3):.6f}")
    print(f"   [2 over 1] (N=3) = {gauss_binomial(2, 1, 3):.6f}")
    roots = poly_roots(CPolynomial([1, 7, 1]))
    print(f"   roots of 1+7z+z² = {[f'{z.real:.6f}' for z in roots]}")
    beta = lagrange_beta(roots)
    print(f"   Vandermonde residuals: {beta.residuals()}")
    print(f"   Newton identities: {newton_identity_check([1, 7, 1], roots)['max_residual']:.2e}")


if __name__ == "__main__":
    test_root_of_unity_numerics()
