#!/usr/bin/env python3
"""
منحنى بوتس الشيرالي - Chiral Potts Curve
أدوات التحقق من نموذج بوتس الشيرالي

📐 نقاط السرعة (x, y, μ) على المنحنى من (k′, λ)
⚙️ إعدادات النموذج والتسامحات
🎲 أخذ عينات عشوائية محددة البذرة لنقاط q
"""

import cmath
import math
from dataclasses import dataclass, replace
from typing import Dict, List, Optional

import numpy as np

from root_of_unity_numerics import (
    PRECISION_SETTINGS, DEFAULT_PRECISION, CalculationPrecision,
    ConfigurationError, SingularPointError, root_of_unity,
)

SINGULAR_TOLERANCE = 1e-12


@dataclass
class ModelConfig:
    """
    إعدادات النموذج - global model and run configuration.

    N states, chain length L (a multiple of N), charge sector Q, modulus k′
    and vertical rapidity λ_p, plus the tolerances and sampling controls of
    a verification run.
    """
    N: int
    L: int
    Q: int = 0
    kprime: complex = 0.3
    lambda_p: complex = 1.0
    tol_root: float = PRECISION_SETTINGS[DEFAULT_PRECISION]["tol_root"]
    tol_linalg: float = PRECISION_SETTINGS[DEFAULT_PRECISION]["tol_linalg"]
    tol_spec: float = PRECISION_SETTINGS[DEFAULT_PRECISION]["tol_spec"]
    seed: int = 0
    samples: int = 5
    workers: int = 1
    size_cap: int = 100000

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 2:
            raise ConfigurationError(f"N must be an integer >= 2, got {self.N!r}")
        if not isinstance(self.L, int) or self.L < 1:
            raise ConfigurationError(f"L must be a positive integer, got {self.L!r}")
        if self.L % self.N != 0:
            raise ConfigurationError(f"L={self.L} is not a multiple of N={self.N}")
        if not 0 <= self.Q < self.N:
            raise ConfigurationError(f"Q must lie in [0, N), got {self.Q}")
        self.kprime = complex(self.kprime)
        self.lambda_p = complex(self.lambda_p)
        if abs(self.kprime) < SINGULAR_TOLERANCE or abs(1 - self.kprime ** 2) < SINGULAR_TOLERANCE:
            raise ConfigurationError(f"k′ = {self.kprime} gives k = 0 or k′ = 0")
        if abs(self.lambda_p) < SINGULAR_TOLERANCE:
            raise ConfigurationError("λ_p must be nonzero")
        if self.samples < 1 or self.workers < 1:
            raise ConfigurationError("samples and workers must be positive")
        if self.dimension > self.size_cap:
            raise ConfigurationError(
                f"state space N^(L−1) = {self.dimension} exceeds the size cap {self.size_cap}")
        for name in ("tol_root", "tol_linalg", "tol_spec"):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"{name} must be positive")

    @classmethod
    def from_precision(cls, N: int, L: int, precision: CalculationPrecision = DEFAULT_PRECISION,
                       **overrides) -> "ModelConfig":
        settings = PRECISION_SETTINGS[precision]
        values = {name: settings[name] for name in ("tol_root", "tol_linalg", "tol_spec")}
        values.update({name: value for name, value in overrides.items() if value is not None})
        return cls(N=N, L=L, **values)

    @property
    def k(self) -> complex:
        return cmath.sqrt(1 - self.kprime ** 2)

    @property
    def r(self) -> int:
        return self.L * (self.N - 1) // self.N

    @property
    def omega(self) -> complex:
        return root_of_unity(self.N)

    @property
    def dimension(self) -> int:
        return self.N ** (self.L - 1)

    def as_dict(self) -> Dict[str, object]:
        return {
            "N": self.N, "L": self.L, "Q": self.Q, "r": self.r,
            "kprime": self.kprime, "lambda_p": self.lambda_p,
            "tol_root": self.tol_root, "tol_linalg": self.tol_linalg, "tol_spec": self.tol_spec,
            "samples": self.samples, "seed": self.seed,
        }


@dataclass(frozen=True)
class CurvePoint:
    """نقطة سرعة - rapidity (x, y, μ) with λ = μ^N and t = xy."""
    x: complex
    y: complex
    mu: complex
    N: int

    @property
    def lam(self) -> complex:
        return self.mu ** self.N

    @property
    def t(self) -> complex:
        return self.x * self.y

    def curve_residuals(self, kprime: complex) -> Dict[str, float]:
        k = cmath.sqrt(1 - kprime ** 2)
        lam = self.lam
        return {
            "x": abs(k * self.x ** self.N - (1 - kprime / lam)),
            "y": abs(k * self.y ** self.N - (1 - kprime * lam)),
            "t": abs(k ** 2 * self.t ** self.N - (1 + kprime ** 2 - kprime * (lam + 1 / lam))),
        }

    def max_curve_residual(self, kprime: complex) -> float:
        return max(self.curve_residuals(kprime).values())


def _principal_root(value: complex, N: int) -> complex:
    return complex(value) ** (1.0 / N) if value != 0 else 0j


def point_from_lambda(kprime: complex, lam: complex, N: int) -> CurvePoint:
    kprime = complex(kprime)
    lam = complex(lam)
    if abs(lam) < SINGULAR_TOLERANCE:
        raise SingularPointError("λ = 0 is not a point of the curve")
    if abs(1 - kprime ** 2) < SINGULAR_TOLERANCE:
        raise ConfigurationError(f"k′ = {kprime} gives k = 0")
    if abs(1 - kprime * lam) < SINGULAR_TOLERANCE:
        raise SingularPointError(f"1 − k′λ vanishes at λ = {lam}")
    if abs(1 - kprime / lam) < SINGULAR_TOLERANCE:
        raise SingularPointError(f"1 − k′/λ vanishes at λ = {lam}")
    k = cmath.sqrt(1 - kprime ** 2)
    return CurvePoint(
        x=_principal_root((1 - kprime / lam) / k, N),
        y=_principal_root((1 - kprime * lam) / k, N),
        mu=_principal_root(lam, N),
        N=N,
    )


def si_point(kprime: complex, N: int) -> CurvePoint:
    """The superintegrable vertical rapidity: λ_p = μ_p = 1, x_p = y_p."""
    kprime = complex(kprime)
    if abs(kprime) < SINGULAR_TOLERANCE or abs(1 - kprime ** 2) < SINGULAR_TOLERANCE:
        raise ConfigurationError(f"k′ must avoid 0 and ±1, got {kprime}")
    k = cmath.sqrt(1 - kprime ** 2)
    xp = _principal_root((1 - kprime) / k, N)
    return CurvePoint(x=xp, y=xp, mu=1.0 + 0j, N=N)


def conjugate_point(q: CurvePoint) -> CurvePoint:
    """q′ = (y_q, x_q, 1/μ_q): the curve point with λ → 1/λ."""
    return CurvePoint(x=q.y, y=q.x, mu=1 / q.mu, N=q.N)


def weight_periodicity_check(p: CurvePoint, q: CurvePoint, N: int) -> Dict[str, float]:
    """|W(N)/W(0) − 1| and |W̄(N)/W̄(0) − 1|; both vanish on the curve."""
    from transfer_matrices import weight_W, weight_Wbar

    return {
        "W": abs(weight_W(p, q, N) / weight_W(p, q, 0) - 1),
        "Wbar": abs(weight_Wbar(p, q, N) / weight_Wbar(p, q, 0) - 1),
    }


def is_generic_q(q: CurvePoint, p: CurvePoint, kprime: complex, margin: float = 1e-3) -> bool:
    """Keep q away from every singular denominator used by the matrix builders."""
    N = q.N
    omega = root_of_unity(N)
    lam = q.lam
    if min(abs(lam), abs(lam - kprime), abs(lam - 1 / kprime), abs(lam - 1), abs(lam + 1)) < margin:
        return False
    for a in range(N):
        w = omega ** a
        if min(abs(p.y - q.x * w), abs(q.y - p.x * w), abs(p.x - q.y * w), abs(p.x - q.x * w)) < margin:
            return False
    if abs(q.x ** N - p.y ** N) < margin or abs(q.x ** N - p.x ** N) < margin:
        return False
    return abs(q.y ** N - p.x ** N) >= margin and abs(q.y ** N - p.y ** N) >= margin


def sample_q_points(config: ModelConfig, p: CurvePoint, count: Optional[int] = None,
                    seed: Optional[int] = None) -> List[CurvePoint]:
    """
    Seeded q samples with λ_q log-uniform in the annulus 0.5 <= |λ_q| <= 2
    and uniform in argument, rejecting non-generic points.
    """
    rng = np.random.default_rng(config.seed if seed is None else seed)
    count = config.samples if count is None else count
    points: List[CurvePoint] = []
    while len(points) < count:
        radius = math.exp(rng.uniform(math.log(0.5), math.log(2.0)))
        angle = rng.uniform(-math.pi, math.pi)
        lam = cmath.rect(radius, angle)
        try:
            q = point_from_lambda(config.kprime, lam, config.N)
        except SingularPointError:
            continue
        if is_generic_q(q, p, config.kprime):
            points.append(q)
    return points


def perturbed_point(q: CurvePoint, dy: complex) -> CurvePoint:
    """Deliberately off-curve copy of q (y shifted by dy)."""
    return replace(q, y=q.y + dy)


def test_chiral_potts_curve():
    config = ModelConfig(N=3, L=3, kprime=0.3)
    p = si_point(config.kprime, config.N)
    print("📐⚡ منحنى بوتس الشيرالي")
    print(f"   k = {config.k.real:.6f}, x_p^N = {(p.x ** 3).real:.6f}")
    for q in sample_q_points(config, p, count=3):
        print(f"   λ_q = {q.lam:.4f}: curve residual {q.max_curve_residual(config.kprime):.1e}, "
              f"periodicity {weight_periodicity_check(p, q, config.N)}")


if __name__ == "__main__":
    test_chiral_potts_curve()
