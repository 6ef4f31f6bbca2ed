#!/usr/bin/env python3
"""
الدوال المولدة - Generating Functions
أدوات التحقق من نموذج بوتس الشيرالي

🔢 المعاملات K_m و K̄_m كمجاميع مقيدة على تراكيب الحواف
📈 الدالة المولدة g وكثيرات الحدود G_Q و Ḡ_Q
🧮 كثيرات حدود غرام h_k و h̄_k ومتطابقاتها
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import TYPE_CHECKING, Dict, List, Tuple

import numpy as np

from root_of_unity_numerics import (
    ConfigurationError, CPolynomial, SingularPointError,
    gauss_binomial, root_of_unity,
)

if TYPE_CHECKING:
    from drinfeld_polynomial import DrinfeldData

POLE_TOLERANCE = 1e-12


class GeneratingKind(Enum):
    """نوع الدالة المولدة: prefix phases (forward) or suffix phases (bar)."""
    FORWARD = "forward"
    BAR = "bar"


@dataclass(frozen=True)
class EdgeConfig:
    """
    تركيب الحواف - edge variables n_1..n_L with 0 <= n_j <= N−1.

    prefix[j] = N_j = Σ_{ℓ<j} n_ℓ and suffix[j] = N̄_j = Σ_{ℓ>j} n_ℓ,
    both 0-based in j.
    """
    n: Tuple[int, ...]
    N: int

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(v) for v in self.n))
        if any(v < 0 or v >= self.N for v in self.n):
            raise ConfigurationError(f"edge values must lie in [0, {self.N - 1}], got {self.n}")

    @property
    def L(self) -> int:
        return len(self.n)

    @property
    def charge(self) -> int:
        return sum(self.n)

    @property
    def k(self) -> int:
        return self.charge // self.N

    @property
    def prefix(self) -> Tuple[int, ...]:
        sums, running = [], 0
        for v in self.n:
            sums.append(running)
            running += v
        return tuple(sums)

    @property
    def suffix(self) -> Tuple[int, ...]:
        charge = self.charge
        return tuple(charge - pre - v for pre, v in zip(self.prefix, self.n))

    def phases(self, kind: GeneratingKind) -> Tuple[int, ...]:
        return self.prefix if kind is GeneratingKind.FORWARD else self.suffix

    @property
    def site_moment(self) -> int:
        """Σ_j j·n_j with sites counted from 1."""
        return sum((j + 1) * v for j, v in enumerate(self.n))

    def complement(self) -> "EdgeConfig":
        return EdgeConfig(tuple(self.N - 1 - v for v in self.n), self.N)

    def label(self) -> str:
        return "".join(str(v) for v in self.n)


@lru_cache(maxsize=None)
def _compositions(L: int, N: int, total: int) -> Tuple[Tuple[int, ...], ...]:
    """Compositions of total into L parts in [0, N−1], lexicographic."""
    found: List[Tuple[int, ...]] = []
    parts = [0] * L

    def place(position: int, remaining: int):
        if position == L:
            if remaining == 0:
                found.append(tuple(parts))
            return
        slots_after = L - position - 1
        for v in range(min(N - 1, remaining) + 1):
            # prune: the rest must still fit
            if remaining - v > (N - 1) * slots_after:
                continue
            parts[position] = v
            place(position + 1, remaining - v)

    place(0, total)
    return tuple(found)


def configs_with_charge(N: int, L: int, charge: int) -> List[EdgeConfig]:
    return [EdgeConfig(n, N) for n in _compositions(L, N, charge)]


@lru_cache(maxsize=None)
def _binomial_table(N: int) -> np.ndarray:
    table = np.zeros((2 * N - 1, N), dtype=complex)
    for upper in range(2 * N - 1):
        for lower in range(min(upper, N - 1) + 1):
            table[upper, lower] = gauss_binomial(upper, lower, N)
    return table


def k_coeff(conf: EdgeConfig, m: int, kind: GeneratingKind = GeneratingKind.FORWARD) -> complex:
    """
    K_m = Σ_{n′, Σn′=m} ∏_j [n_j+n′_j over n′_j] ω^{n′_j N_j}
    (N_j → N̄_j for the bar kind).
    """
    N, L = conf.N, conf.L
    if m < 0 or m > (N - 1) * L:
        raise ConfigurationError(f"K_m needs 0 <= m <= (N−1)L = {(N - 1) * L}, got {m}")
    omega = root_of_unity(N)
    binom = _binomial_table(N)
    phases = conf.phases(kind)
    total = 0j
    for shift in _compositions(L, N, m):
        term = complex(1.0)
        for nj, sj, bj in zip(conf.n, shift, phases):
            term *= binom[nj + sj, sj] * omega ** ((sj * bj) % N)
        total += term
    return total


def kbar_coeff(conf: EdgeConfig, m: int) -> complex:
    return k_coeff(conf, m, GeneratingKind.BAR)


def gen_function(conf: EdgeConfig, t: complex, kind: GeneratingKind = GeneratingKind.FORWARD) -> complex:
    """g = (1 − t^N)^{−k} ∏_j (1 − t^N)/(1 − t ω^{N_j}) for charge kN."""
    N = conf.N
    if conf.charge % N != 0:
        raise ConfigurationError(f"generating function needs charge ≡ 0 mod {N}, got {conf.charge}")
    omega = root_of_unity(N)
    denominator = complex(1.0)
    for b in conf.phases(kind):
        factor = 1 - t * omega ** (b % N)
        if abs(factor) < POLE_TOLERANCE:
            raise SingularPointError(f"t = {t} hits the pole t·ω^{b % N} = 1")
        denominator *= factor
    return (1 - t ** N) ** (conf.L - conf.k) / denominator


def taylor_coefficients(conf: EdgeConfig, order: int, kind: GeneratingKind = GeneratingKind.FORWARD) -> np.ndarray:
    """Series coefficients of g through t^order, from truncated geometric series."""
    N = conf.N
    omega = root_of_unity(N)
    series = np.zeros(order + 1, dtype=complex)
    series[0] = 1.0
    # (1 − t^N)^{L−k}
    for _ in range(conf.L - conf.k):
        shifted = np.zeros_like(series)
        shifted[N:] = series[:-N] if N <= order else 0
        series = series - shifted
    for b in conf.phases(kind):
        geometric = (omega ** (b % N)) ** np.arange(order + 1)
        series = np.convolve(series, geometric)[:order + 1]
    return series


def term_count(N: int, L: int, charge: int, Q: int = 0) -> int:
    """Number of z-coefficients of G_Q: ((N−1)L − charge − Q) // N + 1."""
    return ((N - 1) * L - charge - Q) // N + 1


def g_poly(Q: int, conf: EdgeConfig, kind: GeneratingKind = GeneratingKind.FORWARD) -> CPolynomial:
    """G_Q(conf, z) = Σ_ℓ K_{Q+ℓN} z^ℓ (K̄ for the bar kind)."""
    N = conf.N
    if conf.charge not in (0, N):
        raise ConfigurationError(f"unsupported charge {conf.charge}: G_Q is defined for charge 0 or N")
    count = term_count(N, conf.L, conf.charge, Q)
    return CPolynomial([k_coeff(conf, Q + l * N, kind) for l in range(count)])


def g_closed_form(Q: int, conf: EdgeConfig, t: complex, kind: GeneratingKind = GeneratingKind.FORWARD) -> complex:
    """G_Q at z = t^N through the root-of-unity filter t^{−Q} N^{−1} Σ_a ω^{−Qa} g(tω^a)."""
    N = conf.N
    omega = root_of_unity(N)
    total = sum(omega ** ((-Q * a) % N) * gen_function(conf, t * omega ** a, kind) for a in range(N))
    return total / (N * t ** Q)


@lru_cache(maxsize=None)
def polynomial_table(N: int, L: int, kind: GeneratingKind, Q: int = 0) -> Tuple[Tuple[EdgeConfig, ...], np.ndarray]:
    """All charge-N configurations and the coefficient matrix of their G_Q (rows)."""
    configs = tuple(configs_with_charge(N, L, N))
    count = term_count(N, L, N, Q)
    matrix = np.array([g_poly(Q, conf, kind).padded(count) for conf in configs])
    return configs, matrix


def _values_at_roots(N: int, L: int, kind: GeneratingKind, roots: np.ndarray) -> np.ndarray:
    """values[c, k] = G(conf_c, z_k)."""
    _, matrix = polynomial_table(N, L, kind)
    powers = np.vander(roots, matrix.shape[1], increasing=True)
    return matrix @ powers.T


def h_poly(k_index: int, dd: "DrinfeldData", kind: GeneratingKind = GeneratingKind.FORWARD) -> CPolynomial:
    """
    h_k(z) = Σ_conf Ḡ(conf, z_k) G(conf, z) (forward) and
    h̄_k(z) = Σ_conf Ḡ(conf, z) G(conf, z_k) (bar).
    """
    if not 0 <= k_index < dd.r:
        raise ConfigurationError(f"mode index {k_index} outside [0, {dd.r})")
    other = GeneratingKind.BAR if kind is GeneratingKind.FORWARD else GeneratingKind.FORWARD
    _, matrix = polynomial_table(dd.N, dd.L, kind)
    weights = _values_at_roots(dd.N, dd.L, other, dd.roots)[:, k_index]
    return CPolynomial(weights @ matrix)


def product_form(k_index: int, dd: "DrinfeldData") -> CPolynomial:
    """β_{k,0}^{−1} ∏_{ℓ≠k}(z − z_ℓ)."""
    others = [z for l, z in enumerate(dd.roots) if l != k_index]
    return CPolynomial.from_roots(others, 1.0 / dd.beta.entries[k_index, 0])


def gram_check(dd: "DrinfeldData") -> Dict[str, object]:
    """β_{m,0} β_{k,0} z_k Σ_conf Ḡ(conf, z_m) G(conf, z_k) = −δ_{mk}."""
    forward = _values_at_roots(dd.N, dd.L, GeneratingKind.FORWARD, dd.roots)
    bar = _values_at_roots(dd.N, dd.L, GeneratingKind.BAR, dd.roots)
    beta0 = dd.beta.entries[:, 0]
    gram = np.outer(beta0, beta0 * dd.roots) * (bar.T @ forward)
    residual = gram + np.eye(dd.r)
    return {"gram": gram, "residual": residual, "max_residual": float(np.max(np.abs(residual)))}


def leading_coeff_check(dd: "DrinfeldData") -> Dict[str, object]:
    """
    The z^{r−1} coefficient of h̄_k equals β_{k,0}^{−1}; since
    z^{1−r} Ḡ(conf, z) → −ω^{−Σ m n_m}, the same number is
    −Σ_conf ω^{−Σ m n_m} G(conf, z_k).
    """
    configs, _ = polynomial_table(dd.N, dd.L, GeneratingKind.FORWARD)
    values = _values_at_roots(dd.N, dd.L, GeneratingKind.FORWARD, dd.roots)
    phases = np.array([dd.omega ** ((-conf.site_moment) % dd.N) for conf in configs])
    rows = []
    for k in range(dd.r):
        leading = h_poly(k, dd, GeneratingKind.BAR).padded(dd.r)[dd.r - 1]
        direct = complex(phases @ values[:, k])
        beta_inverse = 1.0 / dd.beta.entries[k, 0]
        rows.append({
            "mode": k,
            "leading": leading,
            "direct_sum": direct,
            "beta_inverse": beta_inverse,
            "leading_residual": abs(leading - beta_inverse),
            "direct_residual": abs(-direct - leading),
        })
    worst = max(max(row["leading_residual"], row["direct_residual"]) for row in rows)
    return {"modes": rows, "max_residual": worst}


def h_identity_check(dd: "DrinfeldData") -> Dict[str, float]:
    """Coefficientwise distance of h_k and h̄_k from the product form."""
    worst = {GeneratingKind.FORWARD.value: 0.0, GeneratingKind.BAR.value: 0.0}
    for k in range(dd.r):
        target = product_form(k, dd).padded(dd.r)
        for kind in GeneratingKind:
            computed = h_poly(k, dd, kind).padded(dd.r)
            worst[kind.value] = max(worst[kind.value], float(np.max(np.abs(computed - target))))
    return worst


def conjugation_residual(conf: EdgeConfig, t: float, Q: int = 0) -> float:
    """|Ḡ(conf, t^N) − conj G(conf, t^N)| at real t."""
    z = float(t) ** conf.N
    forward = g_poly(Q, conf, GeneratingKind.FORWARD)(z)
    bar = g_poly(Q, conf, GeneratingKind.BAR)(z)
    return abs(bar - np.conj(forward))


def exponent_duality_check(N: int, L: int) -> int:
    """max |Σ_j n′_j N_j − Σ_j n_j N̄′_j| over all pairs of edge configurations."""
    grid = np.indices((N,) * L).reshape(L, -1).T
    prefix = np.cumsum(grid, axis=1) - grid
    suffix = grid.sum(axis=1, keepdims=True) - np.cumsum(grid, axis=1)
    # lhs[a, b] = Σ_j n^{(a)}_j N^{(b)}_j ; rhs[a, b] = Σ_j N̄^{(a)}_j n^{(b)}_j
    lhs = grid @ prefix.T
    rhs = suffix @ grid.T
    return int(np.max(np.abs(lhs - rhs)))


def test_generating_functions():
    print("🔢⚡ الدوال المولدة")
    conf = EdgeConfig((1, 1, 1), 3)
    print(f"   K_0..K_6 of {conf.label()}: {[round(abs(k_coeff(conf, m)), 6) for m in range(7)]}")
    print(f"   G_0 = {g_poly(0, conf).coef}")
    print(f"   closed form at t=0.3: {g_closed_form(0, conf, 0.3):.6f} vs {g_poly(0, conf)(0.3 ** 3):.6f}")
    print(f"   exponent duality (3,3): {exponent_duality_check(3, 3)}")


if __name__ == "__main__":
    test_generating_functions()
