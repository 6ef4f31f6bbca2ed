#!/usr/bin/env python3
"""
مؤثرات الدوران - Rotation Operators
أدوات التحقق من نموذج بوتس الشيرالي

🔄 المقادير X, Y, Z لكل نمط ومتغيراتها المعلمة والمشرطة
🧮 المصفوفتان M و N وحلول الدوران S_j و R_j
🧩 تجميع التمثيل 2^r × 2^r كحاصل ضرب مباشر
"""

import cmath
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from root_of_unity_numerics import SingularPointError, relative_error
from chiral_potts_curve import CurvePoint, conjugate_point
from drinfeld_polynomial import DrinfeldData, ab_values, all_patterns, analytic_eigenvalue

# mode basis: index 0 is ξ = +1, index 1 is ξ = −1
IDENTITY = np.eye(2, dtype=complex)
H = np.diag([1.0, -1.0]).astype(complex)
E_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)
E_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)

DEGENERATE_THETA = 1e-10


class ModeScalars(NamedTuple):
    """X, Y, Z of one mode for one of the three transfer matrices."""
    X: complex
    Y: complex
    Z: complex

    @property
    def plus(self) -> complex:
        return self.X + self.Y

    @property
    def minus(self) -> complex:
        return self.X - self.Y

    @property
    def determinant(self) -> complex:
        return self.X ** 2 - self.Y ** 2 - self.Z ** 2

    def factor(self) -> np.ndarray:
        """X − HY + (E⁺ + E⁻)Z = [[X−Y, Z], [Z, X+Y]]."""
        return self.X * IDENTITY - self.Y * H + self.Z * (E_PLUS + E_MINUS)


def _scalars(plus: complex, minus: complex, Z: complex) -> ModeScalars:
    return ModeScalars((plus + minus) / 2, (plus - minus) / 2, Z)


@dataclass(frozen=True, eq=False)
class ModeMatrices:
    """
    بيانات النمط j - q-independent data of one mode: θ_j, ε̄_j, ε_j, the
    matrices M and N, the rotations S_j and R_j and the T, T* combinations.
    """
    j: int
    theta: complex
    eps_bar: complex
    eps: complex
    M: np.ndarray
    Nmat: np.ndarray
    S: np.ndarray
    R: np.ndarray

    @property
    def T(self) -> np.ndarray:
        return self.M * cmath.exp(-self.theta) + self.Nmat * cmath.exp(self.theta)

    @property
    def T_star(self) -> np.ndarray:
        return self.M * cmath.exp(self.theta) + self.Nmat * cmath.exp(-self.theta)


# ==================== المقادير - Per-mode scalars ====================

def epsilon(j: int, dd: DrinfeldData, lambda_p: Optional[complex] = None) -> Tuple[complex, complex]:
    """
    ε̄_j² = 1/[k′(z_j^{−1} − 1)λ_p], ε_j = ρ ε̄_j; principal roots.

    The sign of ε_j is carried by X_j, Y_j, Z_j and cancels against
    sector_normalization. θ_j comes from canonical_theta (Re θ_j >= 0, no iπ
    shift), and S_j, R_j are solved on that same branch.
    """
    lambda_p = dd.lambda_p if lambda_p is None else complex(lambda_p)
    z = dd.roots[j]
    if abs(z - 1) < 1e-12:
        raise SingularPointError(f"z_{j + 1} = 1 makes ε_{j + 1} singular")
    eps_bar = cmath.sqrt(1 / (dd.kprime * (1 / z - 1) * lambda_p))
    return eps_bar, dd.rho * eps_bar


def xyz(j: int, q: CurvePoint, dd: DrinfeldData) -> ModeScalars:
    """Forward scalars, linear in λ_q^{−1}."""
    _, eps = epsilon(j, dd)
    z, kp, lp, inv = dd.roots[j], dd.kprime, dd.lambda_p, 1 / q.lam
    plus = eps * ((1 - kp * lp) * z - (1 - kp * inv))
    Z = eps * kp * (inv - lp)
    minus = eps * (-kp * lp / z + inv * (kp + lp / z - lp))
    return _scalars(plus, minus, Z)


def xyz_bar(j: int, q: CurvePoint, dd: DrinfeldData) -> ModeScalars:
    """Scalars of 𝒯̂_0(y_q, x_q), linear in λ_q."""
    _, eps = epsilon(j, dd)
    z, kp, lp, lq = dd.roots[j], dd.kprime, dd.lambda_p, q.lam
    plus = eps * (lp - kp - (lp - kp * lp * lq) / z)
    Z = -eps * (-kp + kp * lp * lq)
    minus = eps * (lq - kp - (lq - kp * lp * lq) * z)
    return _scalars(plus, minus, Z)


def xyz_prime(j: int, q: CurvePoint, dd: DrinfeldData) -> ModeScalars:
    """Scalars of 𝒯̂_0(x_q, y_q), linear in λ_q^{−1}."""
    _, eps = epsilon(j, dd)
    z, kp, lp, inv = dd.roots[j], dd.kprime, dd.lambda_p, 1 / q.lam
    plus = eps * (lp - kp - (lp - kp * lp * inv) / z)
    Z = -eps * (-kp + kp * lp * inv)
    minus = eps * inv * ((1 - kp / inv) - (1 - kp * lp) * z)
    return _scalars(plus, minus, Z)


def xyz_curve_forms(j: int, q: CurvePoint, dd: DrinfeldData) -> Dict[str, float]:
    """The linear forms against the curve-point forms k·x^N, k·y^N of each scalar."""
    _, eps = epsilon(j, dd)
    N, k, z = dd.N, dd.k, dd.roots[j]
    p, lp, lq = dd.p, dd.lambda_p, q.lam
    xp, yp, xq, yq = p.x ** N, p.y ** N, q.x ** N, q.y ** N
    forward, bar, prime = xyz(j, q, dd), xyz_bar(j, q, dd), xyz_prime(j, q, dd)
    return {
        "plus": relative_error(forward.plus, eps * k * (yp * z - xq)),
        "Z": relative_error(forward.Z, eps * k * (yp - xq)),
        "Z_dual": relative_error(forward.Z, eps * lp / lq * k * (yq - xp)),
        "minus": relative_error(forward.minus, eps * lp / lq * k * (yq / z - xp)),
        "bar_plus": relative_error(bar.plus, eps * lp * k * (xp - yq / z)),
        "bar_Z": relative_error(bar.Z, -eps * lp * k * (xp - yq)),
        "bar_Z_dual": relative_error(bar.Z, -eps * lq * k * (xq - yp)),
        "bar_minus": relative_error(bar.minus, eps * lq * k * (xq - yp * z)),
        "prime_plus": relative_error(prime.plus, eps * lp * k * (xp - xq / z)),
        "prime_Z": relative_error(prime.Z, -eps * lp * k * (xp - xq)),
        "prime_Z_dual": relative_error(prime.Z, -eps / lq * k * (yq - yp)),
        "prime_minus": relative_error(prime.minus, eps / lq * k * (yq - yp * z)),
    }


# ==================== المصفوفات - M, N and the rotations ====================

def mn_matrices(j: int, dd: DrinfeldData, lambda_p: Optional[complex] = None,
                kprime: Optional[complex] = None) -> Tuple[np.ndarray, np.ndarray]:
    lambda_p = dd.lambda_p if lambda_p is None else complex(lambda_p)
    kp = dd.kprime if kprime is None else complex(kprime)
    eps_bar, _ = epsilon(j, dd, lambda_p)
    z = dd.roots[j]
    M = eps_bar * np.array([
        [-kp * lambda_p / z, -kp * lambda_p],
        [-kp * lambda_p, z - 1 - kp * z * lambda_p],
    ], dtype=complex)
    Nmat = eps_bar * np.array([
        [lambda_p / z - lambda_p + kp, kp],
        [kp, kp],
    ], dtype=complex)
    return M, Nmat


def solve_rotations(j: int, dd: DrinfeldData, s22_sign: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """
    S_j from the closed-form entries and R_j = (S_j^{−1})ᵀ with r_11 = s_22.
    s22_sign picks the branch of the one free square root.
    """
    theta = dd.theta[j]
    D = 2 * cmath.sinh(2 * theta)
    if abs(D) < DEGENERATE_THETA:
        raise SingularPointError(f"θ_{j + 1} ≈ 0: the rotation of mode {j + 1} is degenerate")
    M, Nmat = mn_matrices(j, dd)
    e = cmath.exp(theta)
    t22 = M[1, 1] * e + Nmat[1, 1] / e
    if abs(t22) < DEGENERATE_THETA:
        raise SingularPointError(f"m_22 e^θ + n_22 e^−θ vanishes for mode {j + 1}")
    s22 = s22_sign * cmath.sqrt(t22 / D)
    s12 = (M[0, 1] * e + Nmat[0, 1] / e) / t22 * s22
    if abs(s12) < DEGENERATE_THETA:
        raise SingularPointError(f"s_12 vanishes for mode {j + 1}")
    s21 = (cmath.exp(-2 * theta) - dd.kprime) / (s12 * D)
    s11 = (cmath.exp(2 * theta) - dd.kprime) / (s22 * D)
    S = np.array([[s11, s12], [s21, s22]], dtype=complex)
    R = np.array([[s22, -s21], [-s12, s11]], dtype=complex)
    return S, R


def mode_matrices(j: int, dd: DrinfeldData, s22_sign: int = 1) -> ModeMatrices:
    eps_bar, eps = epsilon(j, dd)
    M, Nmat = mn_matrices(j, dd)
    S, R = solve_rotations(j, dd, s22_sign)
    return ModeMatrices(j=j, theta=dd.theta[j], eps_bar=eps_bar, eps=eps, M=M, Nmat=Nmat, S=S, R=R)


def all_modes(dd: DrinfeldData) -> List[ModeMatrices]:
    return [mode_matrices(j, dd) for j in range(dd.r)]


def _gap(lhs, rhs) -> float:
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    scale = max(1.0, float(np.max(np.abs(rhs))))
    return float(np.max(np.abs(lhs - rhs))) / scale


def rotation_identity_residuals(mode: ModeMatrices, dd: DrinfeldData) -> Dict[str, float]:
    """Every q-independent identity tying θ_j, M, N, S_j and R_j together."""
    theta, M, Nm, S, R = mode.theta, mode.M, mode.Nmat, mode.S, mode.R
    z, kp, lp = dd.roots[mode.j], dd.kprime, dd.lambda_p
    e, e2 = cmath.exp(theta), cmath.exp(2 * theta)
    D = 2 * cmath.sinh(2 * theta)
    c, s = cmath.cosh(theta), cmath.sinh(theta)
    (s11, s12), (s21, s22) = S
    (r11, r12), (r21, r22) = R
    (m11, m12), (m21, m22) = M
    (n11, n12), (n21, n22) = Nm
    T, Ts = mode.T, mode.T_star
    lower, upper = c * IDENTITY - s * H, c * IDENTITY + s * H
    S_inv, R_inv = np.linalg.inv(S), np.linalg.inv(R)
    M_inv, N_inv = np.linalg.inv(M), np.linalg.inv(Nm)

    def consist(sign: int) -> float:
        a, b = cmath.exp(-sign * theta), cmath.exp(sign * theta)
        return _gap((m11 * a + n11 * b) * (m22 * a + n22 * b), (m21 * a + n21 * b) * (m12 * a + n12 * b))

    return {
        "det_M": _gap(np.linalg.det(M), 1),
        "det_N": _gap(np.linalg.det(Nm), 1),
        "mn_symmetry": max(abs(m12 - m21), abs(n12 - n21), abs(n22 - n12)),
        "eps_normalization": _gap(kp * (1 / z - 1) * lp * mode.eps_bar ** 2, 1),
        "eps_ratio": _gap(mode.eps / mode.eps_bar, dd.rho),
        "det_S": _gap(np.linalg.det(S), 1),
        "det_R": _gap(np.linalg.det(R), 1),
        "transpose_inverse": _gap(R, S_inv.T),
        "r11_choice": abs(r11 - s22),
        "rotate_M": _gap(S @ lower @ R_inv, M),
        "rotate_N": _gap(S @ upper @ R_inv, -Nm),
        "inverse_rotate_N": _gap(R @ lower @ S_inv, -N_inv),
        "inverse_rotate_M": _gap(R @ upper @ S_inv, M_inv),
        "consist_upper": consist(1),
        "consist_lower": consist(-1),
        "cosh_from_mn": _gap(2 * cmath.cosh(2 * theta), 2 * m12 * n12 - m11 * n22 - m22 * n11),
        "lambda_theta": _gap(lp + 1 / lp, 2 * cmath.cosh(2 * theta) / z - (kp + 1 / kp) * (1 / z - 1)),
        "s_column_1": _gap(s21 * (m11 / e + n11 * e), s11 * (m21 / e + n21 * e)),
        "s_column_2": _gap(s21 * (m12 / e + n12 * e), s11 * (m22 / e + n22 * e)),
        "s_column_3": _gap(s22 * (m11 * e + n11 / e), s12 * (m21 * e + n21 / e)),
        "s_column_4": _gap(s22 * (m12 * e + n12 / e), s12 * (m22 * e + n22 / e)),
        "s_diagonal_product": _gap(s11 * s22, (e2 - kp) / D),
        "s_off_product": _gap(s12 * s21, (1 / e2 - kp) / D),
        "r_ratio_22": _gap(r22 / r12, -s11 / s21),
        "r_ratio_11": _gap(r11 / r21, -s22 / s12),
        "r_diagonal_product": _gap(r22 * r11, s11 * s22),
        "r_off_product": _gap(r12 * r21, s12 * s21),
        "m11_from_sr": _gap(m11, s11 * r22 / e - e * s12 * r21),
        "n11_from_sr": _gap(n11, -e * s11 * r22 + s12 * r21 / e),
        "s11_r22": _gap(s11 * r22, -T[0, 0] / D),
        "s22_r11": _gap(s22 * r11, Ts[1, 1] / D),
        "s22_squared": _gap(s22 ** 2, Ts[1, 1] / D),
        "t_symmetry": max(abs(T[0, 1] - T[1, 0]), abs(Ts[0, 1] - Ts[1, 0])),
        "t_product_12": _gap(T[0, 1] * Ts[0, 1], -(1 / e2 - kp) * (e2 - kp)),
        "t_product_11_22": _gap(T[0, 0] * Ts[1, 1], -(e2 - kp) ** 2),
        "t_product_22_11": _gap(T[1, 1] * Ts[0, 0], -(1 / e2 - kp) ** 2),
        "r22_over_s22_T": _gap(r22 / s22, -T[0, 0] / (e2 - kp)),
        "r22_over_s22_Tstar": _gap(r22 / s22, (e2 - kp) / Ts[1, 1]),
    }


def factor_check(mode: ModeMatrices, q: CurvePoint, dd: DrinfeldData) -> Dict[str, float]:
    """
    The three 2×2 factor identities at q, their M/N forms, the determinant
    invariance and the q ↔ q′ relation between the hat scalars.
    """
    j, S, R, M, Nm = mode.j, mode.S, mode.R, mode.M, mode.Nmat
    lq = q.lam
    A, B = ab_values(j, lq, dd)
    A_bar, B_bar = ab_values(j, 1 / lq, dd)
    forward, bar, prime = xyz(j, q, dd), xyz_bar(j, q, dd), xyz_prime(j, q, dd)
    F1, F2, F3 = forward.factor(), bar.factor(), prime.factor()
    S_inv, R_inv = np.linalg.inv(S), np.linalg.inv(R)
    M_inv, N_inv = np.linalg.inv(M), np.linalg.inv(Nm)
    rho, eps = dd.rho, mode.eps
    expected_det = rho ** 2 * dd.k ** 2 * (dd.tpN * dd.roots[j] - q.t ** dd.N) / (dd.kprime * lq)
    return {
        "forward_factor": _gap(S @ (A * IDENTITY - B * H) @ R_inv, F1),
        "bar_factor": _gap(R @ (A_bar * IDENTITY - B_bar * H) @ S_inv, F2),
        "prime_factor": _gap(R @ (A * IDENTITY - B * H) @ S_inv, F3),
        "forward_MN": _gap(F1, rho * (M + Nm / lq)),
        "bar_MN": _gap(F2, rho * (-N_inv - lq * M_inv)),
        "prime_MN": _gap(F3, rho * (-N_inv - M_inv / lq)),
        "forward_determinant": _gap(forward.determinant, A ** 2 - B ** 2),
        "bar_determinant": _gap(bar.determinant, A_bar ** 2 - B_bar ** 2),
        "prime_determinant": _gap(prime.determinant, A ** 2 - B ** 2),
        "ab_determinant": _gap(A ** 2 - B ** 2, expected_det),
        "xyz_determinant": _gap(forward.determinant, eps ** 2 * dd.k ** 2 * dd.lambda_p / lq * (1 / dd.roots[j] - 1)
                     * (dd.tpN * dd.roots[j] - q.t ** dd.N)),
        "prime_from_bar": _gap(np.array(xyz_prime(j, conjugate_point(q), dd)), np.array(bar)),
    }


# ==================== التجميع - Sector assembly ====================

def mode_gauge(j: int, dd: DrinfeldData) -> np.ndarray:
    """diag(−z_j, 1): the weight of E_j⁺ against E_j⁻ between Ψ and the mode basis."""
    return np.diag([-dd.roots[j], 1.0]).astype(complex)


def sector_normalization(dd: DrinfeldData) -> complex:
    """
    κ_0 = N^{1−L/2} / (∏_j ε_j (−k)^r), the factor with ⟨Ω|𝒯_0|Ω⟩ = κ_0 ∏_j (X_j + Y_j).
    κ_0² = (−λ_p)^r, so only the branch of ε_j enters its sign.
    """
    eps = np.prod([epsilon(j, dd)[1] for j in range(dd.r)])
    return complex(dd.N ** (1 - dd.L / 2) / (eps * (-dd.k) ** dd.r))


@dataclass(frozen=True, eq=False)
class SectorRepresentation:
    """
    2^r × 2^r matrices of 𝒯_0, 𝒯̂_0 on span{Ψ(ξ)} at one q; mode 1 is the
    most significant bit. 𝒯_rep = 𝒮 Λ ℛ^{−1}, the hats ℛ Λ 𝒮^{−1}.
    """
    T_rep: np.ndarray
    That_rep: np.ndarray
    That_xy_rep: np.ndarray
    R_rep: np.ndarray
    S_rep: np.ndarray
    normalization: complex = 1.0


def _kron_all(factors: List[np.ndarray]) -> np.ndarray:
    return reduce(np.kron, factors)


def assemble_sector(q: CurvePoint, dd: DrinfeldData, modes: Optional[List[ModeMatrices]] = None) -> SectorRepresentation:
    """
    κ_0 ⊗_j [X_j − H_j Y_j + (E_j⁺ + E_j⁻) Z_j] G_j for 𝒯_0(x_q, y_q) and
    κ_0^{−1} ⊗_j G_j^{−1}[…] for the barred 𝒯̂_0(y_q, x_q) and primed
    𝒯̂_0(x_q, y_q), with G_j = mode_gauge(j); ℛ = κ_0^{−1} ⊗G_j^{−1}ℛ_j, 𝒮 = ⊗𝒮_j.
    """
    modes = modes if modes is not None else all_modes(dd)
    kappa = sector_normalization(dd)
    gauges = [mode_gauge(m.j, dd) for m in modes]
    inverses = [np.diag(1 / np.diag(g)) for g in gauges]
    return SectorRepresentation(
        T_rep=kappa * _kron_all([xyz(m.j, q, dd).factor() @ g for m, g in zip(modes, gauges)]),
        That_rep=_kron_all([g @ xyz_bar(m.j, q, dd).factor() for m, g in zip(modes, inverses)]) / kappa,
        That_xy_rep=_kron_all([g @ xyz_prime(m.j, q, dd).factor() for m, g in zip(modes, inverses)]) / kappa,
        R_rep=_kron_all([g @ m.R for m, g in zip(modes, inverses)]) / kappa,
        S_rep=_kron_all([m.S for m in modes]),
        normalization=kappa,
    )


def sector_rep_checks(q: CurvePoint, dd: DrinfeldData, rep: SectorRepresentation) -> Dict[str, float]:
    """
    Internal consistency of the assembled matrices: 𝒮 Λ ℛ^{−1} = 𝒯_rep,
    ℛ Λ 𝒮^{−1} and ℛ Λ̄ 𝒮^{−1} for the two hats, the spectrum {𝒢²} of
    𝒯̂(x_q, y_q)𝒯, κ_0² = (−λ_p)^r and ℛ = κ_0^{−1}(⊗G_j^{−1})𝒮^{−T}.
    Agreement with the brute-force matrices is ground_state_sector's job.
    """
    patterns = all_patterns(dd.r)
    eigen = np.array([analytic_eigenvalue(pattern, q.lam, dd) for pattern in patterns])
    eigen_bar = np.array([analytic_eigenvalue(pattern, 1 / q.lam, dd) for pattern in patterns])
    R_inv, S_inv = np.linalg.inv(rep.R_rep), np.linalg.inv(rep.S_rep)
    squares = np.linalg.eigvals(rep.That_xy_rep @ rep.T_rep)
    square_gap = max(float(np.min(np.abs(squares - g ** 2))) / max(abs(g ** 2), 1e-300) for g in eigen)
    gauge_inverse = _kron_all([np.diag(1 / np.diag(mode_gauge(j, dd))) for j in range(dd.r)])
    return {
        "diagonalization": _gap(rep.S_rep @ np.diag(eigen) @ R_inv, rep.T_rep),
        "hat_xy_diagonalization": _gap(rep.R_rep @ np.diag(eigen) @ S_inv, rep.That_xy_rep),
        "hat_yx_diagonalization": _gap(rep.R_rep @ np.diag(eigen_bar) @ S_inv, rep.That_rep),
        "product_spectrum": square_gap,
        "det_S_rep": _gap(np.linalg.det(rep.S_rep), 1),
        "normalization_square": _gap(rep.normalization ** 2, (-dd.lambda_p) ** dd.r),
        "R_rep_gauge": _gap(rep.R_rep, gauge_inverse @ S_inv.T / rep.normalization),
    }


def mode_algebra_check() -> Dict[str, float]:
    """sl2 relations of H, E⁺, E⁻ in the 2×2 mode basis."""
    def comm(a, b):
        return a @ b - b @ a

    plus, minus = E_PLUS + E_MINUS, E_PLUS - E_MINUS
    return {
        "H_squared": _gap(H @ H, IDENTITY),
        "H_plus": _gap(comm(H, plus), 2 * minus),
        "H_minus": _gap(comm(H, minus), 2 * plus),
        "minus_plus": _gap(comm(minus, plus), 2 * H),
        "minus_squared": _gap(minus @ minus, -IDENTITY),
        "plus_squared": _gap(plus @ plus, IDENTITY),
        "anticommutator": _gap(E_PLUS @ E_MINUS + E_MINUS @ E_PLUS, IDENTITY),
        "E_H": _gap(comm(E_PLUS, E_MINUS), H),
    }


def _direction_gap(u: np.ndarray, v: np.ndarray) -> float:
    """|u × v| / (|u||v|): zero when the two 2-vectors are parallel."""
    return abs(u[0] * v[1] - u[1] * v[0]) / max(np.linalg.norm(u) * np.linalg.norm(v), 1e-300)


def _eigen_directions(matrix: np.ndarray, targets: Tuple[complex, complex]) -> List[np.ndarray]:
    values, vectors = np.linalg.eig(matrix)
    return [vectors[:, int(np.argmin(np.abs(values - t)))] for t in targets]


def q_independence_check(mode: ModeMatrices, dd: DrinfeldData, q1: CurvePoint, q2: CurvePoint) -> Dict[str, float]:
    """
    The columns of S_j are the eigenvectors of F F′ and those of R_j the
    eigenvectors of F′ F, F and F′ being the forward and (x_q, y_q) hat
    factors; the directions found at two q must coincide with each other
    and with the solved S_j, R_j.
    """
    found = []
    for q in (q1, q2):
        A, B = ab_values(mode.j, q.lam, dd)
        targets = ((A - B) ** 2, (A + B) ** 2)
        F, F_prime = xyz(mode.j, q, dd).factor(), xyz_prime(mode.j, q, dd).factor()
        found.append((_eigen_directions(F @ F_prime, targets), _eigen_directions(F_prime @ F, targets)))

    gaps = {"S_columns": 0.0, "R_columns": 0.0, "between_q": 0.0}
    for s_dirs, r_dirs in found:
        for col in range(2):
            gaps["S_columns"] = max(gaps["S_columns"], _direction_gap(s_dirs[col], mode.S[:, col]))
            gaps["R_columns"] = max(gaps["R_columns"], _direction_gap(r_dirs[col], mode.R[:, col]))
    (s1, r1), (s2, r2) = found
    for col in range(2):
        gaps["between_q"] = max(gaps["between_q"], _direction_gap(s1[col], s2[col]), _direction_gap(r1[col], r2[col]))
    return gaps


def sign_flip_check(j: int, dd: DrinfeldData, q: CurvePoint) -> float:
    """Largest change of any identity residual when s_22 takes its other sign."""
    reports = []
    for sign in (1, -1):
        mode = mode_matrices(j, dd, s22_sign=sign)
        report = rotation_identity_residuals(mode, dd)
        report.update(factor_check(mode, q, dd))
        reports.append(report)
    first, second = reports
    return max(abs(first[name] - second[name]) for name in first)


def test_rotation_operators():
    from chiral_potts_curve import point_from_lambda
    from drinfeld_polynomial import build_drinfeld

    print("🔄⚡ مؤثرات الدوران")
    dd = build_drinfeld(3, 3, 0.3)
    q = point_from_lambda(0.3, 1.3 + 0.4j, 3)
    for mode in all_modes(dd):
        worst = max(rotation_identity_residuals(mode, dd).values())
        factor = max(factor_check(mode, q, dd).values())
        print(f"   mode {mode.j + 1}: ε̄ = {mode.eps_bar:.6f}, identities {worst:.1e}, factors {factor:.1e}")
    rep = assemble_sector(q, dd)
    print(f"   sector representation: {sector_rep_checks(q, dd, rep)}")


if __name__ == "__main__":
    test_rotation_operators()
