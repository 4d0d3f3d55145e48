"""Generalized spectral theory of the quantum sl_2 chains (n odd).

Tensoring with V_1 gives a non-diagonalizable kernel: each eigenvalue
lambda_j = cos(2 pi j / n), 1 <= j <= (n-1)/2, carries a 2x2 Jordan block.
The eigenvectors R_j, L_j and the generalized vectors R'_j, L'_j are
built from closed forms.  With the scaling R = D^-1 X / 2i, L = Y D / 2
(and the same for the primed vectors) the Jordan coupling is 1/2:

    K R'_j = lambda_j R'_j + R_j / 2,     L'_j K = lambda_j L'_j + L_j / 2.

Doubling R'_j and L'_j gives the unit-coupling form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._trig import cos2pi, sin2pi
from .chain import build_kernel
from .errors import ParameterError
from .families import FamilyId, make_spec, mckay_matrix

COUPLING = 0.5
# |d'_j| <= DPRIME_A * n^5, frozen from n <= 41 (largest observed ratio ~0.00202).
DPRIME_A = 0.0025


def _check_n(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ParameterError(f"n must be odd and >= 3 (got n={n})")


@dataclass(frozen=True, eq=False)
class JordanSpectralData:
    n: int
    m: int
    lambdas: np.ndarray  # (m,)
    R: np.ndarray  # (m, n)
    L: np.ndarray
    Rp: np.ndarray
    Lp: np.ndarray
    d: np.ndarray  # L_j . R'_j
    d_alt: np.ndarray  # L'_j . R_j
    dp: np.ndarray  # L'_j . R'_j
    eta: np.ndarray  # (m, n+1) complex: eta_a = xi^{ja} - xi^{-ja}
    gamma: np.ndarray  # (m, n+1): gamma_a = xi^{ja} + xi^{-ja}, gamma_0 := 1
    delta: np.ndarray  # (m, n+1): delta_b = gamma_{b-1} + gamma_{b-3} + ...

    @property
    def pi(self) -> np.ndarray:
        n = self.n
        return np.array([2 * (j + 1) / n ** 2 for j in range(n - 1)] + [1 / n])

    @property
    def Rp_unit(self) -> np.ndarray:
        """Generalized right vectors scaled for unit Jordan coupling."""
        return self.Rp / COUPLING

    @property
    def Lp_unit(self) -> np.ndarray:
        return self.Lp / COUPLING


def _helpers(n: int, j: int):
    a = np.arange(n + 1)
    eta = 2j * sin2pi(j * a, n)
    gamma = 2 * cos2pi(j * a, n)
    gamma[0] = 1.0
    delta = np.zeros(n + 1)
    delta[0] = 1.0
    for b in range(1, n + 1):
        delta[b] = gamma[b - 1 :: -2].sum()
    return eta, gamma, delta


def jordan_data(n: int) -> JordanSpectralData:
    """Closed-form eigenvectors and Jordan-chain vectors for the V_1 chain."""
    _check_n(n)
    m = (n - 1) // 2
    D = np.arange(1, n + 1, dtype=float)
    a = np.arange(n)
    lam = np.empty(m)
    R, L, Rp, Lp = (np.zeros((m, n)) for _ in range(4))
    eta_all = np.zeros((m, n + 1), dtype=complex)
    gam_all = np.zeros((m, n + 1))
    del_all = np.zeros((m, n + 1))
    for idx, j in enumerate(range(1, m + 1)):
        lam[idx] = cos2pi(j, n)
        eta, gamma, delta = _helpers(n, j)
        eta_all[idx], gam_all[idx], del_all[idx] = eta, gamma, delta
        s = eta.imag / 2  # eta_a / 2i
        # X_a = eta_{a+1};  X'_a = a eta_a + (a-2) eta_{a-2} + ...
        X = s[a + 1]
        Xp = np.array([sum((b * s[b]) for b in range(k, 0, -2)) for k in a])
        Y = np.r_[gamma[1:n], 1.0]
        Yp = np.array([(k + 1 - n) * delta[k + 1] if k <= m - 1 else (n - 1 - k) * delta[n - 1 - k] for k in a])
        R[idx] = X / D
        Rp[idx] = Xp / D
        L[idx] = Y * D / 2
        Lp[idx] = Yp * D / 2
    d = np.einsum("ij,ij->i", L, Rp)
    d_alt = np.einsum("ij,ij->i", Lp, R)
    dp = np.einsum("ij,ij->i", Lp, Rp)
    return JordanSpectralData(n, m, lam, R, L, Rp, Lp, d, d_alt, dp, eta_all, gam_all, del_all)


def quantum_kernel_dense(n: int) -> np.ndarray:
    return build_kernel(make_spec(FamilyId("quantum", n))).dense


def jordan_residuals(jd: JordanSpectralData, K: np.ndarray | None = None) -> dict:
    """Sup-norm residuals of every eigen, Jordan and pairing relation."""
    if K is None:
        K = quantum_kernel_dense(jd.n)
    lam = jd.lambdas[:, None]
    out = {
        "right": np.abs(jd.R @ K.T - lam * jd.R).max(),
        "left": np.abs(jd.L @ K - lam * jd.L).max(),
        "right_jordan": np.abs(jd.Rp @ K.T - lam * jd.Rp - COUPLING * jd.R).max(),
        "left_jordan": np.abs(jd.Lp @ K - lam * jd.Lp - COUPLING * jd.L).max(),
        "right_jordan_unit": np.abs(jd.Rp_unit @ K.T - lam * jd.Rp_unit - jd.R).max(),
        "left_jordan_unit": np.abs(jd.Lp_unit @ K - lam * jd.Lp_unit - jd.L).max(),
        "LR_zero": np.abs(np.einsum("ij,ij->i", jd.L, jd.R)).max(),
        "pairing_equal": np.abs(jd.d - jd.d_alt).max(),
    }
    LR = jd.L @ jd.R.T
    LRp = jd.L @ jd.Rp.T
    LpR = jd.Lp @ jd.R.T
    off = ~np.eye(jd.m, dtype=bool)
    out["cross"] = max(np.abs(LR[off]).max(initial=0), np.abs(LRp[off]).max(initial=0), np.abs(LpR[off]).max(initial=0))
    out["pi_orth"] = max(np.abs(jd.pi @ jd.R.T).max(), np.abs(jd.pi @ jd.Rp.T).max(), np.abs(jd.L.sum(1)).max(), np.abs(jd.Lp.sum(1)).max())
    out["Lp_last"] = np.abs(jd.Lp[:, -1]).max()
    return {k: float(v) for k, v in out.items()}


def rescaled_pairing_residual(jd: JordanSpectralData) -> float:
    """L_i R'_j / d_j and L'_i R_j / d_j against the identity."""
    I = np.eye(jd.m)
    a = jd.L @ jd.Rp.T / jd.d[None, :]
    b = jd.Lp @ jd.R.T / jd.d[None, :]
    return float(max(np.abs(a - I).max(), np.abs(b - I).max()))


def dj_closed(n: int, j: int) -> float:
    """The printed closed form (n/32)(4/sin t - (n+1)/sin^3 t), t = 2 pi j / n."""
    _check_n(n)
    s = float(sin2pi(j, n))
    return n / 32 * (4 / s - (n + 1) / s ** 3)


def dj_direct(n: int, j: int, jd: JordanSpectralData | None = None) -> float:
    """d_j = L'_j . R_j, asserted equal to L_j . R'_j."""
    jd = jd or jordan_data(n)
    v = jd.d_alt[j - 1]
    if abs(v - jd.d[j - 1]) > 1e-10 * max(1.0, abs(v)):
        raise AssertionError(f"L.R' != L'.R at n={n}, j={j}")
    return float(v)


def djprime_direct(n: int, j: int, jd: JordanSpectralData | None = None) -> float:
    jd = jd or jordan_data(n)
    return float(jd.dp[j - 1])


def jordan_power_row(n: int, steps: int, jd: JordanSpectralData | None = None) -> np.ndarray:
    """K^l(0, .) = pi + sum_j (a_j L_j + a'_j L'_j).

    a'_j = lambda^l R_j(0) / d_j and
    a_j = (c l lambda^(l-1) R_j(0) - a'_j d'_j) / d_j with coupling c = 1/2.
    """
    jd = jd or jordan_data(n)
    lam = jd.lambdas
    r0 = jd.R[:, 0]
    ap = lam ** steps * r0 / jd.d
    deriv = steps * lam ** (steps - 1) if steps > 0 else np.zeros_like(lam)
    a = (COUPLING * deriv * r0 - ap * jd.dp) / jd.d
    return jd.pi + a @ jd.L + ap @ jd.Lp


def spectrum_report(n: int) -> list[dict]:
    """Per-j diagnostics: lambda, direct and printed d_j, ratio, d'_j, residual."""
    jd = jordan_data(n)
    res = jordan_residuals(jd)
    worst = max(v for k, v in res.items() if not k.endswith("_unit"))
    out = []
    for j in range(1, jd.m + 1):
        dd = dj_direct(n, j, jd)
        dc = dj_closed(n, j)
        out.append(
            {
                "j": j,
                "lambda": float(jd.lambdas[j - 1]),
                "d_direct": dd,
                "d_closed": dc,
                "d_ratio": dd / dc,
                "dprime": djprime_direct(n, j, jd),
                "residual_max": worst,
            }
        )
    return out


# -- Steinberg tensoring --------------------------------------------------------


def charpoly(A) -> list[int]:
    """Integer characteristic polynomial coefficients, highest degree first.

    Faddeev-LeVerrier recursion with exact integer division.
    """
    A = np.array(A, dtype=object)
    n = A.shape[0]
    coeffs = [1]
    Mk = np.zeros((n, n), dtype=object)
    I = np.identity(n, dtype=object)
    c = 1
    for k in range(1, n + 1):
        Mk = A.dot(Mk) + c * I
        t = -np.trace(A.dot(Mk))
        if t % k:
            raise ArithmeticError("non-integral characteristic polynomial coefficient")
        c = t // k
        coeffs.append(int(c))
    return coeffs


def exact_rank(rows) -> int:
    M = [[Fraction(int(x)) for x in r] for r in rows]
    rank, ncols = 0, len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(len(M)):
            if i != rank and M[i][col]:
                f = M[i][col] / M[rank][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[rank])]
        rank += 1
    return rank


def steinberg_vectors(n: int) -> dict:
    """Integer eigenvectors and Jordan partners of the Steinberg McKay matrix."""
    _check_n(n)
    m = (n - 1) // 2
    e = np.eye(n, dtype=np.int64)
    r0 = np.arange(1, n + 1, dtype=np.int64)
    l0 = np.r_[np.full(n - 1, 2), 1].astype(np.int64)
    r, rp, l, lp = {}, {}, {}, {}
    for k in range(1, m + 1):
        r[k] = e[k - 1] - e[n - 1 - k]
        if n == 3:
            rp[k] = np.array([-1, -1, 4])
        elif k == 1:
            rp[k] = -e[n - 3] + 2 * e[n - 1]
        else:
            rp[k] = -e[n - k - 2] + e[n - k]
        l[k] = e[k - 1] + e[n - 1 - k] - e[n - 1]
        lp[k] = -2 * e[0] + e[1] if k == 1 else -2 * e[0] - e[k - 2] + e[k]
    return {"r0": r0, "l0": l0, "r": r, "rp": rp, "l": l, "lp": lp}


def steinberg_spectrum(n: int) -> dict:
    """Verify the Steinberg chain's spectral structure exactly."""
    _check_n(n)
    spec = make_spec(FamilyId("quantum", n), "steinberg")
    M = mckay_matrix(spec)
    v = steinberg_vectors(n)
    scale = 4 if n == 3 else 2
    checks = {
        "r0": bool(np.all(M @ v["r0"] == n * v["r0"])),
        "l0": bool(np.all(v["l0"] @ M == n * v["l0"])),
        "r_null": all(np.all(M @ x == 0) for x in v["r"].values()),
        "r_jordan": all(np.all(M @ v["rp"][k] == scale * v["r"][k]) for k in v["r"]),
        "l_null": all(np.all(x @ M == 0) for x in v["l"].values()),
        "l_jordan": all(np.all(v["lp"][k] @ M == 2 * v["l"][k]) for k in v["l"]),
    }
    basis = [v["r0"]] + list(v["r"].values()) + list(v["rp"].values())
    checks["right_basis_full_rank"] = exact_rank(basis) == n
    cp = charpoly(M)
    expected = [1, -n] + [0] * (n - 1)
    checks["charpoly"] = cp == expected
    w = [int(x) * d for x, d in zip(v["l0"], spec.dims)]
    total = sum(w)
    pi_from_l0 = [Fraction(x, total) for x in w]
    pi_72 = [Fraction(2 * (j + 1), n * n) for j in range(n - 1)] + [Fraction(1, n)]
    checks["stationary"] = pi_from_l0 == pi_72
    return {"n": n, "M": M, "charpoly": cp, "checks": checks, "ok": all(checks.values())}
