"""Diagonalizable spectral theory of tensor chains from character data.

For a class representative c the chain has eigenvalue
beta_c = alpha(c) / alpha(1), right eigenvector r_c(chi) = chi(c) / chi(1)
and left eigenvector l_c(chi) = conj(p_chi(c)) chi(1) / |C_G(c)|.  None of
this uses a numerical eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._trig import cis, cos2pi
from .chain import Kernel, build_kernel
from .errors import UnsupportedFamilyError
from .families import ChainSpec, alpha_values, character_data, family, mckay_matrix


@dataclass(frozen=True, eq=False)
class SpectralData:
    class_ids: tuple
    eigenvalues: np.ndarray  # (classes,)
    right_vectors: np.ndarray  # (states, classes): column c is r_c
    left_vectors: np.ndarray  # (classes, states): row c is l_c

    def biorthogonality(self) -> np.ndarray:
        """B[c, c'] = sum_chi l_c(chi) r_c'(chi); the identity matrix."""
        return self.left_vectors @ self.right_vectors

    def biorthogonality_conjugated(self) -> np.ndarray:
        """sum_chi l_c(chi) conj(r_c'(chi)); equals the identity only on real classes."""
        return self.left_vectors @ np.conj(self.right_vectors)

    def biorthogonality_residual(self) -> float:
        B = self.biorthogonality()
        return float(np.abs(B - np.eye(B.shape[0])).max())


def brauer_spectrum(spec: ChainSpec, hold=0) -> SpectralData:
    """Eigen-system of the (optionally lazy) kernel built from ``spec``."""
    if spec.family.tag == "quantum":
        raise UnsupportedFamilyError("quantum chains are not diagonalizable; use tensorwalk.jordan")
    cd = character_data(spec)
    beta = np.zeros(cd.n_classes, dtype=complex)
    for i, comp in enumerate(spec.components):
        beta += float(comp.weight) * alpha_values(spec, cd, i) / comp.alpha_dim
    h = float(Fraction(hold))
    beta = h + (1.0 - h) * beta
    dims = np.array(spec.dims, dtype=float)
    R = cd.irr_values / dims[:, None]
    C = np.array(cd.centralizer_orders, dtype=float)
    L = (np.conj(cd.proj_values) * dims[:, None]).T / C[:, None]
    return SpectralData(cd.class_ids, beta, R, L)


def eigen_residuals(k: Kernel, sd: SpectralData) -> tuple[float, float]:
    """max_c |K r_c - beta_c r_c| and max_c |l_c K - beta_c l_c| in sup norm."""
    P = k.dense
    right = P @ sd.right_vectors - sd.right_vectors * sd.eigenvalues[None, :]
    left = sd.left_vectors @ P - sd.left_vectors * sd.eigenvalues[:, None]
    return float(np.abs(right).max()), float(np.abs(left).max())


def spectral_row(sd: SpectralData, steps: int, start: int = 0) -> np.ndarray:
    """K^l(start, .) = sum_c beta_c^l r_c(start) l_c(.)."""
    coef = sd.eigenvalues ** steps * sd.right_vectors[start]
    row = coef @ sd.left_vectors
    return row.real


def mckay_conjugacy_residual(spec: ChainSpec, M=None, kernel: Kernel | None = None) -> Fraction:
    """max |K - sum_i w_i (1/alpha_i(1)) D^-1 M_i D| computed exactly.

    ``M`` may be one matrix (single tensoring) or one per component; when
    omitted the catalog's McKay matrices are used.
    """
    comps = spec.components
    if M is None:
        Ms = [mckay_matrix(spec, i) for i in range(len(comps))]
    elif len(comps) == 1 and np.ndim(M) == 2:
        Ms = [M]
    else:
        Ms = list(M)
    k = kernel if kernel is not None else build_kernel(spec)
    d = spec.dims
    worst = Fraction(0)
    # compare sparsely: the union of both supports covers every nonzero difference
    for i in range(spec.size):
        target: dict = {}
        for comp, Mi in zip(comps, Ms):
            row = np.asarray(Mi[i])
            for j in np.flatnonzero(row):
                j = int(j)
                target[j] = target.get(j, 0) + comp.weight * Fraction(int(row[j]) * d[j], comp.alpha_dim * d[i])
        actual = dict(k.nonzero[i])
        for j in target.keys() | actual.keys():
            diff = abs(actual.get(j, 0) - target.get(j, 0))
            if diff > worst:
                worst = diff
    return worst


# -- SL_3(p) eigenvalue bound -------------------------------------------------


def sl3_eigenvalues(p: int) -> tuple[tuple, np.ndarray]:
    """beta_c = (e1 + e2 + e3) / 3 over the eigenvalue triple of each class."""
    fam = family("sl3p", p)
    classes = fam.classes()
    mods = np.array([c[1] for c in classes], dtype=np.int64)
    E = np.array([c[2] for c in classes], dtype=np.int64)
    beta = cis(E, mods[:, None]).sum(axis=1) / 3.0
    return tuple(c[0] for c in classes), beta


def lemma_angles_check(n: int, tol: float = 1e-12) -> dict:
    """Check the three cosine inequalities on the lattice 2 pi Z / n (n >= 7)."""
    if n < 7:
        raise ValueError("the inequalities are stated for n >= 7")
    g = np.pi ** 2 / n ** 2
    xs = np.linspace(0.0, np.pi / 3, 2001)
    part_i = bool(np.all(np.sin(xs) >= xs / 2 - tol) and np.all(np.cos(xs) <= 1 - xs ** 2 / 4 + tol))
    c = cos2pi(np.arange(1, n), n)
    part_ii = bool(
        np.all(c <= 1 - g + tol)
        and np.all(np.abs(2 + c) <= 3 - g + tol)
        and np.all(np.abs(1 + 2 * c) <= 3 - 2 * g + tol)
    )
    j1, j2 = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    j3 = -(j1 + j2)
    s = cos2pi(j1, n) + cos2pi(j2, n) + cos2pi(j3, n)
    nontrivial = (j1 % n != 0) | (j2 % n != 0) | (j3 % n != 0)
    part_iii = bool(np.all(np.abs(s[nontrivial]) <= 3 - 2 * g + tol))
    return {"i": part_i, "ii": part_ii, "iii": part_iii}


def sl3_eigen_bound(p: int, lattice_range: Sequence[int] = range(7, 201)) -> dict:
    """Check Re beta_c <= 1 - 3/p^2 for every nontrivial class, plus the lemma."""
    ids, beta = sl3_eigenvalues(p)
    bound = 1 - 3 / p ** 2
    re = beta.real[1:]
    margin = float(np.min(bound - re))
    lemma = {n: lemma_angles_check(n) for n in lattice_range}
    return {
        "p": p,
        "bound": bound,
        "max_re_beta": float(re.max()),
        "margin": margin,
        "ok": margin >= 0,
        "lemma_ok": all(all(v.values()) for v in lemma.values()),
    }


# -- SL_2(p) mixed chain: closed-form ratio expansion ---------------------------


def _sl2p_ratio(p: int, bx: np.ndarray, by: np.ndarray, bminus: float) -> np.ndarray:
    # x^r carries (p+1) times the projective character ratio, y^s carries (p-1)
    rs = np.arange(1, (p - 3) // 2 + 1)
    ss = np.arange(1, (p - 1) // 2 + 1)
    out = np.zeros(p)
    for a in range(p):
        if a == 0:
            wx = np.ones(len(rs))
            wy = 1 - 2 * cos2pi(2 * ss, p + 1)
        elif a == p - 1:
            wx = np.ones(len(rs))
            wy = -np.ones(len(ss))
        else:
            wx = cos2pi(a * rs, p - 1)
            wy = -cos2pi((a + 2) * ss, p + 1)
        out[a] = (p + 1) * np.sum(bx * wx) + (p - 1) * np.sum(by * wy) + bminus * (-1) ** a
    return out


def sl2p_mixed_ratio_expansion(p: int, steps: int) -> np.ndarray:
    """K_m^l(0, a) / pi(a) - 1 for the half-natural, half-Steinberg chain.

    The class -1 has eigenvalue 0, so it only shows up at l = 0.
    """
    rs = np.arange(1, (p - 3) // 2 + 1)
    ss = np.arange(1, (p - 1) // 2 + 1)
    bx = 0.5 * (1.0 / p + cos2pi(rs, p - 1))
    by = 0.5 * (-1.0 / p + cos2pi(ss, p + 1))
    return _sl2p_ratio(p, bx ** steps, by ** steps, 0.0 ** steps)


def sl2p_lazy_ratio_expansion(p: int, steps: int) -> np.ndarray:
    """K^l(0, a) / pi(a) - 1 for the lazy natural chain on SL_2(p).

    The y^s terms use cos((2a+4) pi s/(p+1)) with a minus sign, matching the
    projective characters.
    """
    rs = np.arange(1, (p - 3) // 2 + 1)
    ss = np.arange(1, (p - 1) // 2 + 1)
    bx = 0.5 + 0.5 * cos2pi(rs, p - 1)
    by = 0.5 + 0.5 * cos2pi(ss, p + 1)
    return _sl2p_ratio(p, bx ** steps, by ** steps, 0.0 ** steps)


# -- SL_2(2^n) uniform V_j chain -----------------------------------------------


def sl2_2n_uniform_eigenvalues(n: int) -> tuple[np.ndarray, np.ndarray]:
    """beta(x^r), 1 <= r < q/2, and beta(y^s), 1 <= s <= q/2, for the uniform V_j chain."""
    q = 2 ** n
    pw = 2 ** np.arange(n)
    rs = np.arange(1, q // 2)
    ss = np.arange(1, q // 2 + 1)
    bx = cos2pi(np.outer(rs, pw), q - 1).mean(axis=1)
    by = cos2pi(np.outer(ss, pw), q + 1).mean(axis=1)
    return bx, by


def sl2_2n_orbit_diagnostic(n: int, decimals: int = 10) -> dict:
    """Distinct eigenvalue counts next to the cyclic orbit count of binary n-strings."""
    from .families import necklace_count

    bx, by = sl2_2n_uniform_eigenvalues(n)
    nk = necklace_count(n)
    return {
        "n": n,
        "distinct_beta_x": len(set(np.round(bx, decimals))),
        "distinct_beta_y": len(set(np.round(by, decimals))),
        "necklace_count": nk,
        "unnormalized_orbit_sum": n * nk,
        "beta_y1_multiplicity": int(np.sum(np.isclose(by, by[0], atol=10.0 ** -decimals))),
    }
