"""Invariant suite over the default family matrix.

Each family instance is checked independently, so the suite can fan out
over processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import jordan
from .chain import build_kernel, distance_series, exact_rows, lazy, stationarity_residual
from .errors import TensorWalkError
from .families import (
    FamilyId,
    character_data,
    default_hold,
    family,
    make_spec,
    mckay_matrix,
    alpha_values,
)
from .spectral import (
    brauer_spectrum,
    eigen_residuals,
    lemma_angles_check,
    mckay_conjugacy_residual,
    sl2_2n_orbit_diagnostic,
    sl2p_mixed_ratio_expansion,
    sl3_eigen_bound,
    spectral_row,
)

DEFAULT_MATRIX = {
    "sl2p": (5, 7, 11, 13, 23),
    "sl2p2": (5, 7, 11),
    "sl2_2n": tuple(range(2, 11)),
    "sl3p": (11, 17, 23),
    "quantum": tuple(range(3, 42, 2)),
    "bdn": tuple(range(3, 21)),
}
_P_FAMILIES = ("sl2p", "sl2p2", "sl3p")

EIGEN_TOL = 1e-9
BIORTH_TOL = 1e-8
ORACLE_TOL = 1e-8
ORACLE_STEPS = 64
CHAR_TOL = 1e-6
JORDAN_TOL = 1e-9
PAIRING_TOL = 1e-10
JORDAN_EXACT_MAX_N = 31
STEINBERG_MAX_N = 21
MONOTONE_STEPS = 200


@dataclass(frozen=True)
class Check:
    family: str
    param: int
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok  " if self.ok else "FAIL"
        return f"{status} {self.family}({self.param}) {self.name} {self.detail}".rstrip()


def instances(tag: str = "all", max_p: int | None = None, max_n: int | None = None) -> list[tuple[str, int]]:
    tags = list(DEFAULT_MATRIX) if tag == "all" else [tag]
    out = []
    for t in tags:
        if t not in DEFAULT_MATRIX:
            raise KeyError(t)
        limit = max_p if t in _P_FAMILIES else max_n
        out.extend((t, v) for v in DEFAULT_MATRIX[t] if limit is None or v <= limit)
    return out


def _oracle_error(k, sd, steps: int) -> float:
    err = 0.0
    for l, er in enumerate(exact_rows(k, k.state_labels[0], steps, max_states=2048)):
        err = max(err, float(np.abs(er.floats() - spectral_row(sd, l)).max()))
    return err


def _group_checks(tag: str, param: int) -> Iterable[tuple[str, bool, str]]:
    fam = family(tag, param)
    cd = character_data(FamilyId(tag, param))
    row = np.abs(cd.row_orthogonality() - np.eye(len(fam.states()))).max()
    col = np.abs(cd.column_orthogonality() - np.eye(cd.n_classes)).max()
    yield "catalog.orthogonality", max(row, col) < CHAR_TOL, f"row={row:.2e} col={col:.2e}"

    for tensor in fam.tensor_choices():
        spec = make_spec(FamilyId(tag, param), tensor)
        k = build_kernel(spec)
        yield f"chain.stationary[{tensor}]", stationarity_residual(k) == 0, "exact"
        res = mckay_conjugacy_residual(spec, kernel=k)
        yield f"chain.mckay[{tensor}]", res == 0, f"residual={res}"

        worst = 0.0
        for i in range(len(spec.components)):
            X = cd.irr_values
            vals = (X * alpha_values(spec, cd, i)[None, :]).T
            mult = cd.decompose(vals).T  # mult[i, j]: j inside state_i (x) alpha
            worst = max(worst, float(np.abs(mult - mckay_matrix(spec, i)).max()))
        yield f"catalog.tensor_rule[{tensor}]", worst < CHAR_TOL, f"max={worst:.2e}"

        hold = default_hold(tag, tensor)
        kk = lazy(k, hold) if hold else k
        sd = brauer_spectrum(spec, hold)
        r, l = eigen_residuals(kk, sd)
        b = sd.biorthogonality_residual()
        yield f"spectral.eigen[{tensor}]", max(r, l) < EIGEN_TOL and b < BIORTH_TOL, f"right={r:.2e} left={l:.2e} biorth={b:.2e}"
        if tensor in ("natural", "mixed", "uniform", "sum") or tag in ("sl2p", "bdn"):
            err = _oracle_error(kk, sd, ORACLE_STEPS)
            yield f"spectral.oracle[{tensor}]", err < ORACLE_TOL, f"max={err:.2e}"
        ds = distance_series(kk, kk.state_labels[0], MONOTONE_STEPS, check_monotone=False)
        yield f"chain.linf_monotone[{tensor}]", ds.linf_monotone(), ""

    if tag == "sl2p":
        k = build_kernel(make_spec(FamilyId(tag, param), "mixed"))
        pi = k.pi_float
        err = 0.0
        for l, er in enumerate(exact_rows(k, k.state_labels[0], 20)):
            if l:
                err = max(err, float(np.abs(er.floats() / pi - 1 - sl2p_mixed_ratio_expansion(param, l)).max()))
        yield "spectral.mixed_ratio_expansion", err < ORACLE_TOL, f"max={err:.2e}"
    if tag == "sl3p":
        yield "catalog.dims_closed_form", fam.dims() == fam.dims_closed_form(), ""
        rep = sl3_eigen_bound(param, lattice_range=range(7, 8))
        yield "spectral.sl3_bound", rep["ok"], f"margin={rep['margin']:.4f}"
    if tag == "sl2_2n":
        diag = sl2_2n_orbit_diagnostic(param)
        yield "spectral.uniform_beta_y1_multiplicity", diag["beta_y1_multiplicity"] == param, str(diag)


def _quantum_checks(n: int) -> Iterable[tuple[str, bool, str]]:
    for tensor in family("quantum", n).tensor_choices():
        spec = make_spec(FamilyId("quantum", n), tensor)
        k = build_kernel(spec)
        yield f"chain.stationary[{tensor}]", stationarity_residual(k) == 0, "exact"
        res = mckay_conjugacy_residual(spec, kernel=k)
        yield f"chain.mckay[{tensor}]", res == 0, f"residual={res}"
        ds = distance_series(k, k.state_labels[0], MONOTONE_STEPS, check_monotone=False)
        yield f"chain.linf_monotone[{tensor}]", ds.linf_monotone(), ""

    jd = jordan.jordan_data(n)
    res = jordan.jordan_residuals(jd)
    worst = max(res.values())
    yield "jordan.relations", worst < JORDAN_TOL, f"max={worst:.2e}"
    gap = float(np.abs(jd.d - jd.d_alt).max())
    yield "jordan.pairing", gap < PAIRING_TOL, f"max={gap:.2e}"
    yield "jordan.d_nonzero", bool(np.all(jd.d != 0)), f"min|d|={np.abs(jd.d).min():.3g}"
    ratio = float(np.abs(jd.dp).max() / n ** 5)
    yield "jordan.dprime_bound", ratio <= jordan.DPRIME_A, f"max|d'|/n^5={ratio:.5f}"
    resc = jordan.rescaled_pairing_residual(jd)
    yield "jordan.rescaled_pairing", resc < JORDAN_TOL, f"max={resc:.2e}"

    k = build_kernel(make_spec(FamilyId("quantum", n)))
    lmax = 10 * n * n if n <= JORDAN_EXACT_MAX_N else 500
    err = 0.0
    for l, er in enumerate(exact_rows(k, 0, lmax, max_steps=lmax)):
        err = max(err, float(np.abs(er.floats() - jordan.jordan_power_row(n, l, jd)).max()))
    yield "jordan.power_row_oracle", err < ORACLE_TOL, f"l<={lmax} max={err:.2e}"

    if n <= STEINBERG_MAX_N:
        st = jordan.steinberg_spectrum(n)
        bad = [k for k, v in st["checks"].items() if not v]
        yield "jordan.steinberg_spectrum", st["ok"], ",".join(bad)


def verify_instance(tag: str, param: int) -> list[Check]:
    gen = _quantum_checks(param) if tag == "quantum" else _group_checks(tag, param)
    out = []
    try:
        for name, ok, detail in gen:
            out.append(Check(tag, param, name, bool(ok), detail))
    except TensorWalkError as exc:
        out.append(Check(tag, param, "error", False, f"{type(exc).__name__}: {exc}"))
    return out


def global_checks() -> list[Check]:
    lem = {n: lemma_angles_check(n) for n in range(7, 201)}
    bad = [n for n, v in lem.items() if not all(v.values())]
    return [Check("lattice", 200, "spectral.cosine_inequalities", not bad, f"failing n={bad}" if bad else "n=7..200")]


def run_verify(tag: str = "all", max_p: int | None = None, max_n: int | None = None, jobs: int = 1) -> list[Check]:
    todo = instances(tag, max_p, max_n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(verify_instance, *zip(*todo)))
    else:
        results = [verify_instance(t, v) for t, v in todo]
    checks = [c for r in results for c in r]
    if tag in ("all", "sl3p"):
        checks.extend(global_checks())
    return checks
