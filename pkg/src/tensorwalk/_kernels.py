"""Hot loops, with numba and pure-numpy implementations.

The backend is chosen by the environment variable ``TENSORWALK_BACKEND``
(``numba`` or ``numpy``).  When unset, numba is used if it imports.  Both
backends consume the same uniforms in the same order, so sampling results
are identical across backends.
"""

from __future__ import annotations

import os

import numpy as np

_REQUESTED = os.environ.get("TENSORWALK_BACKEND", "").strip().lower()
if _REQUESTED not in ("", "numba", "numpy"):
    raise ImportError(f"TENSORWALK_BACKEND must be 'numba' or 'numpy', got {_REQUESTED!r}")

try:
    if _REQUESTED == "numpy":
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False
    if _REQUESTED == "numba":
        raise

BACKEND = "numba" if HAVE_NUMBA else "numpy"


# -- numpy ----------------------------------------------------------------------


def walk_numpy(cum: np.ndarray, start: int, U: np.ndarray) -> np.ndarray:
    """Final states of len(U) walks; step t of walk i uses U[i, t]."""
    n, steps = U.shape
    states = np.full(n, start, dtype=np.int64)
    for t in range(steps):
        u = U[:, t]
        nxt = np.empty_like(states)
        for s in np.unique(states):
            mask = states == s
            # first j with u < cum[s, j]
            nxt[mask] = np.searchsorted(cum[s], u[mask], side="right")
        states = nxt
    return states


def distance_series_numpy(P: np.ndarray, start: int, lmax: int, pi: np.ndarray):
    row = np.zeros(P.shape[0])
    row[start] = 1.0
    tv = np.empty(lmax + 1)
    linf = np.empty(lmax + 1)
    for l in range(lmax + 1):
        tv[l] = 0.5 * np.abs(row - pi).sum()
        linf[l] = np.abs(row / pi - 1.0).max()
        row = row @ P
    return tv, linf


# -- numba ----------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _search_right(a, x):
        "Index of the first element of sorted ``a`` strictly greater than x."
        lo, hi = 0, a.shape[0]
        while lo < hi:
            mid = (lo + hi) // 2
            if x < a[mid]:
                hi = mid
            else:
                lo = mid + 1
        return lo

    @njit(cache=True)
    def walk_numba(cum, start, U):
        n, steps = U.shape
        out = np.empty(n, dtype=np.int64)
        for i in range(n):
            s = start
            for t in range(steps):
                s = _search_right(cum[s], U[i, t])
            out[i] = s
        return out

    @njit(cache=True)
    def distance_series_numba(P, start, lmax, pi):
        m = P.shape[0]
        row = np.zeros(m)
        row[start] = 1.0
        tv = np.empty(lmax + 1)
        linf = np.empty(lmax + 1)
        for l in range(lmax + 1):
            acc = 0.0
            worst = 0.0
            for j in range(m):
                acc += abs(row[j] - pi[j])
                r = abs(row[j] / pi[j] - 1.0)
                if r > worst:
                    worst = r
            tv[l] = 0.5 * acc
            linf[l] = worst
            nxt = np.zeros(m)
            for i in range(m):
                ri = row[i]
                if ri != 0.0:
                    for j in range(m):
                        nxt[j] += ri * P[i, j]
            row = nxt
        return tv, linf


def walk(cum: np.ndarray, start: int, U: np.ndarray) -> np.ndarray:
    if BACKEND == "numba":
        return walk_numba(np.ascontiguousarray(cum), np.int64(start), np.ascontiguousarray(U))
    return walk_numpy(cum, start, U)


def distance_series(P: np.ndarray, start: int, lmax: int, pi: np.ndarray):
    if BACKEND == "numba":
        return distance_series_numba(np.ascontiguousarray(P), np.int64(start), np.int64(lmax), pi)
    return distance_series_numpy(P, start, lmax, pi)
