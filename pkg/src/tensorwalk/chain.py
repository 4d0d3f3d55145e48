"""Exact-rational Markov kernels, chain transforms, powers and distances."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import BudgetError, ConsistencyError, ParameterError
from .families import ChainSpec, stationary as catalog_stationary

ZERO = Fraction(0)
ONE = Fraction(1)

DEFAULT_MAX_STATES = 512
DEFAULT_MAX_STEPS = 4096
MONOTONE_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class Kernel:
    """Row-stochastic matrix of exact rationals with its stationary vector.

    ``dims`` (state dimensions) are kept so that exact powers can run on the
    similar matrix D K D^-1, whose entries have small denominators.
    """

    rows: tuple  # tuple of tuples of Fraction
    state_labels: tuple
    stationary: tuple
    dims: tuple
    nonzero: tuple = field(repr=False)  # per row: ((j, K[i][j]), ...)

    @property
    def size(self) -> int:
        return len(self.rows)

    @cached_property
    def dense(self) -> np.ndarray:
        P = np.zeros((self.size, self.size))
        for i, nz in enumerate(self.nonzero):
            for j, v in nz:
                P[i, j] = float(v)
        return P

    @cached_property
    def pi_float(self) -> np.ndarray:
        return np.array([float(x) for x in self.stationary])

    @cached_property
    def cumulative(self) -> np.ndarray:
        """Per-row cumulative sums, accumulated exactly then rounded once."""
        C = np.zeros((self.size, self.size))
        for i, row in enumerate(self.rows):
            acc = ZERO
            for j, v in enumerate(row):
                acc += v
                C[i, j] = float(acc)
        return C

    def index(self, state) -> int:
        try:
            return self.state_labels.index(state)
        except ValueError:
            raise KeyError(f"unknown state {state!r}") from None

    @cached_property
    def _scaled(self) -> tuple[int, tuple]:
        """(L, B) with D K D^-1 = B / L and B a sparse nonnegative integer matrix."""
        d = self.dims
        entries = [[(j, v * d[i] / d[j]) for j, v in nz] for i, nz in enumerate(self.nonzero)]
        L = 1
        for row in entries:
            for _, v in row:
                L = lcm(L, v.denominator)
        B = tuple(tuple((j, int(v * L)) for j, v in row) for row in entries)
        return L, B


def _make_kernel(rows, labels, pi, dims) -> Kernel:
    nonzero = tuple(tuple((j, v) for j, v in enumerate(r) if v) for r in rows)
    k = Kernel(tuple(tuple(r) for r in rows), tuple(labels), tuple(pi), tuple(dims), nonzero)
    check_kernel(k)
    return k


def stationarity_residual(k: Kernel) -> Fraction:
    """max_j |(pi K)_j - pi_j| computed exactly."""
    acc = [ZERO] * k.size
    for i, nz in enumerate(k.nonzero):
        w = k.stationary[i]
        if not w:
            continue
        for j, v in nz:
            acc[j] += w * v
    return max(abs(a - b) for a, b in zip(acc, k.stationary))


def check_kernel(k: Kernel) -> None:
    for i, nz in enumerate(k.nonzero):
        if sum(v for _, v in nz) != ONE:
            raise ConsistencyError(f"row {i} does not sum to 1")
        if any(v < 0 or v > 1 for _, v in nz):
            raise ConsistencyError(f"row {i} has an entry outside [0, 1]")
    if sum(k.stationary) != ONE:
        raise ConsistencyError("stationary vector does not sum to 1")
    if stationarity_residual(k) != 0:
        raise ConsistencyError("pi K != pi: the decomposition table is inconsistent")


def build_kernel(spec: ChainSpec) -> Kernel:
    """K(s, t) = sum over components of w * mult(t in s (x) alpha) dim(t) / (alpha(1) dim(s))."""
    n = spec.size
    d = spec.dims
    rows = [[ZERO] * n for _ in range(n)]
    for comp in spec.components:
        for i, row in enumerate(comp.decomp):
            scale = comp.weight / (comp.alpha_dim * d[i])
            for j, m in row:
                rows[i][j] += scale * m * d[j]
    return _make_kernel(rows, spec.states, catalog_stationary(spec), d)


def lazy(k: Kernel, hold=Fraction(1, 2)) -> Kernel:
    """hold * I + (1 - hold) * K."""
    hold = Fraction(hold)
    if not 0 <= hold <= 1:
        raise ParameterError(f"hold must lie in [0, 1], got {hold}")
    rows = []
    for i, r in enumerate(k.rows):
        new = [(1 - hold) * v if v else ZERO for v in r]
        new[i] += hold
        rows.append(new)
    return _make_kernel(rows, k.state_labels, k.stationary, k.dims)


def mix(kernels: Sequence[tuple[Kernel, Fraction]]) -> Kernel:
    """Weighted sum of kernels on a common state space sharing one stationary law."""
    if not kernels:
        raise ParameterError("mix needs at least one kernel")
    weights = [Fraction(w) for _, w in kernels]
    if any(w < 0 for w in weights) or sum(weights) != 1:
        raise ParameterError("mixture weights must be nonnegative and sum to 1")
    base = kernels[0][0]
    for k, _ in kernels[1:]:
        if k.state_labels != base.state_labels:
            raise ParameterError("mixed kernels must share a state space")
    n = base.size
    rows = [[ZERO] * n for _ in range(n)]
    for (k, _), w in zip(kernels, weights):
        for i, nz in enumerate(k.nonzero):
            for j, v in nz:
                rows[i][j] += w * v
    return _make_kernel(rows, base.state_labels, base.stationary, base.dims)


# -- powers -------------------------------------------------------------------


@dataclass(frozen=True)
class ExactRow:
    """K^l(start, t) = num[t] * dims[t] / (dims[start] * den)."""

    num: tuple
    den: int
    dims: tuple
    start: int

    def fractions(self) -> tuple:
        d0 = self.dims[self.start]
        return tuple(Fraction(u * d, d0 * self.den) for u, d in zip(self.num, self.dims))

    def floats(self) -> np.ndarray:
        # int / int true division is correctly rounded for any size.
        d0 = self.dims[self.start]
        den = d0 * self.den
        return np.array([(u * d) / den for u, d in zip(self.num, self.dims)])


def _check_budget(k: Kernel, steps: int, max_states: int, max_steps: int) -> None:
    if k.size > max_states or steps > max_steps:
        raise BudgetError(
            f"exact power refused: {k.size} states and l={steps} exceed the budget "
            f"({max_states} states, l <= {max_steps})"
        )


def exact_rows(
    k: Kernel,
    start,
    lmax: int,
    *,
    max_states: int = DEFAULT_MAX_STATES,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> Iterator[ExactRow]:
    """Yield K^l(start, .) exactly for l = 0..lmax."""
    _check_budget(k, lmax, max_states, max_steps)
    i0 = k.index(start)
    L, B = k._scaled
    u = [0] * k.size
    u[i0] = 1
    den = 1
    for _ in range(lmax + 1):
        yield ExactRow(tuple(u), den, k.dims, i0)
        nxt = [0] * k.size
        for i, ui in enumerate(u):
            if ui:
                for j, b in B[i]:
                    nxt[j] += ui * b
        u = nxt
        den *= L


def power_row(
    k: Kernel,
    start,
    steps: int,
    mode: str = "exact",
    *,
    max_states: int = DEFAULT_MAX_STATES,
    max_steps: int = DEFAULT_MAX_STEPS,
):
    """Row ``start`` of K^steps: a tuple of Fractions (exact) or a float array."""
    if steps < 0:
        raise ParameterError("steps must be nonnegative")
    if mode == "exact":
        row = None
        for row in exact_rows(k, start, steps, max_states=max_states, max_steps=max_steps):
            pass
        return row.fractions()
    if mode == "float":
        i0 = k.index(start)
        return np.linalg.matrix_power(k.dense, steps)[i0].copy()
    raise ParameterError(f"mode must be 'exact' or 'float', got {mode!r}")


# -- distances ----------------------------------------------------------------


def tv_distance(d1, d2) -> float:
    a = np.asarray(d1, dtype=float)
    b = np.asarray(d2, dtype=float)
    if a.shape != b.shape:
        raise ParameterError("distributions must have the same length")
    return float(0.5 * np.abs(a - b).sum())


def linf_distance(row, pi) -> float:
    """max_y |row(y) / pi(y) - 1|."""
    r = np.asarray(row, dtype=float)
    q = np.asarray(pi, dtype=float)
    if r.shape != q.shape:
        raise ParameterError("distributions must have the same length")
    if np.any(q <= 0):
        raise ParameterError("stationary distribution has a zero entry")
    return float(np.abs(r / q - 1.0).max())


@dataclass(frozen=True)
class DistanceSeries:
    steps: np.ndarray
    tv: np.ndarray
    linf: np.ndarray

    def __len__(self) -> int:
        return len(self.steps)

    def to_csv(self) -> str:
        lines = ["step,tv,linf"]
        for l, t, m in zip(self.steps, self.tv, self.linf):
            lines.append(f"{int(l)},{float(t)!r},{float(m)!r}")
        return "\n".join(lines) + "\n"

    def linf_monotone(self, slack: float = MONOTONE_SLACK) -> bool:
        return bool(np.all(np.diff(self.linf) <= slack))


def distance_series(
    k: Kernel,
    start,
    lmax: int,
    *,
    max_states: int = 4096,
    check_monotone: bool = True,
) -> DistanceSeries:
    """tv and l-infinity distance of K^l(start, .) from pi for l = 0..lmax."""
    if lmax < 0:
        raise ParameterError("lmax must be nonnegative")
    if k.size > max_states:
        raise BudgetError(f"{k.size} states exceed the dense limit of {max_states}")
    i0 = k.index(start)
    tv, linf = _kernels.distance_series(k.dense, i0, int(lmax), k.pi_float)
    s = DistanceSeries(np.arange(lmax + 1), tv, linf)
    if check_monotone and not s.linf_monotone():
        raise ConsistencyError("l-infinity distance increased along the series")
    return s
