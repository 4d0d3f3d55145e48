"""Seeded Monte Carlo sampling of a kernel.

Randomness comes from numpy's counter-based Philox generator keyed by the
seed.  Uniforms are drawn row-major from one stream: walk ``i`` uses stream
positions ``i*steps`` through ``(i+1)*steps - 1``.  They are generated in
fixed-size blocks, so results do not depend on block size or backend.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .chain import Kernel
from .errors import ParameterError

_BLOCK_DRAWS = 1 << 22


@dataclass(frozen=True)
class SimConfig:
    seed: int
    num_samples: int
    start: object
    steps: int

    def __post_init__(self):
        if self.num_samples < 1:
            raise ParameterError("num_samples must be >= 1")
        if self.steps < 0:
            raise ParameterError("steps must be >= 0")
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ParameterError("seed must fit in 64 unsigned bits")


def _generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=int(seed)))


def final_states(k: Kernel, cfg: SimConfig, block_draws: int = _BLOCK_DRAWS) -> np.ndarray:
    """State index reached by each of the ``num_samples`` walks."""
    i0 = k.index(cfg.start)
    if cfg.steps == 0:
        return np.full(cfg.num_samples, i0, dtype=np.int64)
    rng = _generator(cfg.seed)
    per_block = max(1, block_draws // cfg.steps)
    cum = k.cumulative
    out = np.empty(cfg.num_samples, dtype=np.int64)
    for lo in range(0, cfg.num_samples, per_block):
        hi = min(cfg.num_samples, lo + per_block)
        U = rng.random((hi - lo, cfg.steps))
        out[lo:hi] = _kernels.walk(cum, i0, U)
    return out


def sample_path(k: Kernel, cfg: SimConfig, trajectory: bool = False):
    """Run the first walk of the stream; return its final state or full path."""
    i0 = k.index(cfg.start)
    rng = _generator(cfg.seed)
    U = rng.random((1, cfg.steps))
    path = [i0]
    s = i0
    cum = k.cumulative
    for t in range(cfg.steps):
        s = int(_kernels.walk(cum, s, U[:, t : t + 1])[0])
        path.append(s)
    labels = [k.state_labels[i] for i in path]
    return labels if trajectory else labels[-1]


def empirical_counts(k: Kernel, cfg: SimConfig) -> np.ndarray:
    return np.bincount(final_states(k, cfg), minlength=k.size)


def empirical_row(k: Kernel, cfg: SimConfig) -> np.ndarray:
    """Normalized histogram of final states over ``num_samples`` walks."""
    return empirical_counts(k, cfg) / cfg.num_samples


def state_name(label) -> str:
    return "(" + ",".join(map(str, label)) + ")" if isinstance(label, tuple) else str(label)


def counts_to_csv(k: Kernel, counts: np.ndarray) -> str:
    total = int(counts.sum())
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["state", "count", "freq"])
    for label, c in zip(k.state_labels, counts):
        w.writerow([state_name(label), int(c), repr(float(c / total))])
    return buf.getvalue()
