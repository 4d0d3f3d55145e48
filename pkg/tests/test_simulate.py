import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tensorwalk import _kernels
from tensorwalk.chain import build_kernel, lazy, power_row, tv_distance
from tensorwalk.errors import ParameterError
from tensorwalk.families import make_spec
from tensorwalk.simulate import (
    SimConfig,
    counts_to_csv,
    empirical_counts,
    empirical_row,
    final_states,
    sample_path,
)


def kernel(tag, v, tensor="natural", hold=0):
    return lazy(build_kernel(make_spec((tag, v), tensor)), hold)


def test_config_validation():
    with pytest.raises(ParameterError):
        SimConfig(1, 0, 0, 1)
    with pytest.raises(ParameterError):
        SimConfig(1, 1, 0, -1)
    with pytest.raises(ParameterError):
        SimConfig(-1, 1, 0, 1)


def test_zero_steps_stays_put():
    k = kernel("sl2p", 5)
    assert sample_path(k, SimConfig(3, 1, 2, 0)) == 2
    assert (final_states(k, SimConfig(3, 10, 2, 0)) == 2).all()


def test_forced_first_step():
    k = kernel("sl2p", 5)
    assert (final_states(k, SimConfig(11, 1000, 0, 1)) == 1).all()


def test_single_sample_is_point_mass():
    row = empirical_row(kernel("sl2p", 7), SimConfig(5, 1, 0, 9))
    assert row.sum() == 1 and (row > 0).sum() == 1


def test_quantum_last_state_one_step():
    n, N = 9, 10 ** 6
    k = kernel("quantum", n)
    counts = empirical_counts(k, SimConfig(2024, N, 8, 1))
    assert counts[0] + counts[7] == N
    p = 1 / 9
    sigma = np.sqrt(N * p * (1 - p))
    assert abs(counts[0] - N * p) < 3 * sigma


def test_trajectory_is_a_path_of_the_chain():
    k = kernel("quantum", 7)
    path = sample_path(k, SimConfig(8, 1, 0, 60), trajectory=True)
    assert len(path) == 61 and path[0] == 0
    for a, b in zip(path, path[1:]):
        assert k.rows[k.index(a)][k.index(b)] > 0


def test_trajectory_ends_where_bulk_walk_ends():
    k = kernel("sl2p", 11, hold=0.5)
    cfg = SimConfig(77, 5, 0, 40)
    assert sample_path(k, cfg) == k.state_labels[final_states(k, cfg)[0]]


@pytest.mark.parametrize(
    "tag,v,tensor,hold,steps",
    [("sl2p", 11, "natural", 0.5, 50), ("quantum", 9, "natural", 0, 30), ("sl2p2", 5, "natural", 0.5, 40)],
)
def test_empirical_matches_exact(tag, v, tensor, hold, steps):
    k = kernel(tag, v, tensor, hold)
    cfg = SimConfig(12345, 10 ** 5, k.state_labels[0], steps)
    exact = [float(x) for x in power_row(k, cfg.start, steps)]
    assert tv_distance(empirical_row(k, cfg), exact) < 0.02


def test_reproducible_and_block_independent():
    k = kernel("sl2p", 13, hold=0.5)
    cfg = SimConfig(99, 3000, 0, 25)
    a = final_states(k, cfg)
    assert (a == final_states(k, cfg)).all()
    assert (a == final_states(k, cfg, block_draws=25 * 7)).all()
    assert (a == final_states(k, cfg, block_draws=1)).all()
    assert (final_states(k, SimConfig(100, 3000, 0, 25)) != a).any()


def test_prefix_stability():
    # walk i only uses its own slice of the stream
    k = kernel("quantum", 9)
    small = final_states(k, SimConfig(4, 100, 0, 17))
    big = final_states(k, SimConfig(4, 1000, 0, 17))
    assert (small == big[:100]).all()


def test_csv_format():
    k = kernel("sl2p", 5)
    text = counts_to_csv(k, np.array([1, 0, 3, 0, 0]))
    assert text == "state,count,freq\n0,1,0.25\n1,0,0.0\n2,3,0.75\n3,0,0.0\n4,0,0.0\n"
    k2 = kernel("sl2p2", 5)
    assert counts_to_csv(k2, np.eye(k2.size, dtype=int)[0]).splitlines()[1] == '"(0,0)",1,1.0'


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
@given(st.sampled_from([("sl2p", 7), ("quantum", 9), ("bdn", 5), ("sl2_2n", 3)]), st.integers(0, 2 ** 32), st.integers(1, 30))
def test_backends_agree(case, seed, steps):
    k = kernel(*case, hold=0.25)
    U = np.random.default_rng(seed).random((200, steps))
    a = _kernels.walk_numpy(k.cumulative, 0, U)
    b = _kernels.walk_numba(k.cumulative, 0, U)
    assert (a == b).all()
    tv1, l1 = _kernels.distance_series_numpy(k.dense, 0, 50, k.pi_float)
    tv2, l2 = _kernels.distance_series_numba(k.dense, 0, 50, k.pi_float)
    assert np.allclose(tv1, tv2, rtol=0, atol=1e-13) and np.allclose(l1, l2, rtol=0, atol=1e-11)


def test_inversion_boundaries():
    cum = np.array([[0.25, 0.25, 1.0]])
    U = np.array([[0.0], [0.2499], [0.25], [0.999]])
    assert _kernels.walk_numpy(cum, 0, U).tolist() == [0, 0, 2, 2]
    if _kernels.HAVE_NUMBA:
        assert _kernels.walk_numba(cum, 0, U).tolist() == [0, 0, 2, 2]


def _cli_simulate(backend):
    env = dict(os.environ, TENSORWALK_BACKEND=backend)
    cmd = [sys.executable, "-m", "tensorwalk.cli", "simulate", "--family", "quantum", "--n", "9", "--seed", "7", "--samples", "20000", "--steps", "40"]
    return subprocess.run(cmd, env=env, capture_output=True, check=True).stdout


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
def test_backends_byte_identical_via_cli():
    assert _cli_simulate("numpy") == _cli_simulate("numba")


def test_bad_backend_flag():
    env = dict(os.environ, TENSORWALK_BACKEND="fortran")
    proc = subprocess.run([sys.executable, "-c", "import tensorwalk._kernels"], env=env, capture_output=True)
    assert proc.returncode != 0 and b"TENSORWALK_BACKEND" in proc.stderr
