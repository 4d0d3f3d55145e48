import pytest

from tensorwalk.verify import DEFAULT_MATRIX, Check, global_checks, instances, run_verify, verify_instance


def test_instances_filtering():
    got = instances("all", max_p=7, max_n=4)
    assert ("sl2p", 5) in got and ("sl2p", 11) not in got
    assert ("sl3p", 11) not in got
    assert ("bdn", 4) in got and ("bdn", 5) not in got
    assert ("quantum", 3) in got and ("quantum", 5) not in got
    assert len(instances()) == sum(len(v) for v in DEFAULT_MATRIX.values())
    with pytest.raises(KeyError):
        instances("nope")


@pytest.mark.parametrize("tag,v", [("bdn", 5), ("sl2p", 7), ("sl2p2", 5), ("sl2_2n", 4), ("sl3p", 11), ("quantum", 7)])
def test_every_check_passes(tag, v):
    checks = verify_instance(tag, v)
    assert checks and all(c.ok for c in checks), [c.line() for c in checks if not c.ok]


def test_quantum_checks_cover_jordan_and_steinberg():
    names = {c.name for c in verify_instance("quantum", 5)}
    assert {"jordan.relations", "jordan.pairing", "jordan.power_row_oracle", "jordan.steinberg_spectrum"} <= names


def test_global_lattice_check():
    (c,) = global_checks()
    assert c.ok


def test_parallel_equals_serial():
    a = run_verify("bdn", max_n=6)
    b = run_verify("bdn", max_n=6, jobs=2)
    assert [(c.family, c.param, c.name, c.ok) for c in a] == [(c.family, c.param, c.name, c.ok) for c in b]


def test_check_line():
    assert Check("sl2p", 5, "x", True, "d").line() == "ok   sl2p(5) x d"
    assert Check("sl2p", 5, "x", False).line() == "FAIL sl2p(5) x"
