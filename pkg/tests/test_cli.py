import json
from fractions import Fraction

import pytest

from tensorwalk import SCHEMA_VERSION
from tensorwalk.chain import build_kernel, distance_series
from tensorwalk.cli import main
from tensorwalk.families import make_spec, spec_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kernel_json_equals_catalog(capsys):
    code, out, _ = run(capsys, "kernel", "--family", "sl2p", "--p", "5", "--tensor", "natural", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    K = [[Fraction(x) for x in row] for row in blob["kernel"]]
    assert K == [list(r) for r in build_kernel(make_spec(("sl2p", 5))).rows]
    assert blob["hold"] == "0/1" and blob["stationary"][0] == "1/24"


def test_kernel_lazy_and_csv(capsys):
    code, out, _ = run(capsys, "kernel", "--family", "sl2p", "--p", "5", "--lazy", "1/2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "from,to,prob"
    assert "0,0,1/2" in lines and "0,1,1/2" in lines


def test_dump_spec(capsys):
    code, out, _ = run(capsys, "kernel", "--family", "quantum", "--n", "3", "--dump-spec")
    assert code == 0
    assert json.loads(out) == json.loads(json.dumps(spec_to_json(make_spec(("quantum", 3)))))


def test_stationary(capsys):
    code, out, _ = run(capsys, "stationary", "--family", "quantum", "--n", "3")
    assert code == 0
    assert out.splitlines()[1:] == ["0,2/9,0.2222222222222222", "1,4/9,0.4444444444444444", "2,1/3,0.3333333333333333"]


def test_distance_matches_library(capsys, tmp_path):
    path = tmp_path / "d.csv"
    code, _, _ = run(capsys, "distance", "--family", "quantum", "--n", "9", "--lmax", "500", "--lazy", "0", "--output", str(path))
    assert code == 0
    text = path.read_text()
    ds = distance_series(build_kernel(make_spec(("quantum", 9))), 0, 500)
    assert text == ds.to_csv()
    assert len(text.splitlines()) == 502


def test_distance_json_and_start(capsys):
    code, out, _ = run(capsys, "distance", "--family", "sl2p2", "--p", "5", "--lmax", "3", "--start", "(1,1)", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["step"] == [0, 1, 2, 3] and len(blob["tv"]) == 4


def test_spectrum_group(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "bdn", "--n", "4")
    assert code == 0
    rows = json.loads(out)
    assert set(rows[0]) == {"class_id", "eigenvalue_re", "eigenvalue_im", "residual_right", "residual_left"}
    assert rows[0]["eigenvalue_re"] == 1.0
    assert max(max(r["residual_right"], r["residual_left"]) for r in rows) < 1e-9
    # lazy by default for BD_n: all eigenvalues in [0, 1]
    assert min(r["eigenvalue_re"] for r in rows) >= -1e-12


def test_spectrum_quantum(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "quantum", "--n", "9")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4
    assert rows[0]["d_direct"] == pytest.approx(-15.7517037, abs=1e-6)
    code, _, err = run(capsys, "spectrum", "--family", "quantum", "--n", "9", "--tensor", "steinberg")
    assert code == 1


def test_simulate_byte_identical(capsys):
    argv = ("simulate", "--family", "sl2p", "--p", "11", "--seed", "3", "--samples", "5000", "--steps", "50")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b and a.startswith("state,count,freq\n")
    counts = [int(line.split(",")[1]) for line in a.splitlines()[1:]]
    assert sum(counts) == 5000


@pytest.mark.parametrize(
    "argv",
    [
        ("kernel", "--family", "sl3p", "--p", "13"),
        ("kernel", "--family", "sl2p"),
        ("kernel", "--family", "sl2p", "--p", "5", "--n", "3"),
        ("kernel", "--family", "sl2p2", "--p", "5", "--tensor", "steinberg-mixed"),
        ("kernel", "--family", "sl2p", "--p", "5", "--lazy", "2"),
        ("distance", "--family", "sl2p", "--p", "5", "--lmax", "3", "--start", "9"),
        ("simulate", "--family", "sl2p", "--p", "5", "--seed", "1", "--samples", "0", "--steps", "3"),
        ("spectrum", "--family", "sl2_2n", "--n", "3", "--tensor", "v9"),
    ],
)
def test_parameter_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


@pytest.mark.parametrize("argv", [("kernel", "--family", "foo"), ("nonsense",), ("kernel", "--bogus")])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    assert exc.value.code == 1
    assert "usage" in capsys.readouterr().err


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == SCHEMA_VERSION


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--family", "quantum", "--max-n", "9")
    assert code == 0
    assert out.strip().endswith("checks passed")
    assert "FAIL" not in out


def test_consistency_failure_exit_2(capsys, monkeypatch):
    import tensorwalk.cli as cli
    from tensorwalk.errors import ConsistencyError

    def broken(*a, **k):
        raise ConsistencyError("pi K != pi")

    monkeypatch.setattr(cli, "build_kernel", broken)
    code, _, err = run(capsys, "kernel", "--family", "sl2p", "--p", "5")
    assert code == 2 and "consistency" in err


def test_verify_failure_exit_2(capsys, monkeypatch):
    import tensorwalk.verify as verify

    monkeypatch.setattr(verify, "ORACLE_TOL", -1.0)
    code, out, _ = run(capsys, "verify", "--family", "bdn", "--max-n", "3")
    assert code == 2 and "FAIL" in out
