import json

import pytest

from torusrep.cli import canonical_json, main
from torusrep.field import fm_eq, fmatrix_from_obj, fmatrix_to_obj


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_matrices_classical_t(capsys):
    code, out, _ = run(capsys, "matrices", "--N", "2", "--what", "T", "--eval", "x=-1")
    assert code == 0
    assert "[1,2]" in out and "[0,1]" in out


def test_matrices_classical_tstar(capsys):
    code, out, _ = run(capsys, "matrices", "--N", "2", "--what", "Tstar", "--eval", "x=-1")
    assert code == 0
    assert "[1,0]" in out and "[-1/2,1]" in out


def test_matrices_m_index(capsys):
    code, out, _ = run(
        capsys, "matrices", "--N", "3", "--what", "M", "--index", "0",
        "--eval", "x=-1", "--format", "csv",
    )
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert rows[0][0] == "4" and rows[0][1] == "-8" and rows[1][0] == "1"


def test_matrices_m_requires_index(capsys):
    code, _, err = run(capsys, "matrices", "--N", "3", "--what", "M")
    assert code == 2
    assert "--index" in err


def test_matrices_symbolic_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "matrices", "--N", "2", "--what", "T", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["matrix_name"] == "T" and obj["N"] == 2
    # parse -> re-emit is byte-identical
    assert canonical_json(fmatrix_to_obj(fmatrix_from_obj(obj), name="T", N=2)) == out


def test_matrices_at_root(capsys):
    code, out, _ = run(
        capsys, "matrices", "--N", "2", "--what", "Z", "--eval", "p=7",
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert {"re", "im"} == set(obj[1][0])


def test_matrices_hN_word(capsys):
    code, out, _ = run(
        capsys, "matrices", "--N", "2", "--what", "hN", "--word", "z",
        "--format", "csv",
    )
    assert code == 0
    assert out.splitlines() == ["1,0", "-1/2,1"]


def test_verify_pass_and_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--N", "2..3", "--oracle", "--p", "5..13")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") == 14


def test_verify_corrupted_build_fails(capsys):
    code, out, _ = run(capsys, "verify", "--N", "2", "--corrupt")
    assert code == 1
    assert "FAIL" in out


def test_amu_pretty_and_json(capsys):
    code, out, _ = run(capsys, "amu", "--word", "y z^-1", "--N", "2", "--pmax", "31")
    assert code == 0
    assert "PseudoAnosov" in out and "p0_observed=13" in out
    assert "margin=1e-06" in out and "tolerance=1e-12" in out
    code, out, _ = run(
        capsys, "amu", "--word", "y z^-1", "--N", "2", "--pmax", "31",
        "--format", "json",
    )
    obj = json.loads(out)
    assert obj["classification"] == "PseudoAnosov"
    assert obj["p0_observed"] == 13
    assert len(obj["rows"]) == len(range(5, 32, 2))


def test_amu_non_pa_has_no_p0(capsys):
    code, out, _ = run(
        capsys, "amu", "--word", "y", "--N", "2", "--pmax", "31", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["classification"] == "ReducibleOrCentral"
    assert obj["p0_observed"] is None


def test_amu_parse_error_exit(capsys):
    code, _, err = run(capsys, "amu", "--word", "q", "--N", "2", "--pmax", "31")
    assert code == 2
    assert "position 0" in err


def test_limit_csv_header(capsys):
    code, out, _ = run(
        capsys, "limit", "--word", "y z^-1", "--N", "2", "--p", "5..21",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,spectral_radius,deviation"
    assert len(lines) == 1 + len(range(5, 22, 2))


def test_limit_deterministic(capsys):
    args = ("limit", "--word", "y z^-1", "--N", "3", "--p", "7..15", "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "t.json"
    code, out, _ = run(
        capsys, "matrices", "--N", "2", "--what", "T", "--format", "json",
        "--out", str(target),
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["matrix_name"] == "T"
