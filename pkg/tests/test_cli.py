"""The command-line front end: spec'd outputs, exit codes, JSON reports."""

import json

from quadchow.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_rho(capsys):
    code, out, _ = run_cli(capsys, "compute", "--n", "3", "rho 1")
    assert code == 0
    assert out.strip() == "1 x l0 + l0 x 1"


def test_compute_internal_product(capsys):
    code, out, _ = run_cli(capsys, "compute", "--n", "3", "h*h")
    assert code == 0
    assert out.strip() == "2 l1"


def test_compute_z_on_quadric(capsys):
    code, out, _ = run_cli(capsys, "compute", "--n", "5", "Z 0 5")
    assert code == 0
    assert out.strip() == "l0"


def test_compute_flag_class_json(capsys):
    code, out, _ = run_cli(capsys, "compute", "--n", "5", "--format", "json", "W 1 0")
    assert code == 0
    data = json.loads(out)
    assert data["sheets"][0] == [{"coeff": 1, "window": [1, 2, 3]}]


def test_compute_mod2(capsys):
    code, out, _ = run_cli(capsys, "compute", "--n", "3", "--coeff", "z2", "h*h")
    assert code == 0
    assert out.strip() == "0"


def test_compute_parse_error_exit2(capsys):
    code, _, err = run_cli(capsys, "compute", "--n", "3", "nonsense word")
    assert code == 2
    assert "parse" in err


def test_compute_range_error_exit3(capsys):
    code, _, err = run_cli(capsys, "compute", "--n", "3", "rho 7")
    assert code == 3
    assert "range" in err


def test_verify_text_and_exit0(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma24", "--n", "3")
    assert code == 0
    assert "suite lemma24:" in out
    assert "FAIL" not in out


def test_verify_json_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "degrees-gd", "--n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["suite"] == "degrees-gd"
    assert data["n"] == 4
    for case in data["cases"]:
        assert set(case) == {"id", "params", "status", "lhs", "rhs"}
        assert case["status"] == "pass"


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "lemma99", "--n", "3")
    assert code == 2
    assert "unknown suite" in err


def test_verify_deep_guard(capsys):
    code, _, err = run_cli(capsys, "verify", "lemma24", "--n", "7")
    assert code == 2
    assert "--deep" in err
    code, out, _ = run_cli(capsys, "verify", "lemma21", "--n", "7")
    assert code == 0  # quadric-power-only suites do not need the flag


def test_verify_all_with_jobs(capsys):
    code, out, _ = run_cli(capsys, "verify", "all", "--n", "3", "--jobs", "2")
    assert code == 0
    assert out.count("suite ") == 12


def test_edi_command(tmp_path, capsys):
    payload = {"n": 7, "marks": [[1, 0]], "witt_index": 2}
    path = tmp_path / "square.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run_cli(capsys, "edi", "--input", str(path))
    assert code == 0
    data = json.loads(out)
    assert [3, 0] in data["propagated_marks"]
    assert data["inconsistencies"] == [[1, 0]]


def test_edi_schema_violation(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"marks": []}))
    code, _, err = run_cli(capsys, "edi", "--input", str(path))
    assert code == 2
    assert "missing field" in err
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "edi", "--input", str(path))
    assert code == 2


def test_deterministic_output(capsys):
    code1, out1, _ = run_cli(capsys, "compute", "--n", "4", "delta 2")
    code2, out2, _ = run_cli(capsys, "compute", "--n", "4", "delta 2")
    assert code1 == code2 == 0
    assert out1 == out2
