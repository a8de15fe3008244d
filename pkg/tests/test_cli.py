"""Command-line front end: exit codes, output formats, determinism."""

import json
from fractions import Fraction as F

import pytest

from quadwalk.cli import EXIT_BAD_INPUT, EXIT_CONTRACT, EXIT_OK, main
from quadwalk.errors import CoverageGap

S3_DOC = json.dumps(
    {
        "stepset": "S3",
        "weights": {"1,-1": "1", "-1,1": "1", "1,1": "1"},
        "a": "2",
        "b": "2",
    }
)

S1_DOC = json.dumps(
    {
        "stepset": "S1",
        "weights": {"1,-1": "1", "-1,1": "1", "0,1": "1"},
        "a": "3",
        "b": "3/2",
    }
)


@pytest.fixture
def s3_file(tmp_path):
    p = tmp_path / "s3.json"
    p.write_text(S3_DOC)
    return str(p)


@pytest.fixture
def s1_file(tmp_path):
    p = tmp_path / "s1.json"
    p.write_text(S1_DOC)
    return str(p)


def test_classify_algebraic(s3_file, capsys):
    assert main(["classify", "--model", s3_file]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "Algebraic"
    assert "sqrt" in doc["closed_forms"]["Qx0"]


def test_classify_rational(s1_file, capsys):
    assert main(["classify", "--model", s1_file]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "Rational"


def test_classify_not_dalgebraic(tmp_path, capsys):
    p = tmp_path / "s5.json"
    p.write_text(json.dumps({
        "stepset": "S5",
        "weights": {"1,-1": "1", "-1,1": "1", "1,0": "1", "0,1": "1", "1,1": "1"},
        "a": "1", "b": "1",
    }))
    assert main(["classify", "--model", str(p)]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "NotDAlgebraic"


def test_malformed_input_exit_code(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"stepset": "S1", "weights": {}, "a": "1", "b": "1", "junk": 0}')
    assert main(["classify", "--model", str(p)]) == EXIT_BAD_INPUT
    assert main(["classify", "--model", str(tmp_path / "absent.json")]) == EXIT_BAD_INPUT


def test_enumerate_json(s3_file, capsys):
    assert main(["enumerate", "--model", s3_file, "--order", "3"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc[0] == [[0, 0, "1"]]
    assert doc[1] == [[1, 1, "1"]]


def test_matrix_output(s3_file, capsys):
    assert main(["matrix", "--model", s3_file]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"M1", "M2"}
    m1 = doc["M1"]["entries"]
    assert m1 == [list(r) for r in zip(*m1)]  # symmetric


def test_outputs_byte_identical(s3_file, capsys):
    main(["classify", "--model", s3_file])
    first = capsys.readouterr().out
    main(["classify", "--model", s3_file])
    assert capsys.readouterr().out == first


def test_phase_scan_csv(s3_file, capsys):
    rc = main([
        "phase-scan", "--model", s3_file, "--order", "4",
        "--a-values", "1,2", "--b-values", "3",
    ])
    assert rc == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "a,b,n,ratio_x_axis,ratio_y_axis"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 2 * 1 * 5
    n0 = [r for r in rows if r[2] == "0"]
    assert all(r[3] == "1" and r[4] == "1" for r in n0)


def test_contract_violation_exit_code(s3_file, monkeypatch, capsys):
    from quadwalk import cli as cli_mod

    def broken(model, window=5):
        raise CoverageGap("forced for the exit-code contract")

    monkeypatch.setattr(cli_mod.classifier, "classify", broken)
    assert main(["classify", "--model", s3_file]) == EXIT_CONTRACT
    assert "verification failure" in capsys.readouterr().err


def test_verify_subcommand(tmp_path, capsys):
    assert main(["verify", "--order", "6", "--trials", "1", "--seed", "3"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["seed"] == 3
    assert all(c.get("residual", "0") == "0" for c in doc["checks"])
