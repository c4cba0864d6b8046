"""Command-line surface: records, exit codes, determinism."""

import json

import pytest

from normbase.cli import EX_INVALID, EX_OK, EX_USAGE, EX_VERIFY, main
from normbase.poly2 import CyclicPoly

GOLDEN_VECTOR = "1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,1"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_field_find(capsys):
    code, out, _ = run(capsys, "field", "find", "--degree", "16")
    assert code == EX_OK
    assert "0x1002B" in out or "0x1002" in out  # deterministic smallest modulus
    code, out, _ = run(capsys, "--json", "field", "find", "--degree", "16")
    record = json.loads(out)
    assert record["degree"] == 16
    assert record["modulus_terms"].startswith("x^16")


def test_normal_find_and_check(capsys):
    code, out, _ = run(capsys, "--json", "normal", "find", "--degree", "8")
    assert code == EX_OK
    record = json.loads(out)
    assert record["normal"] is True and record["verified"] is True
    element = record["element"]
    code, out, _ = run(capsys, "--json", "normal", "check", "--degree", "8",
                       "--element", element)
    assert json.loads(out)["normal"] is True


def test_normal_find_seeded_deterministic(capsys):
    _, out1, _ = run(capsys, "--json", "normal", "find", "--degree", "10", "--seed", "7")
    _, out2, _ = run(capsys, "--json", "normal", "find", "--degree", "10", "--seed", "7")
    assert out1 == out2
    assert json.loads(out1)["construction"]["seed"] == 7


def test_vector_command(capsys):
    code, out, _ = run(capsys, "--json", "vector", "--degree", "16",
                       "--modulus", "0x1002D", "--element", "pow:1,126")
    assert code == EX_OK
    record = json.loads(out)
    assert record["vector"] == [1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0]


def test_prescribe_golden(capsys):
    code, out, _ = run(capsys, "--json", "prescribe", "--degree", "16",
                       "--modulus", "0x1002D", "--vector", GOLDEN_VECTOR,
                       "--force-beta", "pow:1,126")
    assert code == EX_OK
    record = json.loads(out)
    assert record["vector"] == [int(b) for b in GOLDEN_VECTOR.split(",")]
    assert record["construction"]["change"] == "1,1,0,0,0,1,1,0,0,1,1,0,0,0,1,0"
    assert record["normal"] is True and record["verified"] is True


def test_prescribe_invalid_vector_exit_code(capsys):
    code, _, err = run(capsys, "prescribe", "--degree", "16",
                       "--vector", ",".join(["1"] + ["0"] * 15))
    assert code == EX_INVALID
    assert "There isn't such a normal element" in err


def test_prescribe_malformed_vector_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["prescribe", "--degree"])  # missing value
    assert exc.value.code == EX_USAGE
    # well-formed flags but unusable vector text is a semantic failure
    code, _, err = run(capsys, "prescribe", "--degree", "4", "--vector", "1,2")
    assert code == EX_INVALID


def test_compose_command(capsys):
    code, out, _ = run(capsys, "--json", "compose", "--degree", "12",
                       "--vector-pow2", "1,1,0,1", "--vector-odd", "1,0,0")
    assert code == EX_OK
    record = json.loads(out)
    assert record["vector"] == [1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0]


def test_weight3_command(capsys):
    code, out, _ = run(capsys, "--json", "weight3", "--degree", "12")
    assert code == EX_OK
    record = json.loads(out)
    assert sum(record["vector"]) == 3


def test_audit_characterization(capsys):
    code, out, _ = run(capsys, "audit", "--degree", "8", "--mode", "characterization")
    assert code == EX_OK
    assert "achievable 4" in out and "exact" in out


def test_audit_factorization(capsys):
    code, out, _ = run(capsys, "--json", "audit", "--degree", "8", "--mode", "factorization")
    assert code == EX_OK
    record = json.loads(out)
    assert record["targets"] == 4 and record["ok"] is True


def test_audit_necessary(capsys):
    code, out, _ = run(capsys, "--json", "audit", "--degree", "12", "--mode", "necessary")
    assert code == EX_OK
    record = json.loads(out)
    assert record["normal_elements"] == 1536 and record["ok"] is True


def test_audit_selfdual(capsys):
    code, out, _ = run(capsys, "--json", "audit", "--degree", "8", "--mode", "selfdual")
    assert code == EX_OK
    assert json.loads(out)["ok"] is True


def test_audit_violation_exit_code(capsys, monkeypatch):
    from normbase import cli, oracle

    broken = oracle.CharacterizationReport(8, 3, 4, (CyclicPoly(8, 1),), ())
    monkeypatch.setattr(cli.oracle, "check_characterization", lambda spec: broken)
    code, out, _ = run(capsys, "audit", "--degree", "8", "--mode", "characterization")
    assert code == EX_VERIFY
    assert "VIOLATION" in out


def test_json_output_byte_identical(capsys):
    args = ("--json", "prescribe", "--degree", "16", "--vector", "1,1," + "0," * 13 + "1")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    assert out1.count("\n") == 1  # single-line record


def test_usage_errors(capsys):
    for argv in (["frobnicate"], ["normal"], ["audit", "--degree", "8", "--mode", "nope"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == EX_USAGE


def test_bad_modulus_is_semantic_error(capsys):
    code, _, err = run(capsys, "vector", "--degree", "4", "--modulus", "0x11",
                       "--element", "0x2")
    assert code == EX_INVALID  # x^4+1 is reducible
    assert "reducible" in err
