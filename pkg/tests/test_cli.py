import json
import subprocess
import sys

import pytest

from conftest import FIXTURES, GOLDEN
from motdec.cli import main
from motdec.decomposition import from_json, markdown_report


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("command,fixture,fmt,golden", [
    ("decompose", "quaternion_g2", "md", "decompose_quaternion_g2.md"),
    ("decompose", "quaternion_g2", "json", "decompose_quaternion_g2.json"),
    ("decompose", "real_quadratic_g2", "md", "decompose_real_quadratic_g2.md"),
    ("decompose", "classical_g1", "md", "decompose_classical_g1.md"),
    ("lefschetz", "quaternion_g2", "md", "lefschetz_quaternion_g2.md"),
    ("lefschetz", "quaternion_g4", "md", "lefschetz_quaternion_g4.md"),
    ("lefschetz", "quaternion_g4", "json", "lefschetz_quaternion_g4.json"),
    ("verify-sp", "quaternion_g2", "json", "verify_quaternion_g2.json"),
])
def test_golden(capsys, command, fixture, fmt, golden):
    code, out, _ = run(capsys, command, FIXTURES / f"{fixture}.json", "--format", fmt)
    assert code == 0
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_table_sizes(capsys):
    for fixture, rows in [("classical_g1", 3), ("real_quadratic_g2", 6), ("quaternion_g2", 6)]:
        _, out, _ = run(capsys, "decompose", FIXTURES / f"{fixture}.json", "--format", "json")
        assert len(json.loads(out)["records"]) == rows


def test_json_and_markdown_carry_the_same_data(capsys):
    path = FIXTURES / "real_quadratic_g2.json"
    _, js, _ = run(capsys, "decompose", path, "--format", "json")
    _, md, _ = run(capsys, "decompose", path)
    assert markdown_report(from_json(js)) == md


@pytest.mark.parametrize("fixture,command,code,needle", [
    ("cm_quartic_g4", "lefschetz", 2, "family gap"),
    ("quaternion_definite_g2", "lefschetz", 2, "family gap"),
    ("rank3_g3", "lefschetz", 2, "family gap"),
    ("cm_quartic_g4", "verify-sp", 2, "family gap"),
    ("bad_box", "decompose", 1, "does not divide"),
    ("bad_box", "lefschetz", 1, "does not divide"),
])
def test_exit_codes(capsys, fixture, command, code, needle):
    got, out, err = run(capsys, command, FIXTURES / f"{fixture}.json")
    assert got == code
    assert needle in err
    assert out == ""


def test_missing_file_and_bad_json(capsys, tmp_path):
    assert run(capsys, "decompose", tmp_path / "nope.json")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert run(capsys, "decompose", bad)[0] == 1
    bad.write_text('{"g": 2, "factors": [{"n": 1}]}', encoding="utf-8")
    code, _, err = run(capsys, "decompose", bad)
    assert code == 1 and "'d'" in err


def test_resource_cap_exit(capsys, tmp_path):
    path = tmp_path / "big.json"
    path.write_text(json.dumps({"g": 7, "factors": [{"n": 1, "d": 1}]}), encoding="utf-8")
    code, _, err = run(capsys, "verify-sp", path)
    assert code == 2 and "g <= 6" in err


def test_verify_failure_exits_3(capsys, monkeypatch):
    from motdec.realization import operators

    real = operators.verify

    def broken(preset):
        report = real(preset)
        report.pairing[0] = operators.PairingCheck((0, 0), 0, 1)
        return report

    monkeypatch.setattr(operators, "verify", broken)
    code, out, _ = run(capsys, "verify-sp", FIXTURES / "classical_g1.json")
    assert code == 3
    assert "Overall: fail" in out


def test_beauville_rows(capsys):
    code, out, _ = run(capsys, "beauville", FIXTURES / "quaternion_g2.json", "--codim", "1")
    assert code == 0
    assert "| 0 | 2 | R^(2,0) ⊕ R^(1,1) |" in out
    assert "| 1 | 1 | R^(1,0) |" in out
    assert "| 2 | 0 | R^(0,0) |" in out


def test_product(capsys):
    code, out, _ = run(capsys, "product", "--dims", "1,1", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 9
    assert run(capsys, "product", "--dims", "1,x")[0] == 1


def test_compare_classical(capsys):
    code, out, _ = run(capsys, "compare", FIXTURES / "classical_g3.json", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["lefschetz_multiplicities"] == {"{0}": 14, "{1}": 14, "{2}": 6, "{3}": 1}


def test_console_script_is_byte_stable():
    cmd = [sys.executable, "-m", "motdec.cli", "lefschetz", str(FIXTURES / "quaternion_g4.json")]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert first.decode("utf-8") == (GOLDEN / "lefschetz_quaternion_g4.md").read_text(encoding="utf-8")
