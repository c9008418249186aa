import json
import subprocess
import sys

import pytest

from uniruled import fano
from uniruled.cli import main
from uniruled.serialize import dumps


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_exceptional(capsys):
    code, out, _ = run(capsys, "classify", "--dim", "3", "--degree", "27", "--sections", "19")
    assert code == 0
    assert "ExceptionalP3Cubic" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--dim", "3", "--degree", "24", "--sections", "17", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["outcome"] == "BigUniruledSystemOnly"
    assert data["clifford_bound"] == "-8/1"
    assert [r["rule"] for r in data["fired_rules"]] == ["CC"]


def test_classify_rejects_dim_one(capsys):
    code, _, err = run(capsys, "classify", "--dim", "1", "--degree", "1", "--sections", "1")
    assert code == 1 and "error" in err


def test_classify_rejects_surfaces(capsys):
    code, _, err = run(capsys, "classify", "--dim", "2", "--degree", "3", "--sections", "4")
    assert code == 1 and "surface case out of scope" in err


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["classify", "--dim", "3"],
    ["classify", "--dim", "3", "--degree", "2", "--sections", "4", "--bogus"],
    ["veronese"],
    ["veronese", "--a", "1", "--sweep", "3"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert "usage" in err


def test_fano_verify(capsys):
    code, out, _ = run(capsys, "fano-table", "--verify")
    assert code == 0
    assert "20/20 rows verified" in out


def test_fano_verify_corrupted(capsys, monkeypatch):
    monkeypatch.setattr(fano, "TABLE", fano.tampered("g", d=33))
    code, out, _ = run(capsys, "fano-table", "--verify")
    assert code == 2
    assert "19/20 rows verified" in out and "mismatch in row (g)" in out


def test_fano_row_and_csv(capsys, tmp_path):
    path = tmp_path / "t.csv"
    code, out, _ = run(capsys, "fano-table", "--row", "g", "--csv", str(path))
    assert code == 0
    assert "d=32" in out and "1/1 rows verified" in out
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "label,ambient,section,rho_num,rho_den,K2,d,n"
    assert lines[1].startswith("g,") and lines[1].endswith(",4,5,2,32,21")


def test_fano_unknown_row(capsys):
    code, _, _ = run(capsys, "fano-table", "--row", "z")
    assert code == 1


def test_bundle_text_and_json(capsys):
    code, out, _ = run(capsys, "bundle", "--a", "2")
    assert code == 0
    assert "expected, assumes vanishing" in out
    code, out, _ = run(capsys, "bundle", "--genus", "1", "--twist", "0", "--a", "2", "--json")
    inv = json.loads(out)["invariants"]
    assert inv["H_cubed"] == "24/1" and inv["chi_H"] == "12/1" and inv["c2_dot_H"] == "6/1"


def test_bundle_not_big(capsys):
    code, out, _ = run(capsys, "bundle", "--a", "0")
    assert code == 0 and "not big" in out


def test_veronese_single(capsys):
    code, out, _ = run(capsys, "veronese", "--a", "2", "--seed", "42", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["report"]["distinct_roots"] == 6 and data["report"]["squarefree"] is True
    assert data["seed_used"] == 42


def test_veronese_sweep(capsys):
    code, out, _ = run(capsys, "veronese", "--sweep", "5")
    assert code == 0
    assert "d = 2n-10 and k = (n-5)/2 for a = 1..5" in out


@pytest.mark.parametrize("argv", [
    ["classify", "--dim", "3", "--degree", "27", "--sections", "19", "--json"],
    ["classify", "--dim", "3", "--degree", "11", "--sections", "12", "--smooth", "--very-ample", "--json"],
    ["fano-table", "--json"],
    ["bundle", "--a", "3", "--json"],
    ["veronese", "--a", "1", "--json"],
    ["veronese", "--sweep", "4", "--json"],
])
def test_json_round_trips(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    text = out.rstrip("\n")
    assert json.dumps(json.loads(text), sort_keys=True, indent=2, ensure_ascii=False) == text
    assert dumps(json.loads(text)) == text


def test_no_color_env(monkeypatch, capsys):
    monkeypatch.setenv("NO_COLOR", "1")
    _, out, _ = run(capsys, "classify", "--dim", "3", "--degree", "27", "--sections", "19")
    assert "\033[" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "uniruled", "classify", "--dim", "5",
                           "--degree", "9", "--sections", "16"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "DegreeOne" in proc.stdout and "C12" in proc.stdout
