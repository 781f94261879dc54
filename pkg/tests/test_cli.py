import json
import subprocess
import sys

import pytest

from qdissect.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_sgf_csv(capsys):
    code, out, _ = run(capsys, "expand", "--sgf", "6,3", "--precision", "10",
                       "--format", "csv")
    assert code == 0
    rows = [l for l in out.splitlines() if not l.startswith("#")]
    assert len(rows) == 11
    assert rows[3] == "3,6"


def test_expand_single_row(capsys):
    code, out, _ = run(capsys, "expand", "--expr", "F(1)", "--precision", "0")
    assert code == 0
    assert out.splitlines()[-1] == "0,1"


def test_expand_json_mod(capsys):
    code, out, _ = run(capsys, "expand", "--expr", "F(2)/F(1)^2",
                       "--precision", "5", "--mod", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc == {"schema": 1, "precision": 5, "min_exp": 0, "modulus": 4,
                   "coefficients": [1, 2, 0, 0, 2, 0]}


def test_expand_params(capsys):
    code, out, _ = run(capsys, "expand", "--expr", "T(-1,i,-1,k-i)",
                       "--params", "i=1,k=3", "--precision", "2")
    assert code == 0
    assert out.splitlines()[1:] == ["0,1", "1,-1", "2,-1"]


def test_expand_laurent(capsys):
    code, out, _ = run(capsys, "expand", "--expr", "q^(-1)+1",
                       "--precision", "1")
    assert code == 0
    assert "-1,1" in out.splitlines()


@pytest.mark.parametrize("argv", [
    ["expand", "--expr", "P(1,1)*X"],
    ["expand", "--expr", "F(1)", "--sgf", "5,1"],
    ["expand"],
    ["expand", "--sgf", "5"],
    ["expand", "--sgf", "5,3"],
    ["expand", "--expr", "1/(2*F(1))"],
])
def test_expand_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_parse_error_names_token(capsys):
    _, _, err = run(capsys, "expand", "--expr", "P(1,1)*X")
    assert "'X'" in err


def test_verify_p3(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "p3",
                       "--precision", "150")
    assert code == 0
    assert json.loads(out)["status"] == "verified"


def test_verify_d3(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "d3", "--params",
                       "i=1,k=5", "--precision", "100")
    doc = json.loads(out)
    assert code == 0
    assert doc["params"] == {"i": 1, "k": 5}
    assert doc["schema"] == 1


def test_verify_mod(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "q24q8",
                       "--precision", "60")
    assert code == 0
    # the congruence survives mod 8 but not mod 16
    code, out, _ = run(capsys, "verify", "--identity", "q24q8",
                       "--precision", "60", "--mod", "8")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--identity", "q24q8",
                       "--precision", "60", "--mod", "16")
    assert code == 1
    assert json.loads(out)["mismatch"]["exponent"] == 1


@pytest.mark.parametrize("argv", [
    ["verify", "--identity", "d3", "--params", "i=5,k=5"],
    ["verify", "--identity", "nope"],
    ["verify", "--identity", "d3", "--params", "i=1;k=5"],
    ["verify", "--identity", "d3", "--params", "i=x,k=5"],
    ["verify", "--identity", "p3", "--mod", "1"],
])
def test_verify_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_missing_identity_flag():
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2


def test_oracle_pbar(capsys):
    code, out, _ = run(capsys, "oracle", "--what", "pbar", "--n-max", "10")
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 11
    assert rows[3].split()[:3] == ["3", "8", "8"]
    assert all(r.endswith("yes") for r in rows)


def test_oracle_s_single_row(capsys):
    code, out, _ = run(capsys, "oracle", "--what", "s", "--params", "K=6,i=3",
                       "--n-max", "0", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["K,i,n,count", "6,3,0,1"]


@pytest.mark.parametrize("what", ["abar", "bbar"])
def test_oracle_abar_bbar(capsys, what):
    code, out, _ = run(capsys, "oracle", "--what", what, "--params",
                       "k=3,i=3,j=1", "--n-max", "20", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["rows"]) == 21
    assert all(r["match"] for r in doc["rows"])


@pytest.mark.parametrize("argv", [
    ["oracle", "--what", "pbar", "--n-max", "31"],
    ["oracle", "--what", "abar", "--params", "k=3,i=3"],
    ["oracle", "--what", "abar", "--params", "k=3,i=3,j=0"],
    ["oracle", "--what", "s", "--params", "K=6"],
    ["oracle", "--what", "pbar", "--params", "k=2"],
    ["oracle", "--what", "pbar", "--n-max", "-1"],
])
def test_oracle_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_suite_empty(capsys):
    code, out, _ = run(capsys, "suite", "--k-max", "1")
    assert code == 0
    assert "0/0 verified" in out


def test_suite_small_passes(tmp_path, capsys):
    path = tmp_path / "suite.json"
    code, out, _ = run(capsys, "suite", "--k-max", "10", "--n-max", "50",
                       "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert all(r["status"] == "verified" for r in doc)
    assert all(r["schema"] == 1 for r in doc)
    assert out.strip().endswith(f"{len(doc)}/{len(doc)} verified")


def test_suite_to_twenty_reports_odd_K_failures(tmp_path, capsys):
    # the mod-4 family for K = 3, i = 0 (mod 4) breaks at K = 11, 15, 19
    path = tmp_path / "suite.json"
    code, out, _ = run(capsys, "suite", "--k-max", "20", "--n-max", "100",
                       "--out", str(path))
    assert code == 1
    failed = sorted(r["identity_id"] for r in json.loads(path.read_text())
                    if r["status"] == "failed")
    assert failed == ["S_{11,4}(4n+3) = 0 mod 4", "S_{15,4}(4n+3) = 0 mod 4",
                      "S_{19,4}(4n+3) = 0 mod 4", "S_{19,8}(4n+3) = 0 mod 4"]


def test_suite_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "suite", "--k-max", "3", "--n-max", "5",
                       "--out", str(tmp_path / "missing" / "x.json"))
    assert code == 2
    assert "cannot write" in err


def test_scan_superset_of_nine_claims(capsys):
    code, out, _ = run(capsys, "scan", "--d", "9", "--mod", "4", "--k-max",
                       "12", "--n-max", "100", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["status"] == "verified up to n=100"
    found = {(f["K"], f["i"], f["a"]) for f in doc["findings"]}
    for K, i, a in [(5, 1, 3), (5, 1, 6), (8, 2, 5), (8, 2, 8), (11, 4, 3)]:
        assert (K, i, a) in found


def test_scan_bad_args(capsys):
    code, _, _ = run(capsys, "scan", "--d", "0", "--mod", "4")
    assert code == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "scan", "--d", "4", "--mod", "4", "--k-max", "10",
                "--n-max", "40", "--format", "json")
    second = run(capsys, "scan", "--d", "4", "--mod", "4", "--k-max", "10",
                 "--n-max", "40", "--format", "json")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qdissect", "expand",
                           "--expr", "F(1)", "--precision", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1:] == ["0,1", "1,-1", "2,-1"]
