import json
import subprocess
import sys
from pathlib import Path

import pytest

from lensplumb import cli

GOLDEN = Path(__file__).resolve().parent.parent / "golden"
NAMES = ["syz", "double_k2", "pagoda_k3"]


def write_spec(tmp_path, data, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


DOUBLE = {"slopes": [{"k": 1, "l": 0, "sign": "+"}, {"k": 0, "l": 1, "sign": "+"}, {"k": 1, "l": 2, "sign": "+"}]}
ATIYAH = {"slopes": [{"k": 1, "l": 1, "sign": "+"}, {"k": 1, "l": 1, "sign": "-"}]}


def run_main(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_defaults(tmp_path):
    spec, checks = cli.parse_spec(write_spec(tmp_path, DOUBLE))
    assert spec.n == 2
    assert (spec.truncation.poly_degree, spec.truncation.winding) == (6, 2)
    assert checks == list(cli.CHECKS)


def test_parse_overrides(tmp_path):
    data = dict(DOUBLE, truncation={"poly_degree": 3, "winding": 1}, checks=["torsion", "geometry"])
    spec, checks = cli.parse_spec(write_spec(tmp_path, data), poly_degree=4)
    assert (spec.truncation.poly_degree, spec.truncation.winding) == (4, 1)
    assert checks == ["geometry", "torsion"]


def test_invalid_slope_exit_1(tmp_path, capsys):
    data = {"slopes": DOUBLE["slopes"] + [{"k": 2, "l": 3, "sign": "+"}]}
    code, out, err = run_main(capsys, ["analyze", "--spec", write_spec(tmp_path, data)])
    assert code == 1 and out == ""
    assert "slope index 3" in err and "k-or-l-one" in err


@pytest.mark.parametrize(
    "text",
    ["not json", "[1, 2]", json.dumps({"slopes": DOUBLE["slopes"], "checks": ["nonsense"]})],
)
def test_unreadable_exit_1(tmp_path, capsys, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    code, out, err = run_main(capsys, ["report", "--spec", str(p)])
    assert code == 1 and err.startswith("lensplumb:")


def test_missing_file_exit_1(tmp_path, capsys):
    code, _, err = run_main(capsys, ["report", "--spec", str(tmp_path / "nope.json")])
    assert code == 1


def test_failed_check_exit_2(tmp_path, capsys, monkeypatch):
    monkeypatch.setitem(cli.RUNNERS, "torsion", lambda spec: {"passed": False})
    code, out, _ = run_main(capsys, ["torsion", "--spec", write_spec(tmp_path, DOUBLE)])
    assert code == 2
    assert json.loads(out)["passed"] is False


def test_analyze(tmp_path, capsys):
    code, out, _ = run_main(capsys, ["analyze", "--spec", write_spec(tmp_path, DOUBLE)])
    rep = json.loads(out)
    assert code == 0
    geo = rep["results"]["geometry"]
    assert geo["core_types"] == ["L(2,1)", "S^3", "S^3"]
    assert geo["curve_types"] == ["(-1,-1)", "(-1,-1)"]
    assert geo["assumptions"]["A"] and geo["assumptions"]["B"] and geo["assumptions"]["C"]
    assert set(rep["results"]) == {"geometry"}
    assert rep["schema_version"] == cli.SCHEMA_VERSION and rep["seed"] == cli.SEED


def test_verify_psi_subcommand(tmp_path, capsys):
    argv = ["verify-psi", "--spec", write_spec(tmp_path, DOUBLE), "--winding", "1", "--truncation", "4"]
    code, out, _ = run_main(capsys, argv)
    psi = json.loads(out)["results"]["psi"]
    assert code == 0 and psi["relations"]["passed"] and psi["blocks"]["passed"]
    assert (psi["winding"], psi["poly_degree"]) == (1, 4)


def test_contraction_subcommand(tmp_path, capsys):
    code, out, _ = run_main(capsys, ["contraction", "--spec", write_spec(tmp_path, ATIYAH)])
    res = json.loads(out)["results"]["contraction"]
    assert code == 0 and res["dim_vector"] == [[1]]
    code, out, _ = run_main(capsys, ["contraction", "--spec", write_spec(tmp_path, ATIYAH), "--field", "fp:2"])
    res = json.loads(out)["results"]["contraction"]
    assert res["dim_vector"] == [["infinite"]]


def test_torsion_and_braid_subcommands(tmp_path, capsys):
    code, out, _ = run_main(capsys, ["torsion", "--spec", write_spec(tmp_path, DOUBLE)])
    assert code == 0 and json.loads(out)["results"]["torsion"]["finite"]
    code, out, _ = run_main(capsys, ["braid-check", "--spec", write_spec(tmp_path, DOUBLE)])
    res = json.loads(out)["results"]["braid"]
    assert code == 0 and res["nontrivial_fraction"] == 1.0


def test_timings_flag(tmp_path, capsys):
    path = write_spec(tmp_path, ATIYAH)
    _, out, _ = run_main(capsys, ["analyze", "--spec", path])
    assert "seconds" not in out
    _, out, _ = run_main(capsys, ["analyze", "--spec", path, "--timings"])
    assert "seconds" in json.loads(out)["results"]["geometry"]


def test_out_file(tmp_path, capsys):
    dest = tmp_path / "r.json"
    code, out, _ = run_main(capsys, ["analyze", "--spec", write_spec(tmp_path, ATIYAH), "--out", str(dest)])
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["passed"]


@pytest.mark.parametrize("name", NAMES)
def test_golden_reports(name, capsys):
    code, out, _ = run_main(capsys, ["report", "--spec", str(GOLDEN / f"{name}.spec.json")])
    assert code == 0
    assert out == (GOLDEN / f"{name}.report.json").read_text()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lensplumb", "analyze", "--spec", str(GOLDEN / "syz.spec.json")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["geometry"]["core_types"] == ["S^3", "S^3"]
