import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from planeq import __version__, cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    table = list(csv.reader(io.StringIO(text)))
    return table[0], [[float(x) for x in row] for row in table[1:]]


def test_entropy_curve(capsys):
    code, out, _ = run(capsys, "entropy-curve", "--grid", "5")
    assert code == 0
    header, data = rows(out)
    assert header == ["r", "S"]
    assert data[0] == [0.0, pytest.approx(np.log(2), abs=1e-15)]
    assert data[-1] == [1.0, 0.0]
    assert data[2][1] == pytest.approx(0.5623, abs=1e-4)


def test_csv_round_trips_doubles(capsys):
    _, out, _ = run(capsys, "entropy-curve", "--grid", "7")
    line = out.splitlines()[2]
    r, s = line.split(",")
    assert float(s) == cli.von_neumann_entropy(float(r))
    assert len(s.replace(".", "").replace("-", "").lstrip("0").split("e")[0]) <= 17


def test_lower_symbol_angle(capsys):
    code, out, _ = run(capsys, "lower-symbol-angle", "--r", "1", "--grid", "9")
    assert code == 0
    _, data = rows(out)
    phi, a = np.array(data).T
    assert phi[1] == pytest.approx(np.pi / 4)
    assert a[1] == pytest.approx(np.pi - 0.5, abs=1e-12)
    assert a.min() == pytest.approx(np.pi - 0.5) and a.max() == pytest.approx(np.pi + 0.5)
    _, out, _ = run(capsys, "lower-symbol-angle", "--r", "0", "--grid", "9")
    assert np.all(np.array(rows(out)[1])[:, 1] == np.pi)


def test_lindblad_json(capsys):
    code, out, _ = run(capsys, "lindblad", "--t1", "1", "--dt", "1e-3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["provenance"]["command"] == "lindblad"
    assert doc["provenance"]["version"] == __version__
    assert doc["provenance"]["parameters"]["h1"] == 0.5
    assert doc["columns"] == ["t", "r", "phi", "S"]
    assert doc["rows"][-1][1] == pytest.approx(np.exp(-1), abs=1e-8)
    assert doc["analytic_residual"] < 1e-8
    assert doc["formula_residual"] < 1e-8


def test_lindblad_without_dissipation(capsys):
    _, out, _ = run(capsys, "lindblad", "--h1", "0", "--h3", "0", "--r", "0.7", "--t1", "0.5",
                    "--dt", "0.01")
    _, data = rows(out)
    assert all(row[1] == 0.7 for row in data)


def test_lindblad_unequal_rates_has_no_analytic_field(capsys):
    _, out, _ = run(capsys, "lindblad", "--h1", "0.2", "--h3", "0.6", "--t1", "0.2",
                    "--dt", "0.01", "--format", "json")
    doc = json.loads(out)
    assert "analytic_residual" not in doc and doc["formula_residual"] < 1e-8


def test_bell_scan(capsys):
    code, out, _ = run(capsys, "bell-scan", "--grid", "9")
    assert code == 0
    header, data = rows(out)
    assert header == ["zeta", "eta", "lhs", "rhs", "violated"]
    assert len(data) == 81
    assert all(row[4] == 0 for row in data if row[1] == 0.0)
    hit = [row for row in data if row[0] == pytest.approx(np.pi / 8)
           and row[1] == pytest.approx(np.pi / 8)]
    assert hit and hit[0][4] == 1


def test_measure_sim(capsys):
    argv = ["measure-sim", "--phi-s", str(np.pi / 3), "--n", "100000", "--seed", "5",
            "--format", "json"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    doc = json.loads(out)
    assert doc["seed"] == 5 and doc["provenance"]["seed"] == 5
    assert doc["probabilities"]["parallel"] == pytest.approx(0.25, abs=1e-15)
    n = doc["counts"]["parallel"] + doc["counts"]["perpendicular"]
    assert n == 100000
    assert abs(doc["counts"]["parallel"] - 25000) <= 3 * np.sqrt(n * 0.25 * 0.75)
    _, again, _ = run(capsys, *argv)
    assert json.loads(again)["counts"] == doc["counts"]


def test_sphere_check(capsys):
    _, out, _ = run(capsys, "sphere-check", "--r", "0.6", "--format", "json")
    doc = json.loads(out)
    assert doc["pauli_factors"] == pytest.approx([0.2] * 3, abs=1e-12)
    assert doc["residuals"]["resolution"] < 1e-9
    _, out, _ = run(capsys, "sphere-check", "--r", "0", "--format", "json")
    assert json.loads(out)["pauli_factors"] == pytest.approx([0, 0, 0], abs=1e-15)


def test_scalar_csv_layout(capsys):
    _, out, _ = run(capsys, "sphere-check", "--r", "1")
    lines = out.splitlines()
    assert lines[0] == "key,value"
    assert lines[1].startswith("r,1")
    assert any(line.startswith("pauli_factors.2,") for line in lines)


@pytest.mark.parametrize("argv", [
    ["entropy-curve", "--grid", "1"],
    ["lower-symbol-angle", "--r", "1.5"],
    ["lindblad", "--h2", "0.1"],
    ["lindblad", "--dt", "-1"],
    ["bell-scan", "--grid", "4"],
    ["measure-sim", "--n", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["entropy-curve", "--grid", "many"])
    assert exc.value.code == 2


def test_validation_failure_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "resolution_residual_s2", lambda r: 1.0)
    code, _, err = run(capsys, "sphere-check")
    assert code == 3 and "validation" in err


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nr = 0.5\ngrid = 4  # small\nformat = json\n")
    _, out, _ = run(capsys, "lower-symbol-angle", "--config", str(cfg))
    doc = json.loads(out)
    assert doc["provenance"]["parameters"]["r"] == 0.5 and len(doc["rows"]) == 4
    _, out, _ = run(capsys, "lower-symbol-angle", "--config", str(cfg), "--r", "1")
    assert json.loads(out)["provenance"]["parameters"]["r"] == 1.0
    bad = tmp_path / "bad.cfg"
    bad.write_text("colour = blue\n")
    assert run(capsys, "entropy-curve", "--config", str(bad))[0] == 2
    assert run(capsys, "entropy-curve", "--config", str(tmp_path / "missing.cfg"))[0] == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "s.csv"
    code, out, _ = run(capsys, "entropy-curve", "--grid", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "r,S"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "planeq", "--version"], capture_output=True,
                          text=True)
    assert proc.returncode == 0 and __version__ in proc.stdout
