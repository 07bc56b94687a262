import csv
import io
import json
import math
import subprocess
import sys

import pytest

from polyconst.cli import main
from polyconst.constants import big_K, hl_constant
from polyconst.tables import build_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_K_example(capsys):
    code, out, _ = run(capsys, "K", "--q", "1", "--p", "inf", "--format", "csv", "--full")
    assert code == 0
    (row,) = rows_of(out)
    assert float(row["K"]) == pytest.approx(1 + math.sqrt(2), abs=1e-12)
    assert row["p"] == "inf"


def test_K_scan_options(capsys):
    code, out, _ = run(capsys, "K", "--q", "4/3", "--p", "1", "--scan", "128", "--tol", "1e-10",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["K"] == pytest.approx(4.11346, abs=1e-5)


def test_text_default_six_digits(capsys):
    code, out, _ = run(capsys, "hl", "--p", "3")
    assert code == 0
    assert "1.5874 " in out or "1.5874\n" in out or " 1.5874" in out
    assert "1.58740105" not in out


def test_global_flags_before_command(capsys):
    code, out, _ = run(capsys, "--format", "json", "--full", "hl", "--p", "2.2")
    assert code == 0
    assert json.loads(out)[0]["value"] == float(hl_constant(2.2).value)


def test_table_remark_p4inf_csv(capsys):
    code, out, _ = run(capsys, "table", "--name", "remark-p4inf", "--format", "csv")
    assert code == 0
    rows = rows_of(out)
    assert [r["p"] for r in rows][:3] == ["4", "5", "6"]
    assert rows[0]["maximum"] == "1.41421" and rows[0]["attainment"] == "—"
    assert rows[1]["maximum"] == "1.48488" and rows[1]["reference_attainment"] == "0.99930"


def test_csv_round_trip_exact(capsys):
    code, out, _ = run(capsys, "table", "--name", "remark-p24", "--format", "csv", "--full")
    assert code == 0
    _, rows = build_table("remark-p24")
    for parsed, row in zip(rows_of(out), rows):
        for col in ("p", "q", "maximum", "attainment"):
            assert float(parsed[col]) == row[col]


def test_json_round_trip_exact(capsys):
    code, out, _ = run(capsys, "K", "--q", "4/3", "--p", "8", "--format", "json", "--full")
    r = big_K(4 / 3, 8)
    (row,) = json.loads(out)
    assert row["K"] == float(r.value) and row["parameter"] == r.attaining_parameter


def test_power_bound(capsys):
    code, out, _ = run(capsys, "power-bound", "--m", "10", "--same-sign", "--format", "csv")
    assert code == 0
    (row,) = rows_of(out)
    assert row["degree"] == "20"
    assert float(row["per_degree_ratio"]) == pytest.approx(1.4687, abs=5e-5)
    code, out, _ = run(capsys, "power-bound", "--m", "10", "--format", "csv")
    assert rows_of(out)[0]["method"] == "optimized"


@pytest.mark.parametrize("argv", [
    ["k", "--q", "inf", "--p", "inf"], ["k-est", "--q", "2", "--p", "4", "--grid", "32"],
    ["phi-psi", "--p", "12"], ["baseline", "--m", "2", "--p", "8"], ["degree5"],
    ["table", "--name", "k-table"], ["verify", "--q", "inf", "--p", "inf", "--samples", "500"],
])
@pytest.mark.parametrize("fmt", ["text", "csv", "json"])
def test_commands_succeed(capsys, argv, fmt):
    code, out, _ = run(capsys, *argv, "--format", fmt)
    assert code == 0 and out.strip()
    if fmt == "json":
        assert isinstance(json.loads(out), list)


def test_figure_phi_psi_diff(capsys):
    code, out, _ = run(capsys, "figure", "--name", "phi-psi-diff", "--from", "4", "--to", "50",
                       "--points", "100", "--format", "csv", "--full")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 100
    assert all(float(r["difference"]) >= -1e-10 for r in rows)


@pytest.mark.parametrize("p,expected", [("3", 1.58740), ("2.4", 1.78179)])
def test_figure_f_curves(capsys, p, expected):
    code, out, _ = run(capsys, "figure", "--name", "f-curves", "--p", p, "--from", "0", "--to", "1",
                       "--points", "500", "--format", "csv", "--full")
    assert code == 0
    assert max(float(r["value"]) for r in rows_of(out)) == pytest.approx(expected, abs=5e-5)


@pytest.mark.parametrize("argv", [
    ["nope"], [], ["K", "--q", "1"], ["K", "--q", "0.5", "--p", "1"], ["K", "--q", "x", "--p", "1"],
    ["hl", "--p", "2"], ["k", "--q", "2", "--p", "3"], ["table", "--name", "nope"],
    ["figure", "--name", "phi-psi-diff", "--from", "3", "--to", "10"],
    ["figure", "--name", "f-curves", "--from", "0", "--to", "1"],
    ["baseline", "--m", "1", "--p", "4"], ["K", "--q", "1", "--p", "1", "--scan", "10"],
    ["hl", "--p", "3", "--format", "xml"],
])
def test_usage_and_domain_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and err


def test_numerical_failure_exit_3(capsys, monkeypatch):
    from polyconst import cli
    from polyconst.optimize import ConvergenceError, NonFiniteObjective

    def boom(*a, **k):
        raise NonFiniteObjective(3, 0.5, math.nan)

    monkeypatch.setattr(cli, "hl_constant", boom)
    assert run(capsys, "hl", "--p", "3")[0] == 3

    def stall(*a, **k):
        raise ConvergenceError("bracket did not shrink")

    monkeypatch.setattr(cli, "hl_constant", stall)
    assert run(capsys, "hl", "--p", "3")[0] == 3


def test_verify_failure_exit_1(capsys, monkeypatch):
    from polyconst import cli
    from polyconst.oracle import sandwich_check

    monkeypatch.setattr(cli, "sandwich_check",
                        lambda q, p, samples, seed: sandwich_check(q, p, samples, seed, tol=-1.0))
    assert run(capsys, "verify", "--q", "1", "--p", "1", "--samples", "200")[0] == 1


def test_help_exit_0(capsys):
    assert main(["--help"]) == 0


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "polyconst.cli", "baseline", "--m", "2", "--p", "8",
                          "--format", "csv", "--full"], capture_output=True, text=True, check=True)
    assert float(rows_of(out.stdout)[0]["bound"]) == 2 ** 0.25
