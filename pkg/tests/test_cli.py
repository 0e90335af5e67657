import json
import subprocess
import sys

import pytest

from zn_fejer.cli import main
from zn_fejer.experiments import parse_csv_report

PAPER_ARGS = ["discrepancy", "--n", "101", "--size", "50", "--r", "5", "--r", "10", "--r", "20",
              "--trials", "100", "--seed", "42"]


def test_kernel_subcommand(capsys):
    assert main(["kernel", "--n", "4", "--r", "2"]) == 0
    out = capsys.readouterr().out
    assert "n,kernel\n0,0.5\n1,0.25\n2,0\n3,0.25\n" in out
    assert "k,symbol_closed_form,symbol_dft,abs_diff" in out


def test_symbol_subcommand_json(capsys):
    assert main(["symbol", "--n", "12", "--r", "3", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert "kernel" not in doc and len(doc["symbol"]) == 12


def test_discrepancy_to_file(tmp_path):
    out = tmp_path / "report.csv"
    assert main(PAPER_ARGS + ["--out", str(out)]) == 0
    rows = parse_csv_report(out.read_text(encoding="utf-8"))
    assert len(rows) == 300
    assert all(r["observed_sup"] <= r["corollary_bound"] for r in rows)


def test_workers_do_not_change_output(capsys):
    main(PAPER_ARGS)
    serial = capsys.readouterr().out
    main(PAPER_ARGS + ["--workers", "4"])
    assert capsys.readouterr().out == serial


@pytest.mark.parametrize(
    "argv",
    [
        ["kernel", "--n", "10", "--r", "6"],
        ["discrepancy", "--n", "10", "--size", "11"],
        ["discrepancy", "--n", "10", "--size", "3", "--r", "3", "--trials", "0"],
        ["discrepancy", "--n", "10", "--size", "3", "--r", "3", "--workers", "0"],
    ],
)
def test_parameter_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["discrepancy", "--format", "xml"])
    assert exc.value.code == 2


def test_invariant_violation_exit_1(monkeypatch, capsys):
    from zn_fejer import experiments
    from zn_fejer.discrepancy import BoundReport

    monkeypatch.setattr(experiments, "effective_constant", lambda A, r: BoundReport(9.0, 1.0, 2.0, 1.0))
    assert main(["discrepancy", "--n", "10", "--size", "3", "--r", "2", "--trials", "1"]) == 1
    assert "invariant" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zn_fejer", "kernel", "--n", "6", "--r", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "n,kernel" in proc.stdout
    bad = subprocess.run(
        [sys.executable, "-m", "zn_fejer", "kernel", "--n", "6", "--r", "4"],
        capture_output=True, text=True, check=False,
    )
    assert bad.returncode == 2
