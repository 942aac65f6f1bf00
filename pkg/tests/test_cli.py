from __future__ import annotations

import json

from xxzsteer.cli import main
from xxzsteer.sweep import MEASURES, read_csv


BELL_POINT = ["--fix", "J=10", "--fix", "Jz=2", "--fix", "B=0", "--fix", "T=0.01"]


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "COMMAND" in capsys.readouterr().out


def test_unknown_flag_exits_two_with_one_line_diagnostic(capsys):
    assert main(["sweep", "--badflag"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("xxzsteer: error:")
    assert len(err.strip().splitlines()) == 1


def test_missing_parameter_exits_two(capsys):
    assert main(["point", "--fix", "J=1"]) == 2
    assert "missing" in capsys.readouterr().err


def test_out_of_range_parameter_exits_two(capsys):
    assert main(["point", "--fix", "J=1", "--fix", "Jz=1", "--fix", "B=1",
                 "--fix", "T=1e-9"]) == 2
    assert "T=" in capsys.readouterr().err


def test_duplicate_fix_exits_two(capsys):
    assert main(["point", "--fix", "J=1", "--fix", "J=2", "--fix", "Jz=1",
                 "--fix", "B=1", "--fix", "T=1"]) == 2
    assert "fixed twice" in capsys.readouterr().err


def test_non_numeric_fix_value_exits_two(capsys):
    assert main(["point", "--fix", "J=abc", "--fix", "Jz=1", "--fix", "B=1",
                 "--fix", "T=1"]) == 2
    assert "not a number" in capsys.readouterr().err


def test_bad_axis_syntax_exits_two(capsys):
    assert main(["sweep", "--axis", "J=1:2", "--fix", "Jz=1", "--fix", "B=1",
                 "--fix", "T=1", "--out", "x.csv"]) == 2
    assert "START:STOP:STEP" in capsys.readouterr().err


def test_sweep_requires_out(capsys):
    assert main(["sweep", "--axis", "J=0:1:0.5", "--fix", "Jz=1",
                 "--fix", "B=1", "--fix", "T=1"]) == 2
    assert "--out" in capsys.readouterr().err


def test_point_reports_all_measures_by_default(capsys):
    assert main(["point", *BELL_POINT]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["engine"] == "closed"
    assert list(doc["measures"]) == list(MEASURES)
    assert abs(doc["measures"]["SCn"] - 3.0) <= 1e-3
    assert abs(doc["measures"]["QFI"] - 4.0) <= 1e-3


def test_point_engine_both_carries_three_entries(capsys):
    assert main(["point", *BELL_POINT, "--engine", "both",
                 "--measure", "SCRE"]) == 0
    doc = json.loads(capsys.readouterr().out)
    entry = doc["measures"]["SCRE"]
    assert set(entry) == {"oracle", "closed", "absdiff"}
    assert abs(entry["closed"] - 3.0) <= 1e-3
    assert entry["absdiff"] <= 1e-8


def test_sweep_writes_csv(tmp_path):
    out = tmp_path / "grid.csv"
    argv = ["sweep", "--measure", "SCn", "--axis", "J=-1:1:0.5",
            "--axis", "Jz=-1:1:1", "--fix", "T=2", "--fix", "B=1",
            "--out", str(out)]
    assert main(argv) == 0
    table = read_csv(out)
    assert table.columns == ("J", "Jz", "SCn")
    assert table.data.shape == (15, 3)


def test_sweep_writes_json(tmp_path):
    out = tmp_path / "grid.json"
    argv = ["sweep", "--measure", "QFI", "--axis", "T=0.5:2:0.5",
            "--fix", "J=1", "--fix", "Jz=1", "--fix", "B=1",
            "--format", "json", "--out", str(out)]
    assert main(argv) == 0
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["columns"] == ["T", "QFI"]
    assert len(doc["rows"]) == 4


def test_plot_writes_line_svg(tmp_path):
    out = tmp_path / "lines.svg"
    argv = ["plot", "--measure", "SCn", "--measure", "QFI",
            "--axis", "J=-2:2:0.25", "--fix", "Jz=0", "--fix", "B=1",
            "--fix", "T=0.5", "--out", str(out)]
    assert main(argv) == 0
    text = out.read_text(encoding="utf-8")
    assert text.count('class="series"') == 2


def test_plot_heatmap_needs_single_measure(capsys, tmp_path):
    argv = ["plot", "--axis", "J=-1:1:0.5", "--axis", "Jz=-1:1:0.5",
            "--fix", "B=1", "--fix", "T=2", "--out", str(tmp_path / "h.svg")]
    assert main(argv) == 2
    assert "one value column" in capsys.readouterr().err


def test_plot_heatmap_single_measure(tmp_path):
    out = tmp_path / "heat.svg"
    argv = ["plot", "--measure", "SCn", "--axis", "J=-1:1:0.5",
            "--axis", "Jz=-1:1:0.5", "--fix", "B=1", "--fix", "T=2",
            "--out", str(out)]
    assert main(argv) == 0
    assert out.read_text(encoding="utf-8").count('class="cell"') == 25


def test_identical_argv_gives_identical_bytes(tmp_path):
    argv = lambda name: ["sweep", "--measure", "SCRE", "--axis", "J=-1:1:0.25",
                         "--fix", "Jz=1", "--fix", "B=2", "--fix", "T=0.7",
                         "--out", str(tmp_path / name)]
    assert main(argv("a.csv")) == 0
    assert main(argv("b.csv")) == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_unwritable_output_exits_one(capsys, tmp_path):
    argv = ["sweep", "--measure", "SCn", "--axis", "J=0:1:0.5",
            "--fix", "Jz=1", "--fix", "B=1", "--fix", "T=1",
            "--out", str(tmp_path / "missing" / "dir" / "f.csv")]
    assert main(argv) == 1
    assert "cannot write" in capsys.readouterr().err
