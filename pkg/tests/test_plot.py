from __future__ import annotations

import re

import numpy as np
import pytest

from xxzsteer.plot import color_for, heatmap_svg, lines_svg, render_svg
from xxzsteer.sweep import AxisSpec, SweepSpec, SweepTable, run_sweep


def small_grid_table(values):
    """2x2 sweep table with prescribed SCn values."""
    values = np.asarray(values, dtype=float).reshape(4)
    axes = (AxisSpec("J", 0, 1, 1.0), AxisSpec("Jz", 0, 1, 1.0))
    data = np.column_stack(
        [np.repeat([0.0, 1.0], 2), np.tile([0.0, 1.0], 2), values]
    )
    return SweepTable(columns=("J", "Jz", "SCn"), data=data, axes=axes)


def test_heatmap_has_one_cell_per_grid_node(tmp_path):
    svg = heatmap_svg(small_grid_table([0.0, 1.0, 2.0, 3.0]))
    assert svg.count('class="cell"') == 4
    assert svg.count('class="cbar"') > 0
    assert "<svg" in svg and "</svg>" in svg
    path = tmp_path / "h.svg"
    render_svg(small_grid_table([0.0, 1.0, 2.0, 3.0]), "heatmap", path)
    assert path.read_text(encoding="utf-8") == svg


def test_heatmap_constant_table_has_uniform_cells():
    svg = heatmap_svg(small_grid_table([1.5, 1.5, 1.5, 1.5]))
    fills = re.findall(r'class="cell"[^/]*fill="(#[0-9a-f]{6})"', svg)
    assert len(set(fills)) == 1


def test_heatmap_color_map_endpoints():
    assert color_for(0.0) == "#440154"
    assert color_for(1.0) == "#fde725"
    assert color_for(0.5) == "#21918c"


def test_heatmap_rejects_line_tables_and_multi_measure():
    spec = SweepSpec(
        axes=(AxisSpec("J", 0, 1, 0.5),),
        fixed={"Jz": 0.0, "B": 1.0, "T": 1.0},
        measures=("SCn",),
    )
    with pytest.raises(ValueError, match="2-axis"):
        heatmap_svg(run_sweep(spec))
    table = small_grid_table([0, 1, 2, 3])
    two_cols = SweepTable(
        columns=("J", "Jz", "SCn", "QFI"),
        data=np.column_stack([table.data, table.data[:, 2]]),
        axes=table.axes,
    )
    with pytest.raises(ValueError, match="exactly one value column"):
        heatmap_svg(two_cols)


def test_lines_draw_one_polyline_per_measure():
    spec = SweepSpec(
        axes=(AxisSpec("J", -2, 2, 0.5),),
        fixed={"Jz": 0.0, "B": 1.0, "T": 0.5},
        measures=("SCn", "SCRE", "QFI"),
    )
    svg = lines_svg(run_sweep(spec))
    assert svg.count('class="series"') == 3
    assert 'data-name="SCn"' in svg
    assert 'data-name="QFI"' in svg


def test_lines_path_data_reproduces_table_minima():
    """Groove positions in the rendered polyline match the table."""
    spec = SweepSpec(
        axes=(AxisSpec("J", -3, 3, 0.05),),
        fixed={"Jz": 0.0, "B": 1.0, "T": 0.1},
        measures=("SCn",),
    )
    table = run_sweep(spec)
    svg = lines_svg(table)
    points = re.search(r'points="([^"]+)"', svg).group(1).split()
    ys = np.array([float(tok.split(",")[1]) for tok in points])
    # svg y grows downward: value minima are path maxima
    svg_minima = {
        i for i in range(1, len(ys) - 1) if ys[i] > ys[i - 1] and ys[i] > ys[i + 1]
    }
    col = table.column("SCn")
    table_minima = {
        i
        for i in range(1, len(col) - 1)
        if col[i] < col[i - 1] and col[i] < col[i + 1]
    }
    grooves = {i for i in table_minima if abs(abs(table.column("J")[i]) - 1.0) < 0.2}
    assert grooves <= svg_minima
    assert len(grooves) == 2


def test_lines_reject_grid_tables():
    with pytest.raises(ValueError, match="1-axis"):
        lines_svg(small_grid_table([0, 1, 2, 3]))


def test_render_svg_rejects_unknown_mode(tmp_path):
    with pytest.raises(ValueError, match="mode"):
        render_svg(small_grid_table([0, 1, 2, 3]), "scatter", tmp_path / "x.svg")


def test_render_is_deterministic(tmp_path):
    table = small_grid_table([0.3, 0.1, 4.0, 2.0])
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    render_svg(table, "heatmap", a)
    render_svg(table, "heatmap", b)
    assert a.read_bytes() == b.read_bytes()
