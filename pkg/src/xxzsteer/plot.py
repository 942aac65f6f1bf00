"""Deterministic SVG rendering of sweep tables.

No plotting library: the documents are assembled from fixed style
constants, so identical tables produce byte-identical files.  Two modes:

* ``heatmap`` - a 2-axis table with exactly one value column; one rect of
  class "cell" per grid node, linear three-stop color map over
  [min, max], labeled color bar;
* ``lines`` - a 1-axis table; one polyline of class "series" per value
  column plus a legend.
"""

from __future__ import annotations


from .sweep import SweepTable

__all__ = ["render_svg", "heatmap_svg", "lines_svg"]

# Fixed geometry/style; structural tests rely on the class names only.
PLOT_WIDTH = 640
PLOT_HEIGHT = 480
MARGIN_LEFT = 70
MARGIN_RIGHT = 110
MARGIN_TOP = 40
MARGIN_BOTTOM = 55
FONT = "font-family=\"sans-serif\" font-size=\"12\""

# Three-stop linear color map (dark violet -> teal -> yellow).
COLOR_STOPS = ((68, 1, 84), (33, 145, 140), (253, 231, 37))

LINE_COLORS = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b")

COLORBAR_SEGMENTS = 64


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def color_for(t: float) -> str:
    """Hex color at position t in [0, 1] of the linear three-stop map."""
    t = min(max(t, 0.0), 1.0)
    if t <= 0.5:
        lo, hi, f = COLOR_STOPS[0], COLOR_STOPS[1], t * 2.0
    else:
        lo, hi, f = COLOR_STOPS[1], COLOR_STOPS[2], (t - 0.5) * 2.0
    rgb = tuple(round(a + (b - a) * f) for a, b in zip(lo, hi))
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _svg_document(body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{PLOT_WIDTH}" '
        f'height="{PLOT_HEIGHT}" viewBox="0 0 {PLOT_WIDTH} {PLOT_HEIGHT}">'
    )
    background = f'<rect width="{PLOT_WIDTH}" height="{PLOT_HEIGHT}" fill="white"/>'
    return "\n".join([head, background, *body, "</svg>"]) + "\n"


def _plot_frame(x0, y0, w, h) -> str:
    return (
        f'<rect x="{x0}" y="{y0}" width="{w}" height="{h}" '
        f'fill="none" stroke="black"/>'
    )


def heatmap_svg(table: SweepTable) -> str:
    if table.axes is None or len(table.axes) != 2:
        raise ValueError("heatmap requires a table produced by a 2-axis sweep")
    value_cols = [c for c in table.columns if c not in (a.name for a in table.axes)]
    if len(value_cols) != 1:
        raise ValueError(
            f"heatmap requires exactly one value column, got {value_cols}; "
            f"sweep a single measure with a single engine"
        )
    name = value_cols[0]
    outer, inner = table.axes
    grid = table.grid(name)
    vmin = float(grid.min())
    vmax = float(grid.max())
    span = vmax - vmin

    x0, y0 = MARGIN_LEFT, MARGIN_TOP
    w = PLOT_WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    h = PLOT_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    cw = w / inner.count
    ch = h / outer.count

    body = [f'<text x="{x0}" y="{MARGIN_TOP - 14}" {FONT}>{name}</text>']
    # row 0 (smallest outer value) at the bottom
    for i in range(outer.count):
        for j in range(inner.count):
            t = 0.0 if span == 0.0 else (float(grid[i, j]) - vmin) / span
            cx = x0 + j * cw
            cy = y0 + h - (i + 1) * ch
            body.append(
                f'<rect class="cell" x="{_fmt(cx)}" y="{_fmt(cy)}" '
                f'width="{_fmt(cw)}" height="{_fmt(ch)}" fill="{color_for(t)}"/>'
            )
    body.append(_plot_frame(x0, y0, w, h))

    # axis labels: inner axis along x, outer axis along y
    iv, ov = inner.values(), outer.values()
    body += [
        f'<text x="{x0 + w / 2}" y="{PLOT_HEIGHT - 18}" text-anchor="middle" {FONT}>{inner.name}</text>',
        f'<text x="{x0}" y="{PLOT_HEIGHT - 34}" text-anchor="middle" {FONT}>{_fmt(iv[0])}</text>',
        f'<text x="{x0 + w}" y="{PLOT_HEIGHT - 34}" text-anchor="middle" {FONT}>{_fmt(iv[-1])}</text>',
        f'<text x="{x0 - 45}" y="{y0 + h / 2}" {FONT}>{outer.name}</text>',
        f'<text x="{x0 - 8}" y="{y0 + h}" text-anchor="end" {FONT}>{_fmt(ov[0])}</text>',
        f'<text x="{x0 - 8}" y="{y0 + 12}" text-anchor="end" {FONT}>{_fmt(ov[-1])}</text>',
    ]

    # color bar with min/mid/max labels
    bx = PLOT_WIDTH - MARGIN_RIGHT + 30
    bw = 18
    seg_h = h / COLORBAR_SEGMENTS
    for k in range(COLORBAR_SEGMENTS):
        t = (k + 0.5) / COLORBAR_SEGMENTS
        cy = y0 + h - (k + 1) * seg_h
        body.append(
            f'<rect class="cbar" x="{bx}" y="{_fmt(cy)}" width="{bw}" '
            f'height="{_fmt(seg_h)}" fill="{color_for(t)}"/>'
        )
    body += [
        _plot_frame(bx, y0, bw, h),
        f'<text x="{bx + bw + 6}" y="{y0 + h}" {FONT}>{_fmt(vmin)}</text>',
        f'<text x="{bx + bw + 6}" y="{y0 + h / 2}" {FONT}>{_fmt((vmin + vmax) / 2)}</text>',
        f'<text x="{bx + bw + 6}" y="{y0 + 12}" {FONT}>{_fmt(vmax)}</text>',
    ]
    return _svg_document(body)


def lines_svg(table: SweepTable) -> str:
    if table.axes is None or len(table.axes) != 1:
        raise ValueError("lines mode requires a table produced by a 1-axis sweep")
    axis = table.axes[0]
    value_cols = [c for c in table.columns if c != axis.name]
    if not value_cols:
        raise ValueError("lines mode needs at least one value column")

    xs = table.column(axis.name)
    ymin = min(float(table.column(c).min()) for c in value_cols)
    ymax = max(float(table.column(c).max()) for c in value_cols)
    pad = 0.05 * (ymax - ymin) if ymax > ymin else 0.5
    ymin, ymax = ymin - pad, ymax + pad

    x0, y0 = MARGIN_LEFT, MARGIN_TOP
    w = PLOT_WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    h = PLOT_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    xspan = float(xs[-1] - xs[0]) if len(xs) > 1 and xs[-1] > xs[0] else 1.0

    def sx(x: float) -> float:
        return x0 + (x - float(xs[0])) / xspan * w

    def sy(y: float) -> float:
        return y0 + (ymax - y) / (ymax - ymin) * h

    body = [_plot_frame(x0, y0, w, h)]
    for k, col in enumerate(value_cols):
        color = LINE_COLORS[k % len(LINE_COLORS)]
        pts = " ".join(
            f"{_fmt(sx(float(x)))},{_fmt(sy(float(y)))}"
            for x, y in zip(xs, table.column(col))
        )
        body.append(
            f'<polyline class="series" data-name="{col}" points="{pts}" '
            f'fill="none" stroke="{color}" stroke-width="1.5"/>'
        )

    # legend
    lx = PLOT_WIDTH - MARGIN_RIGHT + 14
    for k, col in enumerate(value_cols):
        color = LINE_COLORS[k % len(LINE_COLORS)]
        ly = y0 + 14 + 18 * k
        body += [
            f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 18}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="2"/>',
            f'<text x="{lx + 24}" y="{ly}" {FONT}>{col}</text>',
        ]

    body += [
        f'<text x="{x0 + w / 2}" y="{PLOT_HEIGHT - 18}" text-anchor="middle" {FONT}>{axis.name}</text>',
        f'<text x="{x0}" y="{PLOT_HEIGHT - 34}" text-anchor="middle" {FONT}>{_fmt(float(xs[0]))}</text>',
        f'<text x="{x0 + w}" y="{PLOT_HEIGHT - 34}" text-anchor="middle" {FONT}>{_fmt(float(xs[-1]))}</text>',
        f'<text x="{x0 - 8}" y="{y0 + h}" text-anchor="end" {FONT}>{_fmt(ymin)}</text>',
        f'<text x="{x0 - 8}" y="{y0 + 12}" text-anchor="end" {FONT}>{_fmt(ymax)}</text>',
    ]
    return _svg_document(body)


def render_svg(table: SweepTable, mode: str, path) -> None:
    """Write a standalone SVG document for the table in the given mode."""
    if mode == "heatmap":
        text = heatmap_svg(table)
    elif mode == "lines":
        text = lines_svg(table)
    else:
        raise ValueError(f"unknown plot mode {mode!r}; use 'heatmap' or 'lines'")
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write SVG to {path}: {exc}") from exc
