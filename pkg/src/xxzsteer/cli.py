"""Command-line front end.

Subcommands:

    point  --fix J=10 --fix Jz=2 --fix B=0 --fix T=0.01 [--measure M ...]
           evaluate one parameter point, print a JSON record to stdout
    sweep  --axis J=-20:20:0.25 [--axis Jz=...] --fix ... --out FILE
           run a 1D/2D grid and write CSV or JSON
    plot   like sweep, but render an SVG (heatmap for 2 axes, lines for 1)

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .model import SpinParams
from .plot import render_svg
from .sweep import (
    ENGINES,
    MEASURES,
    PARAM_NAMES,
    AxisSpec,
    EngineRecord,
    SweepSpec,
    evaluate_point,
    format_value,
    run_sweep,
    write_csv,
    write_json,
)

__all__ = ["UsageError", "build_parser", "main"]


class UsageError(Exception):
    """Bad command line; reported on stderr with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_fix(text: str) -> tuple[str, float]:
    name, sep, raw = text.partition("=")
    if not sep:
        raise UsageError(f"--fix expects NAME=VALUE, got {text!r}")
    if name not in PARAM_NAMES:
        raise UsageError(f"--fix name {name!r} is not one of {PARAM_NAMES}")
    try:
        return name, float(raw)
    except ValueError:
        raise UsageError(f"--fix {name}: {raw!r} is not a number") from None


def _parse_axis(text: str) -> AxisSpec:
    name, sep, raw = text.partition("=")
    if not sep:
        raise UsageError(f"--axis expects NAME=START:STOP:STEP, got {text!r}")
    parts = raw.split(":")
    if len(parts) != 3:
        raise UsageError(f"--axis {name}: expected START:STOP:STEP, got {raw!r}")
    try:
        start, stop, step = (float(tok) for tok in parts)
    except ValueError:
        raise UsageError(f"--axis {name}: {raw!r} contains a non-number") from None
    try:
        return AxisSpec(name=name, start=start, stop=stop, step=step)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _add_common(sub: argparse.ArgumentParser, *, with_axes: bool) -> None:
    sub.add_argument(
        "--measure",
        action="append",
        choices=MEASURES,
        metavar="{%s}" % ",".join(MEASURES),
        help="measure to evaluate (repeatable; default: all)",
    )
    sub.add_argument(
        "--engine",
        choices=ENGINES,
        default="closed",
        help="evaluation engine (default: closed)",
    )
    sub.add_argument(
        "--fix",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="fix one parameter (repeatable)",
    )
    if with_axes:
        sub.add_argument(
            "--axis",
            action="append",
            default=[],
            metavar="NAME=START:STOP:STEP",
            help="sweep one parameter (one or two axes; first axis is outer)",
        )
    sub.add_argument(
        "--jobs",
        type=int,
        default=1,
        metavar="N",
        help="worker processes for grid evaluation (default: 1)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="xxzsteer",
        description=(
            "Steered quantum coherence (SCn, SCRE) and quantum Fisher "
            "information of the two-qubit XXZ thermal state."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    point = subs.add_parser("point", help="evaluate a single parameter point")
    _add_common(point, with_axes=False)

    sweep = subs.add_parser("sweep", help="run a 1D/2D parameter sweep")
    _add_common(sweep, with_axes=True)
    sweep.add_argument("--out", metavar="PATH", help="output file (required)")
    sweep.add_argument(
        "--format",
        choices=("csv", "json"),
        default="csv",
        help="output format (default: csv)",
    )

    plot = subs.add_parser("plot", help="run a sweep and render an SVG")
    _add_common(plot, with_axes=True)
    plot.add_argument("--out", metavar="PATH", help="output SVG file (required)")
    plot.add_argument(
        "--mode",
        choices=("heatmap", "lines"),
        help="plot mode (default: heatmap for 2 axes, lines for 1)",
    )

    return parser


def _collect_fixed(pairs: list[str]) -> dict[str, float]:
    fixed: dict[str, float] = {}
    for item in pairs:
        name, value = _parse_fix(item)
        if name in fixed:
            raise UsageError(f"parameter {name} fixed twice")
        fixed[name] = value
    return fixed


def _build_spec(ns) -> SweepSpec:
    axes = tuple(_parse_axis(a) for a in ns.axis)
    if not axes:
        raise UsageError("a sweep needs at least one --axis")
    measures = tuple(ns.measure) if ns.measure else MEASURES
    try:
        return SweepSpec(
            axes=axes,
            fixed=_collect_fixed(ns.fix),
            measures=measures,
            engine=ns.engine,
            out=ns.out,
            fmt=getattr(ns, "format", "csv"),
            jobs=ns.jobs,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cmd_point(ns) -> int:
    fixed = _collect_fixed(ns.fix)
    missing = [n for n in PARAM_NAMES if n not in fixed]
    if missing:
        raise UsageError(f"point requires --fix for every parameter; missing {missing}")
    try:
        params = SpinParams(**fixed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    measures = tuple(dict.fromkeys(ns.measure)) if ns.measure else MEASURES
    record = evaluate_point(params, measures, ns.engine)

    def render(value) -> str:
        if isinstance(value, EngineRecord):
            return (
                '{"oracle": %s, "closed": %s, "absdiff": %s}'
                % (
                    format_value(value.oracle),
                    format_value(value.closed),
                    format_value(value.absdiff),
                )
            )
        return format_value(value)

    params_json = ", ".join(
        f'"{n}": {format_value(getattr(params, n))}' for n in PARAM_NAMES
    )
    measures_json = ", ".join(f'"{m}": {render(record[m])}' for m in measures)
    print(
        '{"params": {%s}, "engine": %s, "measures": {%s}}'
        % (params_json, json.dumps(ns.engine), measures_json)
    )
    return 0


def _cmd_sweep(ns) -> int:
    if not ns.out:
        raise UsageError("sweep requires --out PATH")
    spec = _build_spec(ns)
    table = run_sweep(spec)
    if spec.fmt == "csv":
        write_csv(table, spec.out)
    else:
        write_json(table, spec.out)
    return 0


def _cmd_plot(ns) -> int:
    if not ns.out:
        raise UsageError("plot requires --out PATH")
    spec = _build_spec(ns)
    mode = ns.mode or ("heatmap" if len(spec.axes) == 2 else "lines")
    if mode == "heatmap" and (len(spec.measures) != 1 or spec.engine == "both"):
        raise UsageError(
            "heatmap needs exactly one value column: one --measure and a "
            "single engine (closed or oracle)"
        )
    table = run_sweep(spec)
    render_svg(table, mode, ns.out)
    return 0


_COMMANDS = {"point": _cmd_point, "sweep": _cmd_sweep, "plot": _cmd_plot}


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"xxzsteer: error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    try:
        return _COMMANDS[ns.command](ns)
    except UsageError as exc:
        print(f"xxzsteer: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, RuntimeError, ValueError) as exc:
        print(f"xxzsteer: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
