"""Parameter sweeps over (J, Jz, B, T) with CSV/JSON output.

Every grid node is an independent evaluation of the requested measures.
Two evaluation engines exist:

* ``closed``  - closed-form entries plus closed-form measures (fast path);
* ``oracle``  - spectral state construction plus the definitional measures
  (brute-force path);
* ``both``    - run the two and record oracle, closed and |difference|.

Results land in a pre-sized table indexed by grid position, so the output
is byte-identical no matter how many worker processes evaluate it.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import fisher, steering
from .model import SpinParams, T_FLOOR, gibbs_closed, gibbs_spectral
from .steering import CoherenceKind

__all__ = [
    "MEASURES",
    "ENGINES",
    "PARAM_NAMES",
    "AxisSpec",
    "SweepSpec",
    "SweepTable",
    "EngineRecord",
    "evaluate_point",
    "run_sweep",
    "format_value",
    "write_csv",
    "read_csv",
    "write_json",
]

MEASURES = ("SCn", "SCRE", "SCREpaper", "QFI", "QFIclosed")
ENGINES = ("oracle", "closed", "both")
PARAM_NAMES = ("J", "Jz", "B", "T")

MAX_AXIS_POINTS = 10**6


@dataclass(frozen=True)
class AxisSpec:
    """One swept parameter: values start, start+step, ..., up to stop."""

    name: str
    start: float
    stop: float
    step: float

    def __post_init__(self):
        if self.name not in PARAM_NAMES:
            raise ValueError(
                f"axis name {self.name!r} is not one of {PARAM_NAMES}"
            )
        for attr in ("start", "stop", "step"):
            val = getattr(self, attr)
            if not math.isfinite(val):
                raise ValueError(f"axis {self.name}: {attr}={val!r} is not finite")
            object.__setattr__(self, attr, float(val))
        if self.step <= 0:
            raise ValueError(f"axis {self.name}: step must be positive")
        if self.start > self.stop:
            raise ValueError(f"axis {self.name}: start {self.start} > stop {self.stop}")
        if self.count > MAX_AXIS_POINTS:
            raise ValueError(
                f"axis {self.name}: {self.count} points exceeds {MAX_AXIS_POINTS}"
            )
        if self.name == "T" and self.start < T_FLOOR:
            raise ValueError(
                f"axis T: start {self.start} is below the temperature floor {T_FLOOR}"
            )

    @property
    def count(self) -> int:
        # small epsilon so 40/0.25-style ratios are not truncated by roundoff
        return int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1

    def values(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count, dtype=float)


@dataclass(frozen=True)
class SweepSpec:
    """Declarative description of a 1D or 2D scan.

    The axis names and the fixed-parameter names must together cover
    J, Jz, B, T exactly once.  The first axis is the outer (slowest) one.
    """

    axes: tuple[AxisSpec, ...]
    fixed: dict[str, float]
    measures: tuple[str, ...] = MEASURES
    engine: str = "closed"
    out: str | None = None
    fmt: str = "csv"
    jobs: int = 1

    def __post_init__(self):
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.fmt!r}; use csv or json")
        if not self.measures:
            raise ValueError("at least one measure is required")
        seen = []
        for m in self.measures:
            if m not in MEASURES:
                raise ValueError(f"unknown measure {m!r}; choose from {MEASURES}")
            if m not in seen:
                seen.append(m)
        object.__setattr__(self, "measures", tuple(seen))
        if self.engine not in ENGINES:
            raise ValueError(f"unknown engine {self.engine!r}; choose from {ENGINES}")
        if not 1 <= len(self.axes) <= 2:
            raise ValueError("a sweep takes one or two axes")
        axis_names = [ax.name for ax in self.axes]
        if len(set(axis_names)) != len(axis_names):
            raise ValueError(f"axis names must be distinct, got {axis_names}")
        fixed_names = set(self.fixed)
        overlap = fixed_names & set(axis_names)
        if overlap:
            raise ValueError(f"parameters both swept and fixed: {sorted(overlap)}")
        missing = set(PARAM_NAMES) - fixed_names - set(axis_names)
        if missing:
            raise ValueError(f"parameters neither swept nor fixed: {sorted(missing)}")
        extra = fixed_names - set(PARAM_NAMES)
        if extra:
            raise ValueError(f"unknown fixed parameters: {sorted(extra)}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be a positive integer, got {self.jobs}")

    def value_columns(self) -> tuple[str, ...]:
        cols = []
        for m in self.measures:
            if self.engine == "both":
                cols += [f"{m}_oracle", f"{m}_closed", f"{m}_absdiff"]
            else:
                cols.append(m)
        return tuple(cols)

    def columns(self) -> tuple[str, ...]:
        return tuple(ax.name for ax in self.axes) + self.value_columns()


@dataclass(eq=False)
class SweepTable:
    """Tabulated sweep results, axis-major order (outer axis slowest)."""

    columns: tuple[str, ...]
    data: np.ndarray
    axes: tuple[AxisSpec, ...] | None = None

    def column(self, name: str) -> np.ndarray:
        return self.data[:, self.columns.index(name)]

    def grid(self, name: str) -> np.ndarray:
        """A value column reshaped to the 2D grid (outer axis is rows)."""
        if self.axes is None or len(self.axes) != 2:
            raise ValueError("grid() needs a table produced by a 2-axis sweep")
        shape = (self.axes[0].count, self.axes[1].count)
        return self.column(name).reshape(shape)


@dataclass(frozen=True)
class EngineRecord:
    """Oracle and closed values of one measure plus their absolute gap."""

    oracle: float
    closed: float
    absdiff: float


class _PointEvaluator:
    """Computes each requested primitive at most once per grid node."""

    def __init__(self, params: SpinParams):
        self.params = params
        self._closed_state = None
        self._spectral_state = None
        self._cache: dict[str, float] = {}

    @property
    def closed_state(self):
        if self._closed_state is None:
            self._closed_state = gibbs_closed(self.params)
        return self._closed_state

    @property
    def spectral_state(self):
        if self._spectral_state is None:
            self._spectral_state = gibbs_spectral(self.params)
        return self._spectral_state

    def closed(self, measure: str) -> float:
        key = f"closed:{measure}"
        if key not in self._cache:
            g = self.closed_state
            if measure == "SCn":
                val = steering.scn_closed(g)
            elif measure == "SCRE":
                val = steering.scre_closed(g)
            elif measure == "SCREpaper":
                val = steering.scre_published(g)
            elif measure == "QFI":
                val = fisher.qfi_closed(g)
            elif measure == "QFIclosed":
                val = fisher.qfi_published(self.params)
            else:
                raise ValueError(f"unknown measure {measure!r}")
            self._cache[key] = val
        return self._cache[key]

    def oracle(self, measure: str) -> float:
        kind = {
            "SCn": "sqc_l1",
            "SCRE": "sqc_re",
            "SCREpaper": "sqc_re",
            "QFI": "qfi",
            "QFIclosed": "qfi",
        }[measure]
        if kind not in self._cache:
            g = self.spectral_state
            if kind == "sqc_l1":
                val = steering.sqc_direct(g.rho, CoherenceKind.L1)
            elif kind == "sqc_re":
                val = steering.sqc_direct(g.rho, CoherenceKind.RELATIVE_ENTROPY)
            else:
                val = fisher.qfi_spectral(g.rho, fisher.calibrated_observable(g))
            self._cache[kind] = val
        return self._cache[kind]


def evaluate_point(
    params: SpinParams,
    measures: tuple[str, ...] = MEASURES,
    engine: str = "closed",
) -> dict[str, float | EngineRecord]:
    """Evaluate the requested measures at a single parameter point."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    for m in measures:
        if m not in MEASURES:
            raise ValueError(f"unknown measure {m!r}; choose from {MEASURES}")
    ev = _PointEvaluator(params)
    out: dict[str, float | EngineRecord] = {}
    for m in measures:
        if engine == "closed":
            out[m] = ev.closed(m)
        elif engine == "oracle":
            out[m] = ev.oracle(m)
        else:
            oracle = ev.oracle(m)
            closed = ev.closed(m)
            out[m] = EngineRecord(
                oracle=oracle, closed=closed, absdiff=abs(oracle - closed)
            )
    return out


def _point_row(params: SpinParams, measures, engine) -> list[float]:
    record = evaluate_point(params, measures, engine)
    row: list[float] = []
    for m in measures:
        val = record[m]
        if isinstance(val, EngineRecord):
            row += [val.oracle, val.closed, val.absdiff]
        else:
            row.append(val)
    return row


def _grid_params(spec: SweepSpec) -> list[SpinParams]:
    fixed = dict(spec.fixed)
    points: list[SpinParams] = []
    if len(spec.axes) == 1:
        ax = spec.axes[0]
        for v in ax.values():
            points.append(SpinParams(**{**fixed, ax.name: float(v)}))
    else:
        outer, inner = spec.axes
        inner_vals = inner.values()
        for vo in outer.values():
            for vi in inner_vals:
                points.append(
                    SpinParams(**{**fixed, outer.name: float(vo), inner.name: float(vi)})
                )
    return points


def _worker(chunk) -> list[list[float]]:
    params_list, measures, engine = chunk
    return [_point_row(p, measures, engine) for p in params_list]


def run_sweep(spec: SweepSpec) -> SweepTable:
    """Evaluate the grid and return the table, axis values included.

    With jobs > 1 the grid is split into contiguous index chunks handed to
    worker processes; rows are reassembled by index, so scheduling order
    never affects the output.
    """
    points = _grid_params(spec)
    measures, engine = spec.measures, spec.engine

    if spec.jobs == 1 or len(points) <= 1:
        value_rows = [_point_row(p, measures, engine) for p in points]
    else:
        chunk_size = max(1, math.ceil(len(points) / (spec.jobs * 4)))
        chunks = [
            (points[i : i + chunk_size], measures, engine)
            for i in range(0, len(points), chunk_size)
        ]
        value_rows = []
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            for part in pool.map(_worker, chunks):
                value_rows.extend(part)

    n_axis = len(spec.axes)
    data = np.empty((len(points), n_axis + len(spec.value_columns())), dtype=float)
    for i, (p, values) in enumerate(zip(points, value_rows)):
        for k, ax in enumerate(spec.axes):
            data[i, k] = getattr(p, ax.name)
        data[i, n_axis:] = values

    if not np.all(np.isfinite(data)):
        bad = np.argwhere(~np.isfinite(data))[0]
        raise RuntimeError(
            f"sweep produced a non-finite value in column "
            f"{spec.columns()[bad[1]]!r} at row {bad[0]}"
        )
    return SweepTable(columns=spec.columns(), data=data, axes=spec.axes)


def format_value(x: float) -> str:
    """17 significant digits: enough to round-trip any double exactly."""
    return f"{x:.17g}"


def write_csv(table: SweepTable, path) -> None:
    """Plain CSV: header, comma separators, LF endings, 17-digit values."""
    lines = [",".join(table.columns)]
    for row in table.data:
        lines.append(",".join(format_value(v) for v in row))
    text = "\n".join(lines) + "\n"
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc


def read_csv(path) -> SweepTable:
    """Parse a file written by :func:`write_csv` (bit-exact round trip)."""
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise OSError(f"cannot read CSV from {path}: {exc}") from exc
    if not lines:
        raise ValueError(f"{path}: empty CSV")
    columns = tuple(lines[0].split(","))
    data = np.array(
        [[float(tok) for tok in line.split(",")] for line in lines[1:]], dtype=float
    )
    if data.size == 0:
        data = data.reshape(0, len(columns))
    if data.shape[1] != len(columns):
        raise ValueError(f"{path}: row width does not match header")
    return SweepTable(columns=columns, data=data, axes=None)


def write_json(table: SweepTable, path) -> None:
    """One object with "columns" and "rows"; numbers use the 17-digit rule."""
    rows = ",".join(
        "[" + ",".join(format_value(v) for v in row) + "]" for row in table.data
    )
    text = '{"columns": ' + json.dumps(list(table.columns)) + ', "rows": [' + rows + "]}\n"
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write JSON to {path}: {exc}") from exc
