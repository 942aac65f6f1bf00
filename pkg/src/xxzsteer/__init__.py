"""Steered quantum coherence and quantum Fisher information of the
two-qubit XXZ thermal state.

The library builds the Gibbs state of

    H = -1/2 [J (sx sx + sy sy) + Jz sz sz] - B/2 (sz I + I sz)

by two independent routes, evaluates three measures (l1 steered coherence
SCn, relative-entropy steered coherence SCRE, quantum Fisher information
QFI) both from their definitions and through closed-form fast paths, and
drives parameter sweeps with CSV/JSON/SVG output.  See the ``xxzsteer``
command-line tool for the sweep front end.
"""

from .fisher import (
    CalibrationReport,
    Observable,
    calibrate_observable,
    calibrated_observable,
    collective_observable,
    qfi_closed,
    qfi_published,
    qfi_spectral,
)
from .linalg import (
    EigenDecomposition,
    JacobiConvergenceError,
    binary_entropy,
    eig_hermitian,
    kron,
    partial_trace_A,
    spectral_fn,
    vn_entropy,
)
from .model import (
    GibbsState,
    ParameterRegimeError,
    SpinParams,
    gibbs_closed,
    gibbs_spectral,
    hamiltonian,
    log_partition_function,
    partition_function,
)
from .plot import render_svg
from .steering import (
    CoherenceKind,
    ConditionalEnsemble,
    ConditionalState,
    PauliAxis,
    PauliBasis,
    coherence,
    measurement_operator,
    pauli_basis,
    scn_closed,
    scre_closed,
    scre_published,
    sqc_direct,
    steer,
)
from .sweep import (
    ENGINES,
    MEASURES,
    AxisSpec,
    EngineRecord,
    SweepSpec,
    SweepTable,
    evaluate_point,
    read_csv,
    run_sweep,
    write_csv,
    write_json,
)

__version__ = "0.1.0"

__all__ = [
    "AxisSpec",
    "CalibrationReport",
    "CoherenceKind",
    "ConditionalEnsemble",
    "ConditionalState",
    "EigenDecomposition",
    "EngineRecord",
    "ENGINES",
    "GibbsState",
    "JacobiConvergenceError",
    "MEASURES",
    "Observable",
    "ParameterRegimeError",
    "PauliAxis",
    "PauliBasis",
    "SpinParams",
    "SweepSpec",
    "SweepTable",
    "binary_entropy",
    "calibrate_observable",
    "calibrated_observable",
    "coherence",
    "collective_observable",
    "eig_hermitian",
    "evaluate_point",
    "gibbs_closed",
    "gibbs_spectral",
    "hamiltonian",
    "kron",
    "log_partition_function",
    "measurement_operator",
    "partial_trace_A",
    "partition_function",
    "pauli_basis",
    "qfi_closed",
    "qfi_published",
    "qfi_spectral",
    "read_csv",
    "render_svg",
    "run_sweep",
    "scn_closed",
    "scre_closed",
    "scre_published",
    "spectral_fn",
    "sqc_direct",
    "steer",
    "vn_entropy",
    "write_csv",
    "write_json",
]
