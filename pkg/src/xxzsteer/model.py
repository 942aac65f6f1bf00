"""Two-qubit XXZ Hamiltonian and its thermal state.

    H = -1/2 [J (sx ox sx + sy ox sy) + Jz sz ox sz] - B/2 (sz ox I + I ox sz)

In the |A B> product basis (A the leading bit) the Gibbs state e^{-H/T}/Z
is an X state with diagonal (a, b, b, d) and a single real coherence v
between |01> and |10>:

    a = e^{(Jz/2+B)/T} / Z        b = e^{-Jz/2T} cosh(J/T) / Z
    d = e^{(Jz/2-B)/T} / Z        v = e^{-Jz/2T} sinh(J/T) / Z

    Z = 2 (e^{Jz/2T} cosh(B/T) + e^{-Jz/2T} cosh(J/T))

v carries the sign of J (the matrix exponential forces sinh(J/T), not
sinh(|J|/T)); every measure downstream depends only on |v| or on the
spectrum, so states at +-J give identical measure values.

Two independent construction routes are provided - closed-form entries and
a spectral matrix exponential - and must agree entrywise to 1e-10.  All
exponentials are evaluated after subtracting the largest exponent, so the
full parameter box (|couplings| up to 1e3, T down to 1e-3) stays finite.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field

import numpy as np
from scipy.special import logsumexp

from .linalg import (
    IDENTITY_2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    eig_hermitian,
    kron,
)

__all__ = [
    "T_FLOOR",
    "COUPLING_MAX",
    "ParameterRegimeError",
    "SpinParams",
    "GibbsState",
    "hamiltonian",
    "log_partition_function",
    "partition_function",
    "gibbs_closed",
    "gibbs_spectral",
]

T_FLOOR = 1e-3
COUPLING_MAX = 1e3

_MAX_LOG = math.log(sys.float_info.max)  # ~709.78

# Number operator sz ox I + I ox sz, conserved by H (U(1) symmetry).
_TOTAL_SZ = np.diag(np.array([2.0, 0.0, 0.0, -2.0], dtype=complex))


class ParameterRegimeError(ValueError):
    """A quantity overflows double precision even after exponent shifting."""


@dataclass(frozen=True)
class SpinParams:
    """Physical controls of the model: couplings J, Jz, field B, temperature T.

    Energy units throughout; the Boltzmann constant is absorbed into T.
    """

    J: float
    Jz: float
    B: float
    T: float

    def __post_init__(self):
        for name in ("J", "Jz", "B", "T"):
            val = getattr(self, name)
            if not isinstance(val, (int, float)) or not math.isfinite(val):
                raise ValueError(f"{name}={val!r} is not a finite number")
            object.__setattr__(self, name, float(val))
        if self.T < T_FLOOR:
            raise ValueError(f"T={self.T} is below the supported floor {T_FLOOR}")
        for name in ("J", "Jz", "B"):
            val = getattr(self, name)
            if abs(val) > COUPLING_MAX:
                raise ValueError(
                    f"|{name}|={abs(val)} exceeds the supported bound {COUPLING_MAX}"
                )


def hamiltonian(p: SpinParams) -> np.ndarray:
    """Assemble H as the explicit tensor-product operator sum (real entries)."""
    h = -0.5 * (
        p.J * (kron(PAULI_X, PAULI_X) + kron(PAULI_Y, PAULI_Y))
        + p.Jz * kron(PAULI_Z, PAULI_Z)
    )
    h -= 0.5 * p.B * (kron(PAULI_Z, IDENTITY_2) + kron(IDENTITY_2, PAULI_Z))
    return h


def _weight_exponents(p: SpinParams) -> np.ndarray:
    """-E_i/T for the four eigenlevels: |00>, |11>, (|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2."""
    return np.array(
        [
            (p.Jz / 2 + p.B) / p.T,
            (p.Jz / 2 - p.B) / p.T,
            (-p.Jz / 2 + p.J) / p.T,
            (-p.Jz / 2 - p.J) / p.T,
        ]
    )


def log_partition_function(p: SpinParams) -> float:
    """log Z, always finite on the supported parameter box."""
    return float(logsumexp(_weight_exponents(p)))


def partition_function(p: SpinParams) -> float:
    """Z = sum_i e^{-E_i/T}.  Raises when Z itself overflows a double."""
    log_z = log_partition_function(p)
    if log_z > _MAX_LOG:
        raise ParameterRegimeError(
            f"partition function overflows double precision at "
            f"J={p.J}, Jz={p.Jz}, B={p.B}, T={p.T} (log Z = {log_z:.6g}); "
            f"use log_partition_function in this regime"
        )
    return math.exp(log_z)


@dataclass(frozen=True)
class GibbsState:
    """Validated thermal X state: entries (a, b, d, v) plus log Z.

    The density matrix is exposed through :attr:`rho`; a spectral
    construction stores the matrix it actually computed, the closed route
    assembles it from the entries on demand.
    """

    params: SpinParams
    a: float
    b: float
    d: float
    v: float
    log_Z: float
    _rho: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        tol = 1e-12
        for name in ("a", "b", "d"):
            val = getattr(self, name)
            if not (-tol <= val <= 1.0 + tol):
                raise ValueError(
                    f"Gibbs entry {name}={val!r} outside [0, 1] by more than {tol}"
                )
        norm_res = abs(self.a + 2 * self.b + self.d - 1.0)
        if norm_res > tol:
            raise ValueError(f"Gibbs entries violate a+2b+d=1 by {norm_res:.3e}")
        if abs(self.v) > self.b + tol:
            raise ValueError(
                f"Gibbs coherence |v|={abs(self.v)!r} exceeds b={self.b!r}: "
                f"central block not positive semidefinite"
            )

    @property
    def rho(self) -> np.ndarray:
        if self._rho is not None:
            return self._rho
        r = np.zeros((4, 4), dtype=complex)
        r[0, 0] = self.a
        r[1, 1] = self.b
        r[2, 2] = self.b
        r[3, 3] = self.d
        r[1, 2] = self.v
        r[2, 1] = self.v
        return r

    @property
    def Z(self) -> float:
        if self.log_Z > _MAX_LOG:
            raise ParameterRegimeError(
                f"partition function overflows double precision "
                f"(log Z = {self.log_Z:.6g}); use log_Z"
            )
        return math.exp(self.log_Z)


def _entries(p: SpinParams) -> tuple[float, float, float, float, float]:
    exps = _weight_exponents(p)
    shift = exps.max()
    w = np.exp(exps - shift)
    total = w.sum()
    a = float(w[0] / total)
    d = float(w[1] / total)
    b = float((w[2] + w[3]) / (2 * total))
    v = float((w[2] - w[3]) / (2 * total))
    log_z = float(shift + math.log(total))
    return a, b, d, v, log_z


def gibbs_closed(p: SpinParams) -> GibbsState:
    """Thermal state from the closed-form X-state entries."""
    a, b, d, v, log_z = _entries(p)
    return GibbsState(params=p, a=a, b=b, d=d, v=v, log_Z=log_z)


def gibbs_spectral(p: SpinParams) -> GibbsState:
    """Thermal state via eigendecomposition of H and a shifted exponential.

    Checks the X structure, Hermiticity, trace and U(1) commutation of the
    computed matrix and raises with the measured residuals on violation.
    """
    eig = eig_hermitian(hamiltonian(p))
    weights = np.exp(-(eig.values - eig.values.min()) / p.T)
    total = weights.sum()
    rho = (eig.vectors * (weights / total)) @ eig.vectors.conj().T
    rho = (rho + rho.conj().T) / 2
    log_z = float(-eig.values.min() / p.T + math.log(total))

    tol = 1e-12
    residuals = {}
    x_mask = np.zeros((4, 4), dtype=bool)
    for i, j in ((0, 0), (1, 1), (2, 2), (3, 3), (1, 2), (2, 1)):
        x_mask[i, j] = True
    residuals["off_x_structure"] = float(np.abs(rho[~x_mask]).max())
    residuals["imag_part"] = float(np.abs(rho[x_mask].imag).max())
    residuals["trace"] = abs(float(np.trace(rho).real) - 1.0)
    residuals["central_symmetry"] = abs(float(rho[1, 1].real - rho[2, 2].real))
    comm = rho @ _TOTAL_SZ - _TOTAL_SZ @ rho
    residuals["number_commutator"] = float(np.linalg.norm(comm))
    bad = {k: r for k, r in residuals.items() if r > tol}
    if bad:
        raise ValueError(
            f"spectral Gibbs construction violates X-state invariants at "
            f"J={p.J}, Jz={p.Jz}, B={p.B}, T={p.T}: "
            + ", ".join(f"{k}={r:.3e}" for k, r in bad.items())
        )

    return GibbsState(
        params=p,
        a=float(rho[0, 0].real),
        b=float((rho[1, 1].real + rho[2, 2].real) / 2),
        d=float(rho[3, 3].real),
        v=float((rho[1, 2] + rho[2, 1]).real / 2),
        log_Z=log_z,
        _rho=rho,
    )
