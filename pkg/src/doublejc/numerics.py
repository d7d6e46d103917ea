"""Brute-force numerical oracle for the double Jaynes-Cummings system.

Everything here works directly on the truncated product space: build the
full Hamiltonian, propagate exactly through its eigendecomposition, trace
down to any of the six subsystem pairs, and evaluate the concurrence of the
resulting two-qubit state.  No closed-form result enters any code path, so
this module serves as an independent check on the analytic formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .model import (
    DensityMatrix,
    HERMITICITY_TOL,
    ModelParams,
    PSD_TOL,
    PureState,
    TRACE_TOL,
)

__all__ = [
    "Subsystem",
    "SubsystemPair",
    "ALL_PAIRS",
    "HermitianOperator",
    "QubitEquivalenceError",
    "build_hamiltonian",
    "total_excitation",
    "Propagator",
    "evolve",
    "partial_trace_pair",
    "wootters_concurrence",
    "pair_concurrence",
]

#: population allowed above Fock level 1 in a retained mode before the
#: two-level (qubit) description of that mode breaks down
QUBIT_EQUIV_TOL = 1e-10

#: density-matrix eigenvalues below this are numerical-rank noise
RANK_TOL = 1e-14


class QubitEquivalenceError(RuntimeError):
    """A retained cavity mode is populated beyond one photon."""


class Subsystem(Enum):
    """The four elementary subsystems; values are the conventional short names."""

    ATOM_A = "A"
    ATOM_B = "B"
    MODE_A = "a"
    MODE_B = "b"

    @property
    def axis(self) -> int:
        """Tensor axis of this subsystem in the (atomA, atomB, modeA, modeB) layout."""
        return ("A", "B", "a", "b").index(self.value)

    @property
    def is_mode(self) -> bool:
        return self.value.islower()


@dataclass(frozen=True)
class SubsystemPair:
    """An ordered pair of distinct subsystems; six unordered pairs exist."""

    first: Subsystem
    second: Subsystem

    def __post_init__(self):
        if self.first is self.second:
            raise ValueError("pair members must be distinct")

    @property
    def name(self) -> str:
        return self.first.value + self.second.value

    @classmethod
    def from_name(cls, name: str) -> "SubsystemPair":
        """Parse a two-letter pair name such as ``AB`` or ``Ba``."""
        if len(name) != 2:
            raise ValueError(f"unknown subsystem pair {name!r}")
        try:
            return cls(Subsystem(name[0]), Subsystem(name[1]))
        except ValueError:
            raise ValueError(f"unknown subsystem pair {name!r}") from None


#: the six pairs in conventional order: atoms, modes, own cavities, crossed
ALL_PAIRS = tuple(
    SubsystemPair.from_name(n) for n in ("AB", "ab", "Aa", "Bb", "Ab", "Ba")
)

ATOM_PAIR = ALL_PAIRS[0]


@dataclass(frozen=True)
class HermitianOperator:
    """Dense Hermitian operator on the flattened product basis."""

    entries: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.entries, dtype=complex)
        if h.ndim != 2 or h.shape[0] != h.shape[1]:
            raise ValueError("operator must be a square matrix")
        if np.abs(h - h.conj().T).max() > HERMITICITY_TOL:
            raise ValueError("operator must be Hermitian")
        h.flags.writeable = False
        object.__setattr__(self, "entries", h)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def _mode_ops(cutoff: int):
    a = np.diag(np.sqrt(np.arange(1, cutoff + 1)), k=1)
    return a, a.conj().T


def _kron4(*ops) -> np.ndarray:
    out = ops[0]
    for op in ops[1:]:
        out = np.kron(out, op)
    return out


def build_hamiltonian(params: ModelParams, cutoff: int) -> HermitianOperator:
    """Full Hamiltonian of the two independent atom-cavity pairs.

    H = omega(|e><e|_A + |e><e|_B) + nu(n_a + n_b)
        + g(a^dag sm_A + a sp_A) + g(b^dag sm_B + b sp_B)

    with the atomic ground state at zero energy.  The rotating-wave coupling
    conserves the total excitation number, also on the truncated space.
    """
    if cutoff < 1:
        raise ValueError("Fock cutoff must be at least 1")
    i2 = np.eye(2)
    ic = np.eye(cutoff + 1)
    proj_e = np.diag([0.0, 1.0])
    sm = np.array([[0.0, 1.0], [0.0, 0.0]])  # |g><e|
    sp = sm.T
    a, ad = _mode_ops(cutoff)
    n_op = ad @ a

    h = params.omega * (_kron4(proj_e, i2, ic, ic) + _kron4(i2, proj_e, ic, ic))
    h = h + params.nu * (_kron4(i2, i2, n_op, ic) + _kron4(i2, i2, ic, n_op))
    h = h + params.g * (_kron4(sm, i2, ad, ic) + _kron4(sp, i2, a, ic))
    h = h + params.g * (_kron4(i2, sm, ic, ad) + _kron4(i2, sp, ic, a))
    return HermitianOperator(h)


def total_excitation(cutoff: int) -> HermitianOperator:
    """Total excitation number |e><e|_A + |e><e|_B + n_a + n_b."""
    i2 = np.eye(2)
    ic = np.eye(cutoff + 1)
    proj_e = np.diag([0.0, 1.0])
    a, ad = _mode_ops(cutoff)
    n_op = ad @ a
    n = _kron4(proj_e, i2, ic, ic) + _kron4(i2, proj_e, ic, ic)
    n = n + _kron4(i2, i2, n_op, ic) + _kron4(i2, i2, ic, n_op)
    return HermitianOperator(n)


class Propagator:
    """Exact propagator exp(-iHt) through one shared eigendecomposition.

    Diagonalizing once and reusing the eigenbasis makes dense time grids
    cheap; evolution is exact at any t, with no step-size error.
    """

    def __init__(self, h: HermitianOperator):
        self.h = h
        self.energies, self.modes = np.linalg.eigh(h.entries)

    def evolve(self, state0: PureState, t: float) -> PureState:
        """State at time t from ``state0`` at time 0."""
        if state0.dim != self.h.dim:
            raise ValueError("state dimension does not match operator")
        coeffs = self.modes.conj().T @ state0.amplitudes
        amps = self.modes @ (np.exp(-1j * self.energies * t) * coeffs)
        return PureState(amps, state0.cutoff)

    def evolve_grid(self, state0: PureState, times: np.ndarray) -> np.ndarray:
        """Amplitudes at many times, one column per time point."""
        if state0.dim != self.h.dim:
            raise ValueError("state dimension does not match operator")
        coeffs = self.modes.conj().T @ state0.amplitudes
        phases = np.exp(-1j * np.outer(self.energies, np.asarray(times, dtype=float)))
        return self.modes @ (phases * coeffs[:, None])


def evolve(h: HermitianOperator, state0: PureState, t: float) -> PureState:
    """One-shot exact evolution; use :class:`Propagator` for many times."""
    return Propagator(h).evolve(state0, t)


def partial_trace_pair(state: PureState, pair: SubsystemPair) -> DensityMatrix:
    """Reduced density matrix of a subsystem pair, in the |ee>,|eg>,|ge>,|gg> basis.

    Retained cavity modes must behave as qubits: any population above Fock
    level 1 beyond ``QUBIT_EQUIV_TOL`` raises :class:`QubitEquivalenceError`.
    """
    d = state.cutoff + 1
    tensor = state.amplitudes.reshape(2, 2, d, d)
    retained = (pair.first.axis, pair.second.axis)

    for sub in (pair.first, pair.second):
        if sub.is_mode and d > 2:
            overflow = np.moveaxis(tensor, sub.axis, 0)[2:]
            weight = float(np.sum(np.abs(overflow) ** 2))
            if weight > QUBIT_EQUIV_TOL:
                raise QubitEquivalenceError(
                    f"mode {sub.value} holds population {weight:.3e} above one photon"
                )

    block = np.moveaxis(tensor, retained, (0, 1))[:2, :2]
    # excited-first ordering for both atoms (g,e) and modes (0,1)
    block = block[::-1, ::-1]
    flat = block.reshape(4, -1)
    rho = flat @ flat.conj().T
    trace = rho.trace().real
    if abs(trace - 1.0) > TRACE_TOL:
        # mass discarded with the >1-photon tail (still below QUBIT_EQUIV_TOL)
        rho = rho / trace
    return DensityMatrix(rho)


# sigma_y (x) sigma_y in the |ee>,|eg>,|ge>,|gg> ordering, with
# sigma_y = [[0, -i], [i, 0]] on (excited, ground)
_SPIN_FLIP = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
    ],
    dtype=complex,
)


def wootters_concurrence(rho: DensityMatrix | np.ndarray) -> float:
    """Concurrence of an arbitrary two-qubit density matrix.

    C = max{0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4)} with mu_i the
    descending eigenvalues of rho (sy x sy) rho* (sy x sy).  The sqrt(mu_i)
    are computed as the singular values of sqrt(rho) (sy x sy) conj(sqrt(rho)),
    which is the same spectrum but stays accurate when eigenvalues collide
    near a zero crossing.  Eigenvalues of rho below RANK_TOL are taken as
    exact zeros: diagonalization noise on a rank-deficient state otherwise
    leaks through the square root at the 1e-8 level.
    """
    entries = rho.entries if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if entries.shape != (4, 4):
        raise ValueError("density matrix must be 4x4")
    if np.abs(entries - entries.conj().T).max() > HERMITICITY_TOL:
        raise ValueError("density matrix must be Hermitian")
    if abs(entries.trace() - 1.0) > TRACE_TOL:
        raise ValueError("density matrix must have unit trace")

    evals, evecs = np.linalg.eigh(entries)
    if evals.min() < PSD_TOL:
        raise ValueError("density matrix must be positive semidefinite")
    evals = np.where(evals < RANK_TOL, 0.0, evals)
    sqrt_rho = (evecs * np.sqrt(evals)) @ evecs.conj().T
    lam = np.linalg.svd(sqrt_rho @ _SPIN_FLIP @ sqrt_rho.conj(), compute_uv=False)
    return float(min(1.0, max(0.0, lam[0] - lam[1] - lam[2] - lam[3])))


def pair_concurrence(state: PureState, pair: SubsystemPair) -> float:
    """Concurrence between two subsystems of a pure total state."""
    return wootters_concurrence(partial_trace_pair(state, pair))
