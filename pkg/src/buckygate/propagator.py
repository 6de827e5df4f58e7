"""Schrodinger propagation of the four basis amplitudes.

Two routes are provided on purpose:

* ``propagate_static`` solves the time-independent problem exactly through an
  eigendecomposition and serves as the oracle for everything else;
* ``propagate_numeric`` integrates the (possibly time-dependent) equations
  with fixed-step classical RK4.

The state is never renormalized during integration: norm drift is the
step-size diagnostic, hiding it would defeat the check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import SimulationConfig
from .constants import CONSTANTS, PhysicalConstants
from .errors import NonHermitianInput, NormDrift
from .fields import ResonancePair
from .hamiltonian import build_drive, build_static, drive_peak_amplitude, is_hermitian

# Phase advanced per integration step at the fastest Hamiltonian scale.
MAX_PHASE_PER_STEP = 0.05

# The engine integrates a factor below the bound above so that RK4 norm drift
# stays well inside the default 1e-8 tolerance over ~10 ns horizons.
DEFAULT_STEP_SAFETY = 0.2


@dataclass(frozen=True)
class Trajectory:
    """Sampled time evolution: times (s) and the 4 amplitudes per sample."""

    times: np.ndarray
    states: np.ndarray

    def __post_init__(self):
        if self.states.shape != (len(self.times), 4):
            raise ValueError("states must have shape (len(times), 4)")

    @property
    def norms(self) -> np.ndarray:
        """Squared norm at each sample."""
        return np.sum(np.abs(self.states) ** 2, axis=1)

    def state_at_index(self, i: int) -> np.ndarray:
        return self.states[i]


def recommended_step(h_scale: float) -> float:
    """Step dt such that h_scale * dt <= 0.05 rad per step.

    ``h_scale`` is the largest absolute Hamiltonian entry, drive peak and
    resonance frequency included.  This is an upper bound on a usable step;
    long integrations should stay a factor of a few below it.
    """
    if h_scale <= 0:
        raise ValueError(f"h_scale must be > 0, got {h_scale}")
    return MAX_PHASE_PER_STEP / h_scale


def hamiltonian_scale(
    config: SimulationConfig,
    resonances: ResonancePair,
    constants: PhysicalConstants = CONSTANTS,
) -> float:
    """Fastest angular-frequency scale of the full (static + drive) problem."""
    h0 = build_static(config, constants)
    return max(
        float(np.max(np.abs(h0))),
        drive_peak_amplitude(config, constants),
        abs(resonances.omega1),
        abs(resonances.omega2),
    )


class SpectralPropagator:
    """Exact evolution under a constant Hermitian matrix via eigendecomposition."""

    def __init__(self, h: np.ndarray):
        if not is_hermitian(h):
            raise NonHermitianInput("static Hamiltonian is not Hermitian")
        self.eigenvalues, self.eigenvectors = np.linalg.eigh(h)

    def evolve(self, psi: np.ndarray, dtau: float) -> np.ndarray:
        """psi(t0 + dtau) from psi(t0)."""
        v = self.eigenvectors
        return v @ (np.exp(-1j * self.eigenvalues * dtau) * (v.conj().T @ psi))

    def propagate(self, psi0: np.ndarray, times: np.ndarray) -> np.ndarray:
        v = self.eigenvectors
        coef = v.conj().T @ psi0
        phases = np.exp(-1j * np.outer(np.asarray(times), self.eigenvalues))
        return (phases * coef) @ v.T


def propagate_static(h: np.ndarray, psi0: np.ndarray, times) -> Trajectory:
    """Exact static-Hamiltonian trajectory psi(t) = V exp(-i L t) V^dag psi0."""
    times = np.asarray(times, dtype=float)
    _check_times(times)
    prop = SpectralPropagator(h)
    states = prop.propagate(np.asarray(psi0, dtype=complex), times)
    return Trajectory(times=times, states=states)


def rk4_segment(hfun, psi: np.ndarray, t0: float, t1: float, dt_max: float) -> np.ndarray:
    """Integrate i dpsi/dt = H(t) psi from t0 to t1 with uniform steps <= dt_max."""
    span = t1 - t0
    if span == 0:
        return psi.copy()
    n = max(1, int(np.ceil(span / dt_max)))
    h = span / n
    t = t0
    for _ in range(n):
        k1 = -1j * (hfun(t) @ psi)
        k2 = -1j * (hfun(t + h / 2) @ (psi + h / 2 * k1))
        k3 = -1j * (hfun(t + h / 2) @ (psi + h / 2 * k2))
        k4 = -1j * (hfun(t + h) @ (psi + h * k3))
        psi = psi + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        t += h
    return psi


def time_dependent_hamiltonian(
    config: SimulationConfig,
    resonances: ResonancePair,
    constants: PhysicalConstants = CONSTANTS,
):
    """Return H(t) for the configured mode as a callable of time."""
    h0 = build_static(config, constants)
    if config.mode != "driven" or (config.Bl1 == 0 and config.Bl2 == 0):
        return lambda t: h0
    return lambda t: h0 + build_drive(config, resonances, t, constants)


def propagate_numeric(
    config: SimulationConfig,
    resonances: ResonancePair,
    times,
    constants: PhysicalConstants = CONSTANTS,
) -> Trajectory:
    """Fixed-step RK4 trajectory recorded at the requested sample times.

    Integrates at the configured base step (or an automatically chosen one)
    and raises NormDrift as soon as a sample's squared norm departs from 1 by
    more than the configured tolerance.
    """
    times = np.asarray(times, dtype=float)
    _check_times(times)
    hfun = time_dependent_hamiltonian(config, resonances, constants)
    dt = config.dt
    if dt is None:
        scale = hamiltonian_scale(config, resonances, constants)
        dt = DEFAULT_STEP_SAFETY * recommended_step(scale)

    psi = np.asarray(config.initial_state, dtype=complex).copy()
    states = np.empty((len(times), 4), dtype=complex)
    states[0] = psi
    for i in range(1, len(times)):
        psi = rk4_segment(hfun, psi, times[i - 1], times[i], dt)
        states[i] = psi
        drift = abs(np.sum(np.abs(psi) ** 2) - 1.0)
        if drift > config.norm_tolerance:
            raise NormDrift(
                f"squared norm drifted by {drift:.3e} at t={times[i]:.6e} s "
                f"(tolerance {config.norm_tolerance:.1e}); decrease dt"
            )
    return Trajectory(times=times, states=states)


def _check_times(times: np.ndarray):
    if len(times) < 2 or times[0] != 0:
        raise ValueError("times must start at 0 and contain at least two samples")
    if np.any(np.diff(times) <= 0):
        raise ValueError("times must be strictly increasing")
