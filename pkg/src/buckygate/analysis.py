"""Gate-phase extraction, gate time, local corrections, and entanglement measures.

The composite gate phase is

    theta(t) = Arg c1(t) - Arg c2(t) - Arg c3(t) + Arg c4(t),

built from per-coefficient arguments unwrapped by nearest-branch continuation
and rescaled so that theta(0) = 0.  The individual arguments are kept because
the local correction phases need them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoCrossing, OutOfRange, UndefinedPhase, ZeroState
from .propagator import Trajectory

# Amplitudes below this leave Arg undefined.
AMP_FLOOR = 1e-12

# theta weights for (c1, c2, c3, c4): +1, -1, -1, +1.
THETA_WEIGHTS = np.array([1.0, -1.0, -1.0, 1.0])


@dataclass(frozen=True)
class PhaseSeries:
    """Unwrapped per-coefficient arguments and the composite phase theta.

    ``theta`` is rescaled to start at 0; ``per_basis_args`` are the raw
    unwrapped Arg(c_i(t)) series (not rescaled).
    """

    times: np.ndarray
    theta: np.ndarray
    per_basis_args: np.ndarray


@dataclass(frozen=True)
class GateResult:
    """Summary of one gate run."""

    tau: float
    theta_at_tau: float
    concurrence_at_tau: float
    eof_at_tau: float
    ops_budget: int
    correction_phases: tuple  # (s1_0, s1_1, s2_0, s2_1) in rad


def unwrap_phases(traj: Trajectory, amp_floor: float = AMP_FLOOR) -> PhaseSeries:
    """Continuous Arg series per coefficient plus the composite phase.

    Raises UndefinedPhase if any amplitude magnitude falls below
    ``amp_floor`` anywhere along the trajectory.
    """
    amps = np.abs(traj.states)
    if np.min(amps) < amp_floor:
        i, j = np.unravel_index(np.argmin(amps), amps.shape)
        raise UndefinedPhase(
            f"|c{j + 1}| = {amps[i, j]:.3e} at t={traj.times[i]:.6e} s; "
            "Arg is undefined at vanishing amplitude"
        )
    args = np.unwrap(np.angle(traj.states), axis=0)
    theta = args @ THETA_WEIGHTS
    return PhaseSeries(times=traj.times, theta=theta - theta[0], per_basis_args=args)


def compose_theta(args4) -> float:
    """theta from four (already aligned) coefficient arguments."""
    return float(np.asarray(args4) @ THETA_WEIGHTS)


def find_gate_time(
    phases: PhaseSeries,
    target: float = -math.pi,
    theta_fn=None,
    time_tol: float = 1e-12,
    phase_tol: float = 1e-7,
) -> float:
    """First time the unwrapped composite phase reaches +/-|target|.

    The nominal target is -pi; if the series reaches +|target| first that
    earlier crossing is returned instead.  Between the bracketing samples the
    crossing is refined by bisection on ``theta_fn`` (a continuous theta(t)
    evaluator, typically backed by re-propagation) until the bracket is below
    ``time_tol`` seconds and the phase residual below ``phase_tol`` rad;
    without an evaluator, linear interpolation of the sampled series is used.

    Raises NoCrossing when the phase never reaches the target before the end
    of the series; the exception carries theta at the final sample.
    """
    level = abs(target)
    theta = phases.theta
    hit = np.flatnonzero(np.abs(theta) >= level)
    if len(hit) == 0:
        raise NoCrossing(
            f"theta stayed in (-{level:.6f}, {level:.6f}) up to "
            f"t={phases.times[-1]:.6e} s (theta_end={theta[-1]:.6f} rad)",
            theta_end=float(theta[-1]),
        )
    i = hit[0]
    if i == 0:
        return float(phases.times[0])
    crossed = level if theta[i] >= level else -level
    t_lo, t_hi = phases.times[i - 1], phases.times[i]
    th_lo, th_hi = theta[i - 1], theta[i]

    if theta_fn is None:
        return float(t_lo + (t_hi - t_lo) * (crossed - th_lo) / (th_hi - th_lo))

    f_lo = th_lo - crossed
    f_best = math.inf
    t_best = t_lo
    while t_hi - t_lo > time_tol or abs(f_best) > phase_tol:
        t_mid = 0.5 * (t_lo + t_hi)
        if t_mid == t_lo or t_mid == t_hi:  # float resolution reached
            break
        f_mid = theta_fn(t_mid) - crossed
        if abs(f_mid) < abs(f_best):
            f_best, t_best = f_mid, t_mid
        if (f_mid > 0) == (f_lo > 0):
            t_lo, f_lo = t_mid, f_mid
        else:
            t_hi = t_mid
    return float(t_best)


def correction_phases(phi00: float, phi01: float, phi10: float):
    """Local single-qubit phases (s1_0, s1_1, s2_0, s2_1) removing the
    single-particle parts of the evolution, leaving only the entangling phase
    on |11>."""
    s1_0 = -phi00 / 2
    s1_1 = -phi10 + phi00 / 2
    s2_0 = -phi00 / 2
    s2_1 = -phi01 + phi00 / 2
    return (s1_0, s1_1, s2_0, s2_1)


def concurrence(psi) -> float:
    """Normalized concurrence C = 2 |c2 c3 - c1 c4| / <psi|psi> in [0, 1]."""
    c = np.asarray(psi, dtype=complex)
    nrm2 = float(np.sum(np.abs(c) ** 2))
    if nrm2 < AMP_FLOOR**2:
        raise ZeroState("cannot compute concurrence of the zero state")
    return float(2 * abs(c[1] * c[2] - c[0] * c[3]) / nrm2)


def spin_flip(psi) -> np.ndarray:
    """Two-qubit spin flip (sigma_y x sigma_y) conj(psi)."""
    c = np.conj(np.asarray(psi, dtype=complex))
    return np.array([-c[3], c[2], c[1], -c[0]], dtype=complex)


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0."""
    if x <= 0 or x >= 1:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def entanglement_of_formation(c: float) -> float:
    """E(C) = h((1 + sqrt(1 - C^2)) / 2), monotone from 0 to 1 on [0, 1]."""
    if not -1e-12 <= c <= 1 + 1e-12:
        raise OutOfRange(f"concurrence must lie in [0, 1], got {c}")
    c = min(max(c, 0.0), 1.0)
    return binary_entropy((1 + math.sqrt(1 - c * c)) / 2)


def ops_budget(tau: float, t2: float) -> int:
    """Number of gate operations fitting into the coherence time: floor(T2/tau)."""
    if tau <= 0:
        raise OutOfRange(f"gate time must be > 0, got {tau}")
    return int(math.floor(t2 / tau))
