"""Simulation configuration: the validated parameter set shared by all modules.

State vectors are plain length-4 complex numpy arrays with amplitudes ordered
as the computational basis {|00>, |01>, |10>, |11>}.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ConfigError,
    NonPositiveDistance,
    NonUnitInitialState,
    StepTooCoarse,
)

MODES = ("static", "driven")

# Below this squared-norm threshold an initial state cannot be meaningfully
# renormalized and is rejected instead.
RENORMALIZABLE_TOL = 1e-6


def default_initial_state() -> np.ndarray:
    """Uniform product state (|0>+|1>)(x)(|0>+|1>)/2: all amplitudes 1/2.

    It is a product state (zero concurrence) and excites all four basis
    phases, so the composite gate phase is well defined from t=0.
    """
    return np.full(4, 0.5, dtype=complex)


def state_vector(c1, c2, c3, c4) -> np.ndarray:
    return np.array([c1, c2, c3, c4], dtype=complex)


def product_state(qubit1, qubit2) -> np.ndarray:
    """Two-qubit product state from two single-qubit amplitude pairs."""
    q1 = np.asarray(qubit1, dtype=complex)
    q2 = np.asarray(qubit2, dtype=complex)
    return np.kron(q1 / np.linalg.norm(q1), q2 / np.linalg.norm(q2))


@dataclass(frozen=True)
class SimulationConfig:
    """All physical parameters plus numerical controls.

    Distances in metres, fields in tesla, J0 in rad/s, times in seconds.
    ``dt`` may be None, in which case the engine picks a step from the
    spectral scale of the Hamiltonian.
    """

    r: float
    Bz1: float
    Bz2: float
    Bg1: float = 0.0
    Bg2: float = 0.0
    Bl1: float = 0.0
    Bl2: float = 0.0
    J0: float = 0.0
    initial_state: np.ndarray = field(default_factory=default_initial_state)
    t_max: float = 2e-8
    dt: float | None = None
    mode: str = "static"
    T2: float = 20e-6
    T1: float | None = None  # recorded for reporting only, unused in dynamics
    norm_tolerance: float = 1e-8

    def replace(self, **changes) -> "SimulationConfig":
        return dataclasses.replace(self, **changes)


def validate(config: SimulationConfig) -> SimulationConfig:
    """Return a normalized copy of ``config`` or raise ConfigError.

    Normalization renormalizes the initial state and zeroes the drive
    amplitudes in static mode.  Every violated invariant is collected before
    raising, so the error lists all of them.  Idempotent.
    """
    violations = []

    if config.r <= 0:
        violations.append(NonPositiveDistance(f"r must be > 0, got {config.r}"))
    if config.t_max <= 0:
        violations.append(StepTooCoarse(f"t_max must be > 0, got {config.t_max}"))
    if config.dt is not None:
        if config.dt <= 0:
            violations.append(StepTooCoarse(f"dt must be > 0, got {config.dt}"))
        elif config.t_max > 0 and config.dt > config.t_max / 100:
            violations.append(
                StepTooCoarse(
                    f"dt={config.dt} too coarse: must be <= t_max/100 = {config.t_max / 100}"
                )
            )
    if config.mode not in MODES:
        violations.append(ConfigErrorItem(f"mode must be one of {MODES}, got {config.mode!r}"))

    psi = np.asarray(config.initial_state, dtype=complex)
    if psi.shape != (4,):
        violations.append(NonUnitInitialState(f"initial_state must have 4 amplitudes, got shape {psi.shape}"))
        psi = default_initial_state()
    else:
        nrm = np.linalg.norm(psi)
        if nrm < RENORMALIZABLE_TOL:
            violations.append(
                NonUnitInitialState(f"initial_state norm {nrm:.3e} too small to renormalize")
            )
        else:
            psi = psi / nrm

    if violations:
        raise ConfigError(violations)

    changes = {"initial_state": psi}
    if config.mode == "static":
        changes["Bl1"] = 0.0
        changes["Bl2"] = 0.0
    return config.replace(**changes)


class ConfigErrorItem(ValueError):
    """Generic single-invariant violation without a dedicated class."""


# --- plain-text config files -------------------------------------------------
#
# One `key=value` per line, `#` starts a comment.  The initial state is eight
# comma-separated reals interpreted as re,im pairs for c1..c4.

CONFIG_KEYS = {
    "r_m": "r",
    "Bz1_T": "Bz1",
    "Bz2_T": "Bz2",
    "Bg1_T": "Bg1",
    "Bg2_T": "Bg2",
    "Bl1_T": "Bl1",
    "Bl2_T": "Bl2",
    "J0_rad_s": "J0",
    "t_max_s": "t_max",
    "dt_s": "dt",
    "T2_s": "T2",
    "T1_s": "T1",
    "norm_tolerance": "norm_tolerance",
}


def parse_key_values(text: str) -> dict:
    """Parse `key=value` lines with `#` comments into a string dict."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigErrorItem(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def parse_initial_state(value: str) -> np.ndarray:
    parts = [p.strip() for p in value.split(",")]
    if len(parts) != 8:
        raise ConfigErrorItem(
            f"initial_state needs 8 comma-separated reals (re,im quadruples), got {len(parts)}"
        )
    reals = [float(p) for p in parts]
    return np.array(
        [complex(reals[2 * i], reals[2 * i + 1]) for i in range(4)], dtype=complex
    )


def config_from_mapping(kv: dict) -> SimulationConfig:
    kwargs = {}
    for file_key, value in kv.items():
        if file_key in CONFIG_KEYS:
            kwargs[CONFIG_KEYS[file_key]] = float(value)
        elif file_key == "mode":
            kwargs["mode"] = value
        elif file_key == "initial_state":
            kwargs["initial_state"] = parse_initial_state(value)
        else:
            raise ConfigErrorItem(f"unknown config key {file_key!r}")
    missing = [k for k in ("r", "Bz1", "Bz2") if k not in kwargs]
    if missing:
        raise ConfigErrorItem(f"missing required config keys: {missing}")
    return SimulationConfig(**kwargs)


def load_config(path) -> SimulationConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_mapping(parse_key_values(fh.read()))


def format_config(config: SimulationConfig) -> str:
    """Serialize a config back to the key=value file format."""
    lines = []
    for file_key, attr in CONFIG_KEYS.items():
        value = getattr(config, attr)
        if value is None:
            continue
        lines.append(f"{file_key}={float(value)!r}")
    lines.append(f"mode={config.mode}")
    psi = np.asarray(config.initial_state, dtype=complex)
    flat = ",".join(f"{float(v)!r}" for c in psi for v in (c.real, c.imag))
    lines.append(f"initial_state={flat}")
    return "\n".join(lines) + "\n"
