"""Command-line front end.

Subcommands:
  simulate <config>        trajectory CSV + gate summary
  gate-time <config>       gate summary only
  sweep <spec>             one-parameter sweep, results CSV
  field-profile <wires>    wire-pair field profile CSV

Exit codes: 0 success, 1 configuration error, 2 no gate-time crossing,
3 numerical failure (norm drift / undefined phase).

All numeric output uses repr formatting, so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import __version__
from .analysis import concurrence
from .config import (
    ConfigErrorItem,
    format_config,
    config_from_mapping,
    load_config,
    parse_key_values,
)
from .engine import run_simulation
from .errors import (
    ConfigError,
    NoCrossing,
    NormDrift,
    SimulationError,
    SingularPosition,
    SweepSpecError,
    UndefinedPhase,
)
from .fields import WirePair, gradient_field

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NO_CROSSING = 2
EXIT_NUMERICAL = 3

TRAJECTORY_HEADER = (
    "t_s,re_c1,im_c1,re_c2,im_c2,re_c3,im_c3,re_c4,im_c4,theta_rad,concurrence,norm"
)
SWEEP_HEADER = "param_value,tau_s,concurrence_at_tau,eof_at_tau,ops_budget,status"

SWEEP_PARAMS = ("r", "Bz", "Bg1", "Bg2", "Bl", "I", "J0")


@dataclass(frozen=True)
class RunManifest:
    """Pairs every output file with the exact config that produced it."""

    config_snapshot: str
    engine_version: str
    mode: str
    outputs: tuple
    duration_s: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "engine_version": self.engine_version,
                "mode": self.mode,
                "outputs": list(self.outputs),
                "duration_s": self.duration_s,
                "config_snapshot": self.config_snapshot.splitlines(),
            },
            indent=2,
        )


def _fmt(x) -> str:
    return repr(float(x))


def trajectory_csv(result) -> str:
    rows = [TRAJECTORY_HEADER]
    traj, phases = result.trajectory, result.phases
    norms = traj.norms
    for i, t in enumerate(traj.times):
        c = traj.states[i]
        fields = [_fmt(t)]
        for j in range(4):
            fields.append(_fmt(c[j].real))
            fields.append(_fmt(c[j].imag))
        fields.append(_fmt(phases.theta[i]))
        fields.append(_fmt(concurrence(c)))
        fields.append(_fmt(norms[i]))
        rows.append(",".join(fields))
    return "\n".join(rows) + "\n"


def summary_text(result) -> str:
    g = result.gate
    s1_0, s1_1, s2_0, s2_1 = g.correction_phases
    lines = [
        f"mode={result.config.mode}",
        f"omega1_rad_s={_fmt(result.resonances.omega1)}",
        f"omega2_rad_s={_fmt(result.resonances.omega2)}",
        f"tau_s={_fmt(g.tau)}",
        f"theta_at_tau_rad={_fmt(g.theta_at_tau)}",
        f"concurrence_at_tau={_fmt(g.concurrence_at_tau)}",
        f"entanglement_of_formation={_fmt(g.eof_at_tau)}",
        f"ops_budget={g.ops_budget}",
        f"s1_0_rad={_fmt(s1_0)}",
        f"s1_1_rad={_fmt(s1_1)}",
        f"s2_0_rad={_fmt(s2_0)}",
        f"s2_1_rad={_fmt(s2_1)}",
    ]
    return "\n".join(lines) + "\n"


def cmd_simulate(args) -> int:
    config = load_config(args.config)
    start = time.monotonic()
    result = run_simulation(config)
    import os

    os.makedirs(args.outdir, exist_ok=True)
    traj_path = os.path.join(args.outdir, "trajectory.csv")
    summary_path = os.path.join(args.outdir, "summary.txt")
    manifest_path = os.path.join(args.outdir, "run_manifest.json")
    with open(traj_path, "w", encoding="utf-8") as fh:
        fh.write(trajectory_csv(result))
    text = summary_text(result)
    with open(summary_path, "w", encoding="utf-8") as fh:
        fh.write(text)
    manifest = RunManifest(
        config_snapshot=format_config(result.config),
        engine_version=__version__,
        mode=result.config.mode,
        outputs=(traj_path, summary_path),
        duration_s=time.monotonic() - start,
    )
    with open(manifest_path, "w", encoding="utf-8") as fh:
        fh.write(manifest.to_json() + "\n")
    sys.stdout.write(text)
    return EXIT_OK


def cmd_gate_time(args) -> int:
    result = run_simulation(load_config(args.config))
    sys.stdout.write(summary_text(result))
    return EXIT_OK


# --- sweep -------------------------------------------------------------------


def parse_sweep_spec(text: str):
    """Split a sweep file into (param name, values, base-config mapping, wire mapping)."""
    kv = parse_key_values(text)
    param = kv.pop("param", None)
    if param not in SWEEP_PARAMS:
        raise SweepSpecError(f"param must be one of {SWEEP_PARAMS}, got {param!r}")
    values = None
    if "values" in kv:
        values = [float(v) for v in kv.pop("values").split(",")]
    elif "range" in kv or "logrange" in kv:
        key = "range" if "range" in kv else "logrange"
        parts = kv.pop(key).split(",")
        if len(parts) != 3:
            raise SweepSpecError(f"{key} needs start,stop,count")
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        if key == "range":
            values = list(np.linspace(start, stop, count))
        else:
            values = list(np.geomspace(start, stop, count))
    else:
        raise SweepSpecError("sweep spec needs `values=` or `range=`/`logrange=`")
    if len(values) < 2:
        raise SweepSpecError(f"a sweep needs at least 2 points, got {len(values)}")

    wires = {}
    for key in ("d_m", "rho_m", "x1_m", "x2_m"):
        if key in kv:
            wires[key] = float(kv.pop(key))
    return param, values, kv, wires


def apply_sweep_param(base_config, param: str, value: float, wires: dict):
    if param == "r":
        return base_config.replace(r=value)
    if param == "Bz":
        return base_config.replace(Bz1=value, Bz2=value)
    if param == "Bg1":
        return base_config.replace(Bg1=value)
    if param == "Bg2":
        return base_config.replace(Bg2=value)
    if param == "J0":
        return base_config.replace(J0=value)
    if param == "Bl":
        mode = "driven" if value != 0 else "static"
        return base_config.replace(Bl1=value, Bl2=value, mode=mode)
    if param == "I":
        missing = [k for k in ("d_m", "rho_m", "x1_m", "x2_m") if k not in wires]
        if missing:
            raise SweepSpecError(f"sweeping I needs wire keys {missing}")
        pair = WirePair(
            current=value, separation=wires["d_m"], radius=wires["rho_m"]
        )
        return base_config.replace(
            Bg1=gradient_field(pair, wires["x1_m"]),
            Bg2=gradient_field(pair, wires["x2_m"]),
        )
    raise SweepSpecError(f"unknown sweep parameter {param!r}")


def _sweep_point(task):
    """Worker for one sweep point; returns a finished CSV row."""
    index, value, config = task
    try:
        result = run_simulation(config)
        g = result.gate
        row = ",".join(
            [
                _fmt(value),
                _fmt(g.tau),
                _fmt(g.concurrence_at_tau),
                _fmt(g.eof_at_tau),
                str(g.ops_budget),
                "ok",
            ]
        )
    except SimulationError as exc:
        row = ",".join([_fmt(value), "", "", "", "", type(exc).__name__])
    return index, row


def cmd_sweep(args) -> int:
    with open(args.spec, "r", encoding="utf-8") as fh:
        param, values, base_kv, wires = parse_sweep_spec(fh.read())
    base_config = config_from_mapping(base_kv)
    tasks = [
        (i, v, apply_sweep_param(base_config, param, v, wires))
        for i, v in enumerate(values)
    ]
    rows = [None] * len(tasks)
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for index, row in pool.map(_sweep_point, tasks):
                rows[index] = row
    else:
        for task in tasks:
            index, row = _sweep_point(task)
            rows[index] = row
    out = SWEEP_HEADER + "\n" + "\n".join(rows) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


# --- field profile -----------------------------------------------------------


def load_wires(path) -> WirePair:
    with open(path, "r", encoding="utf-8") as fh:
        kv = parse_key_values(fh.read())
    try:
        return WirePair(
            current=float(kv["I_A"]),
            separation=float(kv["d_m"]),
            radius=float(kv["rho_m"]),
        )
    except KeyError as exc:
        raise ConfigErrorItem(f"wire config missing key {exc}") from exc


def cmd_field_profile(args) -> int:
    wires = load_wires(args.wires)
    xs = np.linspace(args.x_from, args.x_to, args.points)
    bg = gradient_field(wires, xs)
    lines = ["x_m,Bg_T"]
    lines.extend(f"{_fmt(x)},{_fmt(b)}" for x, b in zip(xs, bg))
    out = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buckygate",
        description="Two-qubit phase gate simulation for dipole-coupled spins.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run one simulation, write CSV + summary")
    p.add_argument("config")
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("gate-time", help="print the gate summary only")
    p.add_argument("config")
    p.set_defaults(func=cmd_gate_time)

    p = sub.add_parser("sweep", help="run a one-parameter sweep")
    p.add_argument("spec")
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("field-profile", help="wire-pair field profile CSV")
    p.add_argument("wires")
    p.add_argument("--from", dest="x_from", type=float, required=True)
    p.add_argument("--to", dest="x_to", type=float, required=True)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_field_profile)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ConfigErrorItem, SweepSpecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except NoCrossing as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CROSSING
    except (NormDrift, UndefinedPhase, SingularPosition) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
