"""Driven two-spin phase gate with per-spin resonant transverse fields.

Same geometry as the static demo, but each spin additionally sees a 0.5 mT
transverse field oscillating at its own resonance frequency.  The drive is
integrated with fixed-step RK4 (no rotating-wave approximation); the
composite phase still reaches -pi on the nanosecond scale, with a slightly
different gate time and entanglement at the crossing.
"""

import numpy as np

from buckygate import SimulationConfig, run_simulation

static_config = SimulationConfig(
    r=1.14e-9,
    Bz1=0.1,
    Bz2=0.1,
    Bg1=6.08e-5,
    Bg2=-6.08e-5,
    t_max=1.2e-8,
)
driven_config = static_config.replace(mode="driven", Bl1=5e-4, Bl2=5e-4)

static = run_simulation(static_config)
driven = run_simulation(driven_config)

print(f"{'':14s}{'static':>12s}{'driven':>12s}")
print(f"{'tau (ns)':14s}{static.gate.tau * 1e9:12.4f}{driven.gate.tau * 1e9:12.4f}")
print(f"{'theta(tau)':14s}{static.gate.theta_at_tau:12.6f}"
      f"{driven.gate.theta_at_tau:12.6f}")
print(f"{'C(tau)':14s}{static.gate.concurrence_at_tau:12.4f}"
      f"{driven.gate.concurrence_at_tau:12.4f}")
print(f"{'E(C)':14s}{static.gate.eof_at_tau:12.4f}{driven.gate.eof_at_tau:12.4f}")
print(f"{'ops budget':14s}{static.gate.ops_budget:12d}{driven.gate.ops_budget:12d}")

drift = np.max(np.abs(driven.trajectory.norms - 1.0))
print(f"\nworst |norm - 1| along the driven trajectory: {drift:.2e}")
