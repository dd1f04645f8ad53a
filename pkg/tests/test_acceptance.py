"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line (shown in the ``acceptance criteria``
section of the pytest summary) and then asserts at the stated tolerance.
"""

import math

import numpy as np
import pytest

from ngbs.feasibility import (
    decoherence_time,
    feasibility_report,
    ExperimentParams,
    jitter_infidelity_estimate,
    max_photon_bound,
    monte_carlo_jitter,
    timing_error_estimate,
)
from ngbs.fock import (
    BinomialStateSpec,
    FockVector,
    coherent_state,
    fidelity,
    inner_product,
    make_binomial_state,
    orthogonal_partner,
)
from ngbs.gates import (
    LogicalQubitSpec,
    ThreeLevelAtomState,
    cnot,
    cnot_truth_table,
    expected_cnot_amplitudes,
    logical_amplitudes,
    qubit_superposition_branches,
)
from ngbs.jc import JointState, evolve_resonant, jc_unitary_oracle
from ngbs.protocol import (
    appendix_identity_check,
    plan_times,
    run_protocol,
    run_protocol_full_sim,
    step_coefficients,
)
from ngbs import published

# Golden mean fidelity of monte_carlo_jitter(3, 0.5, 1e-2, 1000, seed=2024).
MC_SEED = 2024
MC_GOLDEN_MEAN_FIDELITY = float.fromhex("0x1.ffdf429369305p-1")


def test_criterion_01_table_reproduction(record_criterion):
    bad = []
    total = 0
    for N, row in published.TABLE_I.items():
        delta = run_protocol(N, 0.5).mismatches
        for n in range(1, N + 1):
            total += 1
            if abs(delta[n] - row[n]) > published.table_tolerance(row[n]):
                bad.append(f"(N={N}, n={n}) computed {delta[n]:.4e} vs {row[n]:.4e}")
    record_criterion(
        "1 table reproduction",
        not bad,
        f"{total - len(bad)}/{total} cells within max(2%, 2e-4)" + (f"; off: {'; '.join(bad)}" if bad else ""),
    )
    assert not bad


def test_criterion_02_quoted_scalars(record_criterion):
    plan3 = plan_times(3)
    r2 = run_protocol(2, 0.5)
    grid = (0.0, 0.25, 0.5, 0.75, 1.0)
    p2_err = max(abs(run_protocol(2, p).steps[1].P_k - published.p2_quoted(p)) for p in grid)
    p3_err = max(abs(run_protocol(3, p).steps[2].P_k - published.p3_quoted(p)) for p in grid)
    f3_inf = 1 - run_protocol(3, 0.5).fidelity
    fn_inf = max(1 - run_protocol(N, 0.5).fidelity for N in range(4, 11))
    checks = {
        "gT3": abs(plan3.gT[2] - published.GT3) <= 1e-3,
        "c2": abs(r2.coefficients[2] - published.C2_2) <= 1e-6,
        "P2": p2_err <= 5e-5,
        "P3": p3_err <= 5e-3,
        "F3": abs(f3_inf - published.F3_HALF_INFIDELITY) <= 1e-5,
        "F4..10": fn_inf <= 5e-4,
    }
    detail = (
        f"gT3={plan3.gT[2]:.5f} c2={r2.coefficients[2]:.7f} P2 err={p2_err:.1e} "
        f"P3 err={p3_err:.1e} 1-F3={f3_inf:.2e} max 1-F(4..10)={fn_inf:.1e}"
    )
    failed = [k for k, ok in checks.items() if not ok]
    record_criterion("2 quoted scalars", not failed, detail + (f"; failed: {failed}" if failed else ""))
    assert not failed


def test_criterion_03_probability_range(record_criterion):
    lo, hi = published.PROBABILITY_RANGE
    probs = {N: run_protocol(N, 0.5).total_probability for N in range(3, 11)}
    out = [N for N in range(4, 11) if not lo <= probs[N] <= hi]
    n3_ok = probs[3] >= 1 - 1e-2
    detail = " ".join(f"N={N}:{P:.4f}" for N, P in probs.items())
    if out:
        detail += f"; outside [{lo}, {hi}] for N={out}"
    if not n3_ok:
        detail += "; N=3 below 0.99"
    record_criterion("3 probability range", not out and n3_ok, detail)
    assert not out and n3_ok


def test_criterion_04_oracle_equivalence(record_criterion):
    worst_overlap = 0.0
    worst_step = 0.0
    for N in range(1, 11):
        for p in np.round(np.arange(0.1, 1.0, 0.1), 10):
            a = run_protocol(N, p)
            b = run_protocol_full_sim(N, p)
            worst_overlap = max(worst_overlap, 1 - abs(inner_product(a.final_state, b.final_state)) ** 2)
            worst_step = max(
                worst_step, max(abs(x - y) for x, y in zip(a.step_probabilities, b.step_probabilities))
            )
    ok = worst_overlap <= 1e-10 and worst_step <= 1e-10
    record_criterion("4 recursion vs joint simulation", ok, f"1-overlap {worst_overlap:.1e}, step P {worst_step:.1e}")
    assert ok


def test_criterion_05_dynamics_oracle(record_criterion):
    rng = np.random.default_rng(500)
    worst = 0.0
    for _ in range(500):
        dim = int(rng.integers(1, 16))
        vec = rng.normal(size=2 * dim) + 1j * rng.normal(size=2 * dim)
        vec[dim - 1] = 0  # leave headroom so both routes stay in the same space
        state = JointState.from_vector(vec / np.linalg.norm(vec))
        gt = float(rng.uniform(0, 30))
        a = evolve_resonant(state, gt).as_vector()
        b = jc_unitary_oracle(state, gt).as_vector()
        worst = max(worst, float(np.max(np.abs(a - b))))
    record_criterion("5 dynamics oracle", worst < 1e-10, f"max deviation {worst:.1e} over 500 cases")
    assert worst < 1e-10


def test_criterion_06_structural_identities(record_criterion):
    appendix = appendix_identity_check(30)
    ortho = 0.0
    for N in range(1, 21):
        for p in (0.1, 0.3, 0.5, 0.7, 0.9):
            s = BinomialStateSpec(N, p, 0.4)
            ortho = max(ortho, abs(inner_product(make_binomial_state(s), make_binomial_state(orthogonal_partner(s)))))
    resid = 0.0
    for N in range(1, 11):
        for s in run_protocol(N, 0.5).steps:
            resid = max(resid, abs(s.a_residual[max(s.k - 1, 1) - 1]))
    a1, _ = step_coefficients([1.0], plan_times(1).gT[0])
    plan2 = plan_times(2)
    _, c1 = step_coefficients([1.0], plan2.gT[0])
    a2, _ = step_coefficients(c1, plan2.gT[1])
    eps = np.finfo(float).eps
    exact = abs(a1[0]) <= eps and abs(a2[0]) <= 4 * eps
    ok = appendix < 1e-12 and ortho < 1e-12 and resid < 1e-12 and exact
    record_criterion(
        "6 structural identities",
        ok,
        f"appendix {appendix:.1e}, orthogonality {ortho:.1e}, targeted residual {resid:.1e}, "
        f"k=1 {abs(a1[0]):.1e}, k=2 {abs(a2[0]):.1e}",
    )
    assert ok


def test_criterion_07_cnot(record_criterion):
    rng = np.random.default_rng(7)
    spec = LogicalQubitSpec(3, 0.0)
    ideal = {("g", "0_L"): "g0", ("g", "1_L"): "g1", ("e", "0_L"): "e1", ("e", "1_L"): "e0"}
    truth = max(
        abs(v - (1 if k == ideal[(row["control"], row["target"])] else 0))
        for row in cnot_truth_table(spec)
        for k, v in row["amplitudes"].items()
    )

    def qubit():
        v = rng.normal(size=2) + 1j * rng.normal(size=2)
        v /= np.linalg.norm(v)
        return complex(v[0]), complex(v[1])

    general = 0.0
    for _ in range(100):
        a, b = qubit()
        c, d = qubit()
        got = logical_amplitudes(cnot(ThreeLevelAtomState(c, d), spec.encode(a, b), spec), spec)
        want = expected_cnot_amplitudes(a, b, c, d)
        general = max(general, max(abs(got[k] - want[k]) for k in want))

    prob_err = 0.0
    g_state_err = 0.0
    for _ in range(100):
        a, b = qubit()
        joint = qubit_superposition_branches(a, b, spec)
        prob_err = max(prob_err, abs(joint.branch_probability("g") - 0.5), abs(joint.branch_probability("e") - 0.5))
        g_state = joint.conditional_field("g").amplitudes
        g_state_err = max(g_state_err, float(np.max(np.abs(g_state - spec.encode(a, -b).amplitudes))))
    ok = truth < 1e-12 and general < 1e-12 and prob_err <= 1e-12 and g_state_err < 1e-12
    record_criterion(
        "7 CNOT",
        ok,
        f"truth table {truth:.1e}, general {general:.1e}, outcome P {prob_err:.1e}, g-branch state {g_state_err:.1e}",
    )
    assert ok


def test_criterion_08_limits(record_criterion):
    exact = True
    for N in range(1, 11):
        for phi in (0.0, 1.3):
            exact &= np.array_equal(make_binomial_state(BinomialStateSpec(N, 0.0, phi)).amplitudes, FockVector.basis(0, N + 1).amplitudes)
            top = make_binomial_state(BinomialStateSpec(N, 1.0, phi)).amplitudes
            exact &= bool(np.all(top[:N] == 0)) and abs(abs(top[N]) - 1) == 0
    coh = coherent_state(1.0)
    fids = [fidelity(make_binomial_state(BinomialStateSpec(N, 1 / N, 0.0)), coh) for N in (10, 20, 40)]
    monotone = fids[0] < fids[1] < fids[2]
    record_criterion("8 limits", exact and monotone, f"coherent-limit fidelities {[round(f, 6) for f in fids]}")
    assert exact and monotone


def test_criterion_09_feasibility(record_criterion):
    gT3 = plan_times(3).gT[2]
    d_exp = timing_error_estimate(3, gT3, 1e-2)
    d = run_protocol(3, 0.5).mismatches
    below = [n for n in range(1, 4) if d_exp[n] < d[n]]
    arithmetic = (
        decoherence_time(1e-3, 10) == 2e-4
        and max_photon_bound(50.0, 1.0) == 9999
        and max_photon_bound(2 * math.pi * 5e4, 1e-3) == math.ceil(4 * (2 * math.pi * 50) ** 2) - 1
    )
    bounds = feasibility_report(ExperimentParams(), N=3)["max_photon_bound"]
    surfaced = bounds["N_max_without_2pi"] == 9999 and bounds["N_max_angular"] > 3.9e5 and bounds["published_bound"] == 1e4
    ok = not below and arithmetic and surfaced
    detail = " ".join(f"n={n}: exp {d_exp[n]:.4e} vs {d[n]:.4e}" for n in range(1, 4))
    if below:
        detail += f"; estimate below actual mismatch at n={below}"
    detail += f"; N_max {bounds['N_max_angular']} (g=2pi f) vs {bounds['N_max_without_2pi']} (g=f)"
    record_criterion("9 feasibility", ok, detail)
    assert ok


def test_criterion_10_monte_carlo_regression(record_criterion):
    first = monte_carlo_jitter(3, 0.5, 1e-2, trials=1000, seed=MC_SEED)
    second = monte_carlo_jitter(3, 0.5, 1e-2, trials=1000, seed=MC_SEED)
    deterministic = first.mean_fidelity == second.mean_fidelity == MC_GOLDEN_MEAN_FIDELITY
    estimate = jitter_infidelity_estimate(3, 0.5, plan_times(3).gT[2], 1e-2)
    ratio = first.mean_infidelity / estimate
    ok = deterministic and 0.1 <= ratio <= 10
    record_criterion(
        "10 Monte Carlo regression",
        ok,
        f"mean F {first.mean_fidelity!r} (golden {MC_GOLDEN_MEAN_FIDELITY!r}), "
        f"1-F {first.mean_infidelity:.2e} vs estimate {estimate:.2e} (ratio {ratio:.2f})",
    )
    assert ok
