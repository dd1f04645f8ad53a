"""Experimental-feasibility estimates for the generation scheme.

The closed-form estimates here are order-of-magnitude figures (they carry an
``order_of_magnitude`` label in reports); :func:`monte_carlo_jitter` gives
the quantitative counterpart by re-simulating runs with noisy interaction
times.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidInputError
from .fock import BinomialStateSpec, binomial_weights, binomial_coefficients, fidelity, make_binomial_state
from .protocol import plan_times, run_protocol, run_protocol_full_sim

DETECTOR_EFFICIENCY_NOTE = (
    "Atomic detectors are ~70-80% efficient. With near-unit success probability, "
    "post-selection barely changes the generated state, so inefficiency is not simulated."
)


@dataclass(frozen=True)
class ExperimentParams:
    """Physical parameters of a cavity-QED setup.

    g is an angular coupling in rad/s; lifetimes are in seconds.
    """

    g: float = 2.0 * math.pi * 5e4
    tau_at: float = 1e-2
    tau_cav: float = 1e-3
    rel_time_err: float = 1e-2
    Q: float | None = None

    def __post_init__(self):
        for name in ("g", "tau_at", "tau_cav"):
            if not getattr(self, name) > 0:
                raise InvalidInputError(f"{name} must be positive")
        if not 0 <= self.rel_time_err < 1:
            raise InvalidInputError("rel_time_err must lie in [0, 1)")
        if self.Q is not None and not self.Q > 0:
            raise InvalidInputError("Q must be positive")


def timing_error_estimate(N: int, gT_N: float, rel_err: float) -> np.ndarray:
    """Coefficient error ``n (gT_N)^2 (dT/T)^2`` caused by timing jitter, ``n = 0..N``."""
    if rel_err < 0:
        raise InvalidInputError("rel_err must be >= 0")
    return np.arange(N + 1) * gT_N**2 * rel_err**2


def infidelity_from_relative_errors(rel_errors: Sequence[float], N: int, p: float) -> float:
    """Infidelity of coefficients ``b_n (1 - eps_n)`` against ``|N, p, phi>``.

    To second order this is the variance of ``eps`` under the photon-number
    distribution of the target.
    """
    eps = np.asarray(rel_errors, dtype=float)
    w = binomial_coefficients(N) ** 2 * binomial_weights(N, p)
    mean = float(np.dot(w, eps))
    return float(np.dot(w, eps**2)) - mean**2


def jitter_infidelity_estimate(N: int, p: float, gT_N: float, rel_err: float) -> float:
    """Expected infidelity when each coefficient carries an independent zero-mean
    error of size ``timing_error_estimate``: ``sum_n w_n (1 - w_n) delta_exp_n^2``."""
    delta = timing_error_estimate(N, gT_N, rel_err)
    w = binomial_coefficients(N) ** 2 * binomial_weights(N, p)
    return float(np.sum(w * (1.0 - w) * delta**2))


def decoherence_time(tau_cav: float, N: int) -> float:
    """Field decoherence time ``2 tau_cav / N``."""
    if N < 1:
        raise InvalidInputError("N must be >= 1")
    return 2.0 * tau_cav / N


def max_photon_bound(g: float, tau_cav: float) -> int:
    """Largest integer ``N`` with ``N < 4 (g tau_cav)^2``."""
    if not (g > 0 and tau_cav > 0):
        raise InvalidInputError("g and tau_cav must be positive")
    return int(math.ceil(4.0 * (g * tau_cav) ** 2)) - 1


def max_photon_bounds_both(coupling_hz: float, tau_cav: float) -> dict:
    """The bound for ``g = 2 pi f`` and for ``g = f`` side by side.

    The published figure for ``f = 50 kHz`` and ``tau_cav = 1 ms`` (``N < 1e4``)
    only follows from the second reading; both are reported.
    """
    return {
        "coupling_hz": coupling_hz,
        "tau_cav": tau_cav,
        "N_max_angular": max_photon_bound(2.0 * math.pi * coupling_hz, tau_cav),
        "N_max_without_2pi": max_photon_bound(coupling_hz, tau_cav),
        "published_bound": 1e4,
    }


@dataclass(frozen=True)
class LifetimeReport:
    T: tuple[float, ...]
    tau_dec: float
    below_tau_at: tuple[bool, ...]
    below_tau_cav: tuple[bool, ...]
    below_tau_dec: tuple[bool, ...]
    sequence_time: float
    sequence_fits: bool

    @property
    def all_ok(self) -> bool:
        return all(self.below_tau_at) and all(self.below_tau_cav) and all(self.below_tau_dec) and self.sequence_fits

    def to_dict(self) -> dict:
        d = asdict(self)
        d["all_ok"] = self.all_ok
        return d


def lifetime_check(params: ExperimentParams, gT_sequence: Sequence[float]) -> LifetimeReport:
    """Compare each interaction time ``T_k = gT_k / g`` with the lifetimes.

    The decoherence time is evaluated at the final photon number ``N =
    len(gT_sequence)``; the whole sequence of interaction times must also fit
    inside ``tau_cav``.
    """
    N = len(gT_sequence)
    T = tuple(float(gt) / params.g for gt in gT_sequence)
    tau_dec = decoherence_time(params.tau_cav, N)
    total = float(sum(T))
    return LifetimeReport(
        T=T,
        tau_dec=tau_dec,
        below_tau_at=tuple(t < params.tau_at for t in T),
        below_tau_cav=tuple(t < params.tau_cav for t in T),
        below_tau_dec=tuple(t < tau_dec for t in T),
        sequence_time=total,
        sequence_fits=total < params.tau_cav,
    )


@dataclass(frozen=True)
class JitterStats:
    N: int
    p: float
    rel_sigma: float
    trials: int
    seed: int
    mean_fidelity: float
    min_fidelity: float
    std_fidelity: float
    mean_probability: float

    @property
    def mean_infidelity(self) -> float:
        return 1.0 - self.mean_fidelity

    def to_dict(self) -> dict:
        d = asdict(self)
        d["mean_infidelity"] = self.mean_infidelity
        return d


def monte_carlo_jitter(
    N: int, p: float, rel_sigma: float, trials: int, seed: int = 0, phi: float = 0.0
) -> JitterStats:
    """Fidelity and success probability under multiplicative Gaussian timing noise.

    Every planned ``gT_k`` becomes ``gT_k (1 + eps_k)`` with independent
    ``eps_k ~ Normal(0, rel_sigma^2)``.  Atomic phases and ground-state
    post-selection are as planned.  Each trial draws from its own child of
    ``SeedSequence(seed)``, so results do not depend on evaluation order.
    """
    if trials < 1:
        raise InvalidInputError("trials must be >= 1")
    if rel_sigma < 0:
        raise InvalidInputError("rel_sigma must be >= 0")
    plan = plan_times(N, -phi)
    target = make_binomial_state(BinomialStateSpec(N, p, phi))
    base = np.array(plan.gT)
    fids = np.empty(trials)
    probs = np.empty(trials)
    for i, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        eps = np.random.default_rng(child).normal(0.0, 1.0, size=N) * rel_sigma
        rep = run_protocol_full_sim(N, p, phi, gT=base * (1.0 + eps))
        fids[i] = fidelity(target, rep.final_state)
        probs[i] = rep.total_probability
    return JitterStats(
        N=N,
        p=float(p),
        rel_sigma=float(rel_sigma),
        trials=int(trials),
        seed=int(seed),
        mean_fidelity=float(fids.mean()),
        min_fidelity=float(fids.min()),
        std_fidelity=float(fids.std()),
        mean_probability=float(probs.mean()),
    )


def feasibility_report(params: ExperimentParams, N: int = 10, p: float = 0.5, coupling_hz: float | None = None) -> dict:
    """Collect the closed-form estimates for one parameter set."""
    rep = run_protocol(N, p)
    gT_N = rep.plan.gT[-1]
    delta_exp = timing_error_estimate(N, gT_N, params.rel_time_err)
    lifetimes = lifetime_check(params, rep.plan.gT)
    coupling_hz = params.g / (2.0 * math.pi) if coupling_hz is None else coupling_hz
    bounds = max_photon_bounds_both(coupling_hz, params.tau_cav)
    return {
        "label": "order_of_magnitude",
        "params": asdict(params),
        "N": N,
        "p": p,
        "gT": list(rep.plan.gT),
        "timing_error_estimate": delta_exp.tolist(),
        "mismatches": list(rep.mismatches),
        "jitter_infidelity_estimate": jitter_infidelity_estimate(N, p, gT_N, params.rel_time_err),
        "decoherence_time": decoherence_time(params.tau_cav, N),
        "lifetimes": lifetimes.to_dict(),
        "max_photon_bound": bounds,
        "max_photon_bound_note": (
            f"4(g tau_cav)^2 gives N_max = {bounds['N_max_angular']} with g = 2 pi f "
            f"and {bounds['N_max_without_2pi']} with g = f; the published 1e4 matches only the latter"
        ),
        "detector_note": DETECTOR_EFFICIENCY_NOTE,
    }
