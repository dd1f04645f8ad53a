"""Logical qubits on pairs of orthogonal binomial states, and a CNOT gate driven
by a dispersively coupled control atom.

The dispersive coupling is applied only through its phase action: with the
atom in ``|e>`` each photon picks up ``exp(-i theta)``, ``theta = Omega^2 t /
delta``; with the atom in ``|g>`` nothing happens.  ``theta = pi`` maps
``|N, 1/2, phi>`` onto its orthogonal partner ``|N, 1/2, phi + pi>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import InvalidInputError, InvalidTargetError
from .fock import BinomialStateSpec, FockVector, make_binomial_state, reduce_phase

Outcome = Literal["g", "e"]

SPAN_TOL = 1e-10


@dataclass(frozen=True)
class ThreeLevelAtomState:
    """Control atom restricted to ``{|g>, |e>}``; the upper level is never populated."""

    g: complex
    e: complex

    @classmethod
    def ground(cls) -> "ThreeLevelAtomState":
        return cls(1.0, 0.0)

    @classmethod
    def excited(cls) -> "ThreeLevelAtomState":
        return cls(0.0, 1.0)

    @property
    def norm(self) -> float:
        return math.hypot(abs(self.g), abs(self.e))


@dataclass(frozen=True)
class LogicalQubitSpec:
    """``|0_L> = |N, 1/2, phi>``, ``|1_L> = |N, 1/2, phi + pi>``."""

    N: int
    phi: float = 0.0

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise InvalidInputError(f"N must be a positive integer, got {self.N!r}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "phi", reduce_phase(self.phi))

    @property
    def p(self) -> float:
        return 0.5

    def zero(self, dim: int | None = None) -> FockVector:
        return make_binomial_state(BinomialStateSpec(self.N, 0.5, self.phi), dim)

    def one(self, dim: int | None = None) -> FockVector:
        return make_binomial_state(BinomialStateSpec(self.N, 0.5, self.phi + math.pi), dim)

    def encode(self, alpha: complex, beta: complex) -> FockVector:
        """``alpha |0_L> + beta |1_L>``."""
        return FockVector(alpha * self.zero().amplitudes + beta * self.one().amplitudes)


@dataclass(frozen=True, eq=False)
class AtomFieldState:
    """``|g> (x) g_field + |e> (x) e_field`` with unnormalized branch amplitudes."""

    g: np.ndarray
    e: np.ndarray

    def __post_init__(self):
        g = np.array(self.g, dtype=complex).reshape(-1)
        e = np.array(self.e, dtype=complex).reshape(-1)
        if g.size != e.size:
            raise InvalidInputError("branches must share one Fock dimension")
        g.flags.writeable = False
        e.flags.writeable = False
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "e", e)

    @classmethod
    def product(cls, atom: ThreeLevelAtomState, field: FockVector) -> "AtomFieldState":
        return cls(atom.g * field.amplitudes, atom.e * field.amplitudes)

    @property
    def dim(self) -> int:
        return int(self.g.size)

    @property
    def norm(self) -> float:
        return float(math.sqrt(np.sum(np.abs(self.g) ** 2) + np.sum(np.abs(self.e) ** 2)))

    def branch_probability(self, outcome: Outcome) -> float:
        branch = self.g if outcome == "g" else self.e
        return float(np.sum(np.abs(branch) ** 2) / self.norm**2)

    def conditional_field(self, outcome: Outcome) -> FockVector:
        branch = self.g if outcome == "g" else self.e
        return FockVector(branch).normalized()


def dispersive_phase(field: FockVector, theta: float) -> FockVector:
    """Photon-number phase ``|n> -> exp(-i n theta) |n>`` (atom in ``|e>``)."""
    n = np.arange(field.dim)
    return FockVector(field.amplitudes * np.exp(-1j * n * theta))


def dispersive_interaction(state: AtomFieldState, theta: float) -> AtomFieldState:
    phases = np.exp(-1j * np.arange(state.dim) * theta)
    return AtomFieldState(state.g, state.e * phases)


def pi_di(atom: ThreeLevelAtomState, field: FockVector) -> AtomFieldState:
    """Dispersive interaction with ``theta = pi`` on the product ``atom (x) field``."""
    return dispersive_interaction(AtomFieldState.product(atom, field), math.pi)


def ramsey_pi_half(atom: ThreeLevelAtomState) -> ThreeLevelAtomState:
    """``|g> -> (|g> + |e>)/sqrt2``, ``|e> -> (|e> - |g>)/sqrt2``."""
    s = 1.0 / math.sqrt(2.0)
    return ThreeLevelAtomState(s * (atom.g - atom.e), s * (atom.g + atom.e))


def ramsey_pi_half_joint(state: AtomFieldState) -> AtomFieldState:
    s = 1.0 / math.sqrt(2.0)
    return AtomFieldState(s * (state.g - state.e), s * (state.g + state.e))


def _check_qubit(x: complex, y: complex, what: str) -> None:
    if abs(abs(x) ** 2 + abs(y) ** 2 - 1.0) > 1e-10:
        raise InvalidInputError(f"{what} amplitudes must satisfy |.|^2 + |.|^2 = 1")


def qubit_superposition_branches(
    a: complex, b: complex, spec: LogicalQubitSpec
) -> AtomFieldState:
    """Joint state just before the atom is measured.

    First Ramsey zone prepares ``a|g> + b|e>``, then pi-DI with the cavity in
    ``|0_L>``, then the pi/2 pulse.
    """
    _check_qubit(a, b, "(a, b)")
    joint = pi_di(ThreeLevelAtomState(a, b), spec.zero())
    return ramsey_pi_half_joint(joint)


def prepare_qubit_superposition(
    a: complex, b: complex, spec: LogicalQubitSpec, rng: np.random.Generator
) -> tuple[Outcome, FockVector, float]:
    """Prepare ``a|0_L> + b|1_L>`` up to a heralded sign.

    Outcome ``e`` leaves ``a|0_L> + b|1_L>`` in the cavity, outcome ``g`` leaves
    ``a|0_L> - b|1_L>``; each occurs with probability 1/2.  Returns the outcome,
    the conditional field and the outcome probability.
    """
    joint = qubit_superposition_branches(a, b, spec)
    p_e = joint.branch_probability("e")
    outcome: Outcome = "e" if rng.random() < p_e else "g"
    return outcome, joint.conditional_field(outcome), joint.branch_probability(outcome)


def logical_decompose(field: FockVector, spec: LogicalQubitSpec) -> tuple[complex, complex, float]:
    """Coordinates on ``|0_L>``, ``|1_L>`` and the norm of what is left over."""
    dim = max(field.dim, spec.N + 1)
    vec = field.padded(dim).amplitudes
    zero = spec.zero(dim).amplitudes
    one = spec.one(dim).amplitudes
    alpha = complex(np.vdot(zero, vec))
    beta = complex(np.vdot(one, vec))
    residual = float(np.linalg.norm(vec - alpha * zero - beta * one))
    return alpha, beta, residual


def cnot(control: ThreeLevelAtomState, target_field: FockVector, spec: LogicalQubitSpec) -> AtomFieldState:
    """CNOT with the atom as control (``|g> = 0``, ``|e> = 1``) and the cavity as target.

    Targets with a component outside ``span{|0_L>, |1_L>}`` are rejected.
    """
    _, _, residual = logical_decompose(target_field, spec)
    if residual > SPAN_TOL * max(1.0, target_field.norm):
        raise InvalidTargetError(f"target leaves the logical subspace (residual {residual:.3g})")
    return pi_di(control, target_field.padded(max(target_field.dim, spec.N + 1)))


def logical_amplitudes(state: AtomFieldState, spec: LogicalQubitSpec) -> dict[str, complex]:
    """Amplitudes of a joint state on ``|g,0_L>, |g,1_L>, |e,0_L>, |e,1_L>``."""
    g0, g1, _ = logical_decompose(FockVector(state.g), spec)
    e0, e1, _ = logical_decompose(FockVector(state.e), spec)
    return {"g0": g0, "g1": g1, "e0": e0, "e1": e1}


def expected_cnot_amplitudes(a: complex, b: complex, c: complex, d: complex) -> dict[str, complex]:
    """Ideal CNOT output for target ``a|0>+b|1>`` and control ``c|0>+d|1>``."""
    return {"g0": a * c, "g1": b * c, "e0": b * d, "e1": a * d}


def cnot_truth_table(spec: LogicalQubitSpec) -> list[dict]:
    """Four basis-state runs of :func:`cnot`, decomposed in the logical basis."""
    rows = []
    for ctrl_label, ctrl in (("g", ThreeLevelAtomState.ground()), ("e", ThreeLevelAtomState.excited())):
        for tgt_label, tgt in (("0_L", spec.zero()), ("1_L", spec.one())):
            amps = logical_amplitudes(cnot(ctrl, tgt, spec), spec)
            rows.append({"control": ctrl_label, "target": tgt_label, "amplitudes": amps})
    return rows
