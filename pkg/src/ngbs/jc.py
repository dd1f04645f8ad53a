"""Resonant Jaynes-Cummings dynamics of one two-level atom and one cavity mode.

Everything is in the interaction picture and time enters only as the
dimensionless product ``gt``.  The closed-form evolution rotates each pair
``(|up,n>, |down,n+1>)`` by the angle ``gt*sqrt(n+1)``; ``jc_unitary_oracle``
reaches the same result by exponentiating the dense generator, and exists
only to cross-check the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import ImpossibleOutcomeError, InvalidInputError, TruncationError
from .fock import NORM_TOL, FockVector

Level = Literal["up", "down"]

IMPOSSIBLE_PROB = 1e-15


@dataclass(frozen=True)
class AtomState:
    """Two-level atom ``up|up> + down|down>``."""

    up: complex
    down: complex

    @classmethod
    def excited(cls) -> "AtomState":
        return cls(1.0, 0.0)

    @classmethod
    def ground(cls) -> "AtomState":
        return cls(0.0, 1.0)

    @property
    def is_normalized(self) -> bool:
        return abs(abs(self.up) ** 2 + abs(self.down) ** 2 - 1.0) <= NORM_TOL


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex).reshape(-1)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class JointState:
    """Atom-field state ``sum_n u_n |up,n> + d_n |down,n>``."""

    u: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        u, d = _frozen(self.u), _frozen(self.d)
        if u.size != d.size or u.size < 1:
            raise InvalidInputError("u and d must have the same non-zero length")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "d", d)

    @property
    def dim(self) -> int:
        return int(self.u.size)

    @property
    def norm(self) -> float:
        return float(math.sqrt(np.sum(np.abs(self.u) ** 2) + np.sum(np.abs(self.d) ** 2)))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm**2 - 1.0) <= NORM_TOL

    def as_vector(self) -> np.ndarray:
        """Stacked ``[u_0..u_{dim-1}, d_0..d_{dim-1}]``."""
        return np.concatenate([self.u, self.d])

    @classmethod
    def from_vector(cls, vec: np.ndarray) -> "JointState":
        dim = vec.size // 2
        return cls(vec[:dim], vec[dim:])

    def padded(self, dim: int) -> "JointState":
        if dim < self.dim:
            raise TruncationError(f"cannot pad dim={self.dim} down to {dim}")
        u = np.zeros(dim, dtype=complex)
        d = np.zeros(dim, dtype=complex)
        u[: self.dim] = self.u
        d[: self.dim] = self.d
        return JointState(u, d)


def tensor(atom: AtomState, field: FockVector) -> JointState:
    return JointState(atom.up * field.amplitudes, atom.down * field.amplitudes)


def _with_headroom(state: JointState, grow: bool) -> JointState:
    # |up, dim-1> couples to |down, dim>, which is outside the space.
    if state.u[-1] == 0:
        return state
    if not grow:
        raise TruncationError(
            f"|up,{state.dim - 1}> is populated; evolution would leave dim={state.dim}"
        )
    return state.padded(state.dim + 1)


def evolve_resonant(state: JointState, gt: float, grow: bool = True) -> JointState:
    """Exact resonant evolution for the dimensionless time ``gt``.

    The truncation grows by one when the top ``|up>`` amplitude is non-zero;
    with ``grow=False`` that case raises TruncationError instead.
    """
    state = _with_headroom(state, grow)
    u, d = state.u, state.d
    angles = gt * np.sqrt(np.arange(1, state.dim))
    c, s = np.cos(angles), np.sin(angles)
    new_u = u.copy()
    new_d = d.copy()
    # pair (u_n, d_{n+1}) for n = 0..dim-2; d_0 is stationary
    new_u[:-1] = c * u[:-1] + s * d[1:]
    new_d[1:] = -s * u[:-1] + c * d[1:]
    return JointState(new_u, new_d)


def ramsey_prepare(p: float, varphi: float) -> AtomState:
    """Atom ``sqrt(p)|up> + exp(i varphi) sqrt(1-p)|down>``."""
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"p must lie in [0, 1], got {p!r}")
    return AtomState(math.sqrt(p), complex(math.cos(varphi), math.sin(varphi)) * math.sqrt(1.0 - p))


def project_atom(state: JointState, level: Level) -> tuple[FockVector, float]:
    """Measure the atom; return the conditional field state and its probability."""
    if level == "up":
        branch = state.u
    elif level == "down":
        branch = state.d
    else:
        raise InvalidInputError(f"level must be 'up' or 'down', got {level!r}")
    prob = float(np.sum(np.abs(branch) ** 2) / state.norm**2)
    if prob < IMPOSSIBLE_PROB:
        raise ImpossibleOutcomeError(f"atom outcome {level!r} has probability {prob:.3g}")
    return FockVector(branch / np.linalg.norm(branch)), prob


def jc_generator(dim: int) -> np.ndarray:
    """Dense interaction-picture generator ``G`` with ``d/d(gt) psi = G psi``.

    ``G = sigma_+ a - sigma_- a^dagger`` in the stacked ``[u, d]`` layout.
    """
    G = np.zeros((2 * dim, 2 * dim))
    for n in range(1, dim):
        G[n - 1, dim + n] = math.sqrt(n)
        G[dim + n, n - 1] = -math.sqrt(n)
    return G


def expm_taylor(A: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    """Matrix exponential by scaling and squaring around a truncated Taylor series."""
    A = np.asarray(A)
    norm = np.linalg.norm(A, 1)
    squarings = max(0, int(math.ceil(math.log2(norm / 0.5)))) if norm > 0.5 else 0
    X = A / 2.0**squarings
    result = np.eye(A.shape[0], dtype=np.result_type(A, float))
    term = result.copy()
    k = 0
    while True:
        k += 1
        term = term @ X / k
        result = result + term
        if np.linalg.norm(term, 1) <= tol * np.linalg.norm(result, 1):
            break
        if k > 200:
            raise RuntimeError("Taylor series for expm did not converge")
    for _ in range(squarings):
        result = result @ result
    return result


def jc_unitary_oracle(state: JointState, gt: float, grow: bool = True) -> JointState:
    """Same evolution as :func:`evolve_resonant`, via ``expm(G * gt)``."""
    state = _with_headroom(state, grow)
    U = expm_taylor(jc_generator(state.dim) * gt)
    return JointState.from_vector(U @ state.as_vector())


__all__ = [
    "AtomState",
    "JointState",
    "Level",
    "evolve_resonant",
    "expm_taylor",
    "jc_generator",
    "jc_unitary_oracle",
    "project_atom",
    "ramsey_prepare",
    "tensor",
]
