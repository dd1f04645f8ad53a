"""Truncated single-mode Fock space: state vectors, generalized binomial states,
overlaps and the coherent-state limit.

Amplitudes are indexed by photon number ``n = 0 .. dim-1``.  All objects are
immutable; operations return new vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, TruncationError

NORM_TOL = 1e-12


def reduce_phase(phi: float) -> float:
    """Map an angle onto the half-open interval (-pi, pi]."""
    r = math.remainder(float(phi), 2.0 * math.pi)
    if r <= -math.pi:
        r += 2.0 * math.pi
    return r


def _frozen(values, dtype=complex) -> np.ndarray:
    arr = np.array(values, dtype=dtype).reshape(-1)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class FockVector:
    """Cavity field state over photon numbers ``0 .. dim-1``."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = _frozen(self.amplitudes)
        if amps.size < 1:
            raise InvalidInputError("a FockVector needs dim >= 1")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.size)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm**2 - 1.0) <= NORM_TOL

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    @classmethod
    def basis(cls, n: int, dim: int | None = None) -> "FockVector":
        """Number state ``|n>``."""
        dim = n + 1 if dim is None else dim
        if not 0 <= n < dim:
            raise TruncationError(f"|{n}> does not fit in dim={dim}")
        amps = np.zeros(dim, dtype=complex)
        amps[n] = 1.0
        return cls(amps)

    def normalized(self) -> "FockVector":
        nrm = self.norm
        if nrm == 0.0:
            raise InvalidInputError("cannot normalize the zero vector")
        return FockVector(self.amplitudes / nrm)

    def padded(self, dim: int) -> "FockVector":
        """Zero-pad up to ``dim``; never truncates."""
        if dim < self.dim:
            raise TruncationError(f"cannot pad dim={self.dim} down to {dim}")
        amps = np.zeros(dim, dtype=complex)
        amps[: self.dim] = self.amplitudes
        return FockVector(amps)

    def mean_photon_number(self) -> float:
        probs = self.probabilities
        return float(np.dot(np.arange(self.dim), probs) / probs.sum())

    def __len__(self) -> int:
        return self.dim


@dataclass(frozen=True)
class BinomialStateSpec:
    """Parameters ``(N, p, phi)`` of an N-photon generalized binomial state.

    ``phi`` is stored reduced to (-pi, pi], so specs differing by 2*pi compare
    equal.
    """

    N: int
    p: float
    phi: float = 0.0

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 0:
            raise InvalidInputError(f"N must be a non-negative integer, got {self.N!r}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidInputError(f"p must lie in [0, 1], got {self.p!r}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "phi", reduce_phase(self.phi))


def binomial_coefficient(N: int, n: int) -> float:
    """Square root of the binomial coefficient ``C(N, n)``; zero outside ``0..N``."""
    if n < 0 or n > N:
        return 0.0
    # math.comb is exact integer arithmetic, so no factorial overflow.
    return math.sqrt(math.comb(N, n))


def binomial_coefficients(N: int) -> np.ndarray:
    return np.array([binomial_coefficient(N, n) for n in range(N + 1)])


def binomial_weights(N: int, p: float) -> np.ndarray:
    """``p**n (1-p)**(N-n)`` for ``n = 0..N`` with ``0**0 = 1``."""
    return np.array([p**n * (1.0 - p) ** (N - n) for n in range(N + 1)])


def make_binomial_state(spec: BinomialStateSpec, dim: int | None = None) -> FockVector:
    """Build ``|N, p, phi>`` in a Fock space of size ``dim`` (default ``N + 1``)."""
    N, p, phi = spec.N, spec.p, spec.phi
    dim = N + 1 if dim is None else dim
    if dim < N + 1:
        raise TruncationError(f"|{N},p,phi> needs dim >= {N + 1}, got {dim}")
    amps = np.zeros(dim, dtype=complex)
    n = np.arange(N + 1)
    amps[: N + 1] = (
        binomial_coefficients(N) * np.sqrt(binomial_weights(N, p)) * np.exp(1j * n * phi)
    )
    return FockVector(amps)


def inner_product(a: FockVector, b: FockVector) -> complex:
    """``<a|b>``, zero-padding the shorter vector."""
    dim = max(a.dim, b.dim)
    va, vb = a.padded(dim).amplitudes, b.padded(dim).amplitudes
    return complex(np.vdot(va, vb))


def fidelity(a: FockVector, b: FockVector) -> float:
    """Overlap fidelity ``|<a|b>|^2 / (||a||^2 ||b||^2)``."""
    na, nb = a.norm, b.norm
    if na == 0.0 or nb == 0.0:
        raise InvalidInputError("fidelity is undefined for a zero vector")
    f = abs(inner_product(a, b)) ** 2 / (na * na * nb * nb)
    return float(min(f, 1.0))


def default_coherent_dim(alpha: complex) -> int:
    r = abs(alpha)
    return int(math.ceil(r * r + 8.0 * r + 10.0))


def coherent_state(alpha: complex, dim: int | None = None) -> FockVector:
    """Glauber coherent state ``|alpha>`` truncated at ``dim``.

    Raises TruncationError if more than 1e-10 of the probability lies beyond
    the truncation.
    """
    dim = default_coherent_dim(alpha) if dim is None else dim
    if dim < 1:
        raise TruncationError("dim must be >= 1")
    amps = np.empty(dim, dtype=complex)
    amps[0] = math.exp(-abs(alpha) ** 2 / 2.0)
    for n in range(1, dim):
        amps[n] = amps[n - 1] * alpha / math.sqrt(n)
    tail = 1.0 - float(np.sum(np.abs(amps) ** 2))
    if tail >= 1e-10:
        raise TruncationError(f"coherent state alpha={alpha} loses {tail:.3g} beyond dim={dim}")
    return FockVector(amps)


def orthogonal_partner(spec: BinomialStateSpec) -> BinomialStateSpec:
    """The spec ``(N, 1-p, phi+pi)`` whose state is orthogonal to ``spec``'s."""
    return BinomialStateSpec(spec.N, 1.0 - spec.p, spec.phi + math.pi)


__all__ = [
    "BinomialStateSpec",
    "FockVector",
    "binomial_coefficient",
    "binomial_coefficients",
    "binomial_weights",
    "coherent_state",
    "default_coherent_dim",
    "fidelity",
    "inner_product",
    "make_binomial_state",
    "orthogonal_partner",
    "reduce_phase",
]
