"""Exception types shared across the simulator."""


class NGBSError(Exception):
    """Base class for all simulator errors."""


class InvalidInputError(NGBSError, ValueError):
    """A parameter is outside its allowed domain."""


class TruncationError(NGBSError, ValueError):
    """The Fock-space truncation is too small for the requested operation."""


class ImpossibleOutcomeError(NGBSError):
    """A projective measurement outcome has (numerically) zero probability."""


class InvalidTargetError(NGBSError, ValueError):
    """A gate target lies outside the logical-qubit subspace."""
