"""Exception types shared across the package.

Each class maps to one CLI exit code (see :mod:`deckrecon.cli`).
"""


class DeckReconError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(DeckReconError, ValueError):
    pass


class InstanceTooLargeError(DeckReconError):
    """An exhaustive computation would exceed a hard size guard."""


class InvariantViolationError(DeckReconError, RuntimeError):
    """A result contradicts a proven theorem; treat as a bug signal."""


class VerificationFailureError(DeckReconError):
    """A classification could not be verified by direct comparison."""


class InfeasibleError(DeckReconError, ValueError):
    pass


class TranslatesInputError(DeckReconError, ValueError):
    """The operation needs a pair that is not related by translation."""


class NotAMultisetError(DeckReconError, ValueError):
    """A spectrum does not invert to a non-negative integer count vector."""
