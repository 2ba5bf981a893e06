# errors.py
"""
Shared exception hierarchy.
Every domain failure derives from TaggingError so the CLI can map it to a usage exit code.
"""


class TaggingError(ValueError):
    """Base class for all domain errors raised by the library."""
    pass


class InvalidBathError(TaggingError):
    """Raised when a bath specification violates beta >= 0, gamma > 0 or omega0 > 0."""
    pass


class DivergentOccupationError(TaggingError):
    """Raised when the Bose-Einstein occupation is requested at beta = 0."""
    pass


class InfiniteTemperatureError(TaggingError):
    """Raised when the thermal ratio is requested at beta = 0."""
    pass


class DomainError(TaggingError):
    """Raised for arguments outside the domain of an operation (negative time, r outside [0, 1], ...)."""
    pass


class NoDiscriminationError(TaggingError):
    """Raised when an optimum is requested at zero temperature, where both hypotheses coincide."""
    pass


class RootNotFoundError(TaggingError):
    """Raised when a bracketed root search finds no sign change."""
    pass


class UnphysicalStateError(TaggingError):
    """Raised when a covariance matrix violates det(sigma) >= 1."""
    pass


class SingularCovarianceError(TaggingError):
    """Raised when the Chernoff covariance sum cannot be inverted."""
    pass


class ClosedFormPreconditionError(TaggingError):
    """Raised when the displaced-thermal closed form is used outside its regime."""
    pass


class NonFiniteObjectiveError(TaggingError):
    """Raised when a minimized objective returns NaN or infinity."""
    pass


class TruncationError(TaggingError):
    """Raised when the Fock truncation leaks more population than tolerated."""
    pass


class StepSizeError(TaggingError):
    """Raised when the integrated density matrix loses positivity."""
    pass


class UsageError(TaggingError):
    """Raised for CLI flag combinations that cannot be honoured."""
    pass
