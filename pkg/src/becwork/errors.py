"""Exception types shared across the package."""


class BecworkError(Exception):
    """Base class for all becwork errors."""


class DomainError(BecworkError, ValueError):
    """An argument lies outside the physically meaningful domain."""


class CapacityError(BecworkError, ValueError):
    """A request exceeds a configured size limit (full-space cap, particle
    count underflow)."""


class ValidationError(BecworkError, ValueError):
    """Input data violates a structural invariant (e.g. an unnormalized
    density grid)."""


class GridFormatError(ValidationError):
    """A density CSV file could not be parsed; the message carries the
    offending line number."""
