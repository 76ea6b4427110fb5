class ValidationError(ValueError):
    """Raised when an input violates the preconditions of an operation."""


class CompatibilityError(ValidationError):
    """Raised when the faces of a horn do not satisfy the simplicial identities.

    ``pair`` holds the offending index pair ``(i, j)`` with ``i < j``.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class VerificationError(RuntimeError):
    """An operation failed to verify its own output. Always a bug."""
