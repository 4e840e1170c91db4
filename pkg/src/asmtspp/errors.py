"""Exception types shared across the package."""


class StructuralError(ValueError):
    """Operands or arguments have incompatible shape (variable sets, matrix sizes, syntax)."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class DivisibilityError(ArithmeticError):
    """Exact division left a non-zero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ResourceGuardError(RuntimeError):
    """A desk-scale enumeration guard was exceeded without an explicit override."""


class VerificationFailure(AssertionError):
    """Two computations that should agree exactly do not."""
