"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter value outside the mathematical domain of an operation.

    Raised for forbidden Legendre parameters (lambda in {0, 1}), points
    outside the upper half plane, and similar. The CLI maps this to exit
    code 3, distinct from usage errors (2) and verification failures (1).
    """


class PrecisionError(RuntimeError):
    """Numeric precision was insufficient to certify an exact result."""
