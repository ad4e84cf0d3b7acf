"""Exception types shared across the package."""


class PrimeGraphError(Exception):
    """Base class for all package errors."""


class InvalidInput(PrimeGraphError, ValueError):
    """Malformed or out-of-contract input (bad labels, unknown names, ...)."""


class SizeLimitExceeded(PrimeGraphError):
    """A hard size cap was hit (enumeration, exhaustive search, ...)."""


class ContractViolation(PrimeGraphError):
    """A documented precondition of an operation does not hold."""


class DataIntegrityError(PrimeGraphError):
    """Embedded data failed a consistency check (tables, generators)."""


class CapabilityError(PrimeGraphError):
    """The request is valid but outside what this implementation realizes."""


class NotApplicable(PrimeGraphError):
    """The operation is not defined for the given family."""
