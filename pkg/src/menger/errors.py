"""Exception types shared across the package."""


class MengerError(Exception):
    """Base class for all package errors."""


class DomainError(MengerError, ValueError):
    """A value is outside its declared domain (bad mask, shape mismatch, ...)."""


class ResourceGuardError(MengerError, RuntimeError):
    """A requested computation exceeds the configured desk-scale budget."""


class PreconditionError(MengerError, ValueError):
    """An operation was called on inputs that violate its stated hypothesis."""
