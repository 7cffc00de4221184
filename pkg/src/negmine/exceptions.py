"""Exception hierarchy for negmine."""


class NegmineError(Exception):
    """Base class for all errors raised by this package."""


class IngestionError(NegmineError, ValueError):
    """Raised when a basket source cannot be turned into a database."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class DomainError(NegmineError, ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class InconsistentSupportError(NegmineError, ValueError):
    """Raised when a triple of supports cannot come from one database."""


class UndefinedConfidenceError(NegmineError, ZeroDivisionError):
    """Raised when a rule's antecedent has zero support."""


class CapacityError(NegmineError, RuntimeError):
    """Raised when the brute-force oracle is asked for too large an input."""
