"""Exception types shared across the package."""


class QexError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(QexError, ValueError):
    """Bad argument: out-of-range index, violated precondition, domain error."""


class UnknownStateError(ValidationError):
    """Named-state lookup failed."""


class ParseError(ValidationError):
    """Malformed input file. Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ResourceLimitError(QexError, RuntimeError):
    """Request exceeds the documented memory/enumeration budget."""


class BackendMismatchError(QexError, RuntimeError):
    """Rank and statevector backends disagree on a subset verdict."""
