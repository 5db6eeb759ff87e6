"""Exception hierarchy shared across the package."""


class VdwError(Exception):
    """Base class for every error raised by this package."""


class DomainError(VdwError, ValueError):
    """Arguments outside the mathematical domain of an operation."""


class UnsupportedRangeError(DomainError):
    """Parameters are valid in general but outside what the operation supports."""


class PreconditionError(DomainError):
    """A documented precondition on the inputs does not hold."""


class MissingConstantError(DomainError):
    """A parameterized bound was evaluated without its constant."""


class NoBasisError(VdwError):
    """No known bound exists from which to derive a value."""


class LimitExceededError(VdwError):
    """The input is larger than a configured safety cap."""


class InvalidColoringError(VdwError):
    """A coloring expected to be valid contains a k-term monochromatic progression."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class FormatError(VdwError, ValueError):
    """A serialized artifact could not be parsed."""


class MalformedHeaderError(FormatError):
    pass


class SymbolRangeError(FormatError):
    pass


class HashMismatchError(FormatError):
    pass


class BoundsDBError(FormatError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
