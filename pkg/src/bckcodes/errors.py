"""Exception hierarchy shared by the whole package."""


class BckError(Exception):
    """Base class for every error raised by this package."""


class InputError(BckError, ValueError):
    """A caller-supplied value violates a documented precondition."""


class NotBckError(InputError):
    """An operation that needs a BCK-algebra received something else."""


class ParseError(InputError):
    """A text input (algebra, code, or function file) is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalInvariantError(BckError, RuntimeError):
    """A property the library guarantees internally failed to hold."""
