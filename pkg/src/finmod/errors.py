"""Exception types shared across the package."""


class FinmodError(Exception):
    """Base class for all finmod errors."""


class DomainError(FinmodError):
    """Invalid mathematical input: zero ring, improper submodule, unsupported op."""


class CapExceededError(FinmodError):
    """A carrier or lattice exceeded its configured size cap."""


class ParseError(FinmodError):
    """Script syntax or domain error, with position information."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}: {message}" if column is None else f"line {line}, col {column}: {message}"
        super().__init__(message)
