"""Exception types shared across the package."""


class NetdiffError(Exception):
    """Base class for all package errors."""


class ValidationError(NetdiffError, ValueError):
    """Input data violates a structural constraint (bad weight, bad node id, ...)."""


class ParameterError(NetdiffError, ValueError):
    """Infeasible or inconsistent parameters (e.g. an odd n*k regular graph)."""


class FormatError(NetdiffError, ValueError):
    """Malformed input file."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number
