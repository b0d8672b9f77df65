"""Exception hierarchy.

The CLI maps these onto exit codes, so the split between "bad input" and
"mathematically inconsistent input" matters.
"""


class LSpaceError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class SchemaError(LSpaceError, ValueError):
    """Malformed input: bad JSON, parity mismatch, asymmetric polynomial, ..."""

    exit_code = 2


class NotLSpaceLinkError(LSpaceError):
    """The data is not consistent with an L-space link on the inspected box."""

    exit_code = 3

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class BoxTooSmallError(LSpaceError):
    """The box does not reach far enough to observe stabilization."""

    exit_code = 4
