"""Exception types shared across the package.

Each CLI-facing error carries the process exit code it maps to.
"""


class KickedTopError(Exception):
    exit_code = 1


class UsageError(KickedTopError, ValueError):
    exit_code = 2


class NumericalIntegrityError(KickedTopError, ArithmeticError):
    exit_code = 3


class ResourceCapError(KickedTopError, MemoryError):
    exit_code = 4


class DegenerateInputError(KickedTopError, ValueError):
    """Raised when a quantity is undefined for the given input (e.g. a zero matrix)."""

    exit_code = 2
