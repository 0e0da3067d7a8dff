"""
Error hierarchy

Every toolkit error carries the process exit code the CLI maps it to.
"""


class GreedyKitError(Exception):
    """Base class for toolkit errors"""

    exit_code: int = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class DomainError(GreedyKitError, ValueError):
    """An argument lies outside the mathematical domain of an operation"""

    exit_code = 3


class InstanceParseError(GreedyKitError, ValueError):
    """An instance file could not be parsed"""

    exit_code = 3

    def __init__(self, message: str, row: int | None = None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class CapabilityError(GreedyKitError):
    """The request is well-formed but too large to carry out"""

    exit_code = 4


class UsageError(GreedyKitError):
    """Flags that argparse accepts but that do not make sense together"""

    exit_code = 2
