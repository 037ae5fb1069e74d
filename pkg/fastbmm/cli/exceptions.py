from fastbmm.exceptions import FastbmmError


class UsageError(FastbmmError):
    """Exception for invalid command-line arguments."""

    def __init__(self, message: str = "Invalid command-line arguments") -> None:
        super().__init__(message)


class CheckFailed(FastbmmError):
    """Exception for a benchmark result that differs from the cubic product."""

    def __init__(self, message: str = "Result differs from the cubic product") -> None:
        super().__init__(message)
