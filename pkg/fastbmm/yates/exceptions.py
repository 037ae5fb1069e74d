from fastbmm.exceptions import DimensionError


class ChainError(DimensionError):
    """Exception for Kronecker chains that do not fit their input or order."""

    def __init__(self, message: str = "Invalid Kronecker chain application") -> None:
        super().__init__(message)
