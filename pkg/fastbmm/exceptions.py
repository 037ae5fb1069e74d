class FastbmmError(RuntimeError):
    """Base exception for all fastbmm errors."""

    def __init__(self, message: str = "Bit-matrix multiplication error occurred") -> None:
        super().__init__(message)


class DimensionError(FastbmmError):
    """Base exception for shape, layout and plan mismatches."""

    def __init__(self, message: str = "Dimension mismatch") -> None:
        super().__init__(message)
