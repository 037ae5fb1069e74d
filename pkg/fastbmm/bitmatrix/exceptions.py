from fastbmm.exceptions import DimensionError, FastbmmError


class ShapeError(DimensionError):
    """Exception for matrices whose dimensions do not fit the operation."""

    def __init__(self, message: str = "Matrix shape is not supported") -> None:
        super().__init__(message)


class LayoutError(DimensionError):
    """Exception for vectors interpreted under the wrong layout."""

    def __init__(self, message: str = "Bit vector layout mismatch") -> None:
        super().__init__(message)


class BitFormatError(FastbmmError):
    """Exception for malformed BMM1 files or text dumps."""

    def __init__(self, message: str = "Malformed bit-matrix data") -> None:
        super().__init__(message)
