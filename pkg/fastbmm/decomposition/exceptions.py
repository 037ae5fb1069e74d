from fastbmm.exceptions import FastbmmError


class DecompositionError(FastbmmError):
    """Exception for inconsistent or unsupported bilinear decompositions."""

    def __init__(self, message: str = "Invalid bilinear decomposition") -> None:
        super().__init__(message)


class SlpError(FastbmmError):
    """Exception for straight-line programs evaluated with the wrong arity."""

    def __init__(self, message: str = "Straight-line program evaluation failed") -> None:
        super().__init__(message)
