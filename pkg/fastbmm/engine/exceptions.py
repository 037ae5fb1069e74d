from fastbmm.exceptions import DimensionError, FastbmmError


class SemiringError(FastbmmError):
    """Exception for an algorithm that is unsound over the requested semiring."""

    def __init__(
        self, message: str = "Algorithm does not support the requested semiring"
    ) -> None:
        super().__init__(message)


class PlanError(DimensionError):
    """Exception for level plans that do not fit the operands."""

    def __init__(self, message: str = "Level plan does not match the operands") -> None:
        super().__init__(message)
