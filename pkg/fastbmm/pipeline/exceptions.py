from fastbmm.exceptions import FastbmmError


class PipelineError(FastbmmError):
    """Base exception for host pipeline failures."""

    def __init__(self, message: str = "Host pipeline failed") -> None:
        super().__init__(message)


class BufferStateError(PipelineError):
    """Exception for a buffer transition other than Free to Occupied or back."""

    def __init__(self, message: str = "Invalid buffer state transition") -> None:
        super().__init__(message)


class GuardViolation(PipelineError):
    """Exception for two writers inside the same output subvector."""

    def __init__(self, message: str = "Concurrent write to a guarded subvector") -> None:
        super().__init__(message)


class PipelineAborted(PipelineError):
    """Raised in a stage when another stage has failed."""

    def __init__(self, message: str = "Pipeline aborted by a failing stage") -> None:
        super().__init__(message)
