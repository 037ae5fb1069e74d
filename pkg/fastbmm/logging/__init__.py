from fastbmm.logging.config import (
    configure_fastbmm_logging,
    disable_fastbmm_logging,
    enable_fastbmm_logging,
    log,
)

__all__ = [
    "log",
    "configure_fastbmm_logging",
    "enable_fastbmm_logging",
    "disable_fastbmm_logging",
]
