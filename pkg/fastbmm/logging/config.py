import sys
from os import PathLike
from typing import TextIO

from loguru import logger

from fastbmm.config import bmm_settings

log = logger.opt(colors=True, lazy=True)
BASE_LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function: <10}</cyan>:<cyan>{line: <3}</cyan> - "
    "<level>{message}</level>"
)


def configure_fastbmm_logging(
    level: str | None = None,
    sink: str | PathLike[str] | TextIO | None = None,
    log_format: str | None = None,
) -> None:
    """
    Configure loguru for the fastbmm library.

    Args:
        level (str | None): Log level ("DEBUG", "INFO", ...). Defaults to BMM_LOG_LEVEL.
        sink (str | PathLike | TextIO | None): Log destination (None for stderr,
            stdout is reserved for CLI reports).
        log_format (str|None): Custom log format.
    """
    logger.remove()

    logger.add(
        sink or sys.stderr,
        level=(level or bmm_settings.LOG_LEVEL).upper(),
        format=log_format or BASE_LOG_FORMAT,
        colorize=sink is None,
    )


def enable_fastbmm_logging() -> None:
    logger.enable("fastbmm")


def disable_fastbmm_logging() -> None:
    logger.disable("fastbmm")


configure_fastbmm_logging()
