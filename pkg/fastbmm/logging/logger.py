import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

from loguru import logger


class FastbmmLogger:
    """
    Named loguru wrapper.

    Messages are prefixed with ``[name]`` and, when context is bound, with the
    ``key=value`` pairs of that context (for example the plan of a multiply).
    """

    def __init__(self, name: str = "fastbmm", **context: Any) -> None:
        self.name = name
        self.context = context
        self.logger = logger.opt(colors=True, lazy=True)

    def bind(self, **context: Any) -> "FastbmmLogger":
        """Return a logger with the same name and additional context."""
        return FastbmmLogger(self.name, **{**self.context, **context})

    def _parse_msg(self, message: str) -> str:
        if not self.context:
            return f"<m>[{self.name}]</m> {message}"
        tags = " ".join(f"{key}={value}" for key, value in self.context.items())
        return f"<m>[{self.name}]</m> <c>{tags}</c> {message}"

    def debug(self, message: str, *args: Any, **kwargs: Any) -> None:
        self.logger.debug(self._parse_msg(message), *args, **kwargs)

    def info(self, message: str, *args: Any, **kwargs: Any) -> None:
        self.logger.info(self._parse_msg(message), *args, **kwargs)

    def warning(self, message: str, *args: Any, **kwargs: Any) -> None:
        self.logger.warning(self._parse_msg(message), *args, **kwargs)

    def error(self, message: str, *args: Any, **kwargs: Any) -> None:
        self.logger.error(self._parse_msg(message), *args, **kwargs)

    def exception(self, message: str, *args: Any, **kwargs: Any) -> None:
        self.logger.exception(self._parse_msg(message), *args, **kwargs)

    @contextmanager
    def timed(self, stage: str) -> Iterator[None]:
        """Log the wall time of the wrapped block at debug level."""
        started = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - started
            self.debug(f"{stage} took {elapsed:.4f}s")
