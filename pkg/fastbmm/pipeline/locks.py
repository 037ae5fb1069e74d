import threading
from collections.abc import Iterator
from contextlib import contextmanager

from fastbmm.pipeline.exceptions import GuardViolation


class SubvectorLocks:
    """
    One lock per ``Ĉ`` subvector of the host layer, ``4^d_host`` in total.

    The lock records the thread holding it, so a write site can check with
    :meth:`require` that it runs inside the matching :meth:`guard`.
    """

    def __init__(self, d_host: int) -> None:
        self.count = 4**d_host
        self._locks = [threading.Lock() for _ in range(self.count)]
        self._owners: list[int | None] = [None] * self.count
        self._acquisitions = [0] * self.count

    @contextmanager
    def guard(self, index: int) -> Iterator[None]:
        """
        Hold the lock of subvector ``index`` for the wrapped block.

        Raises:
            GuardViolation: If the calling thread already holds it.
        """
        if self._owners[index] == threading.get_ident():
            raise GuardViolation(f"Subvector {index} is already held by this thread")
        with self._locks[index]:
            self._owners[index] = threading.get_ident()
            try:
                yield
            finally:
                self._owners[index] = None
                self._acquisitions[index] += 1

    def require(self, index: int) -> None:
        """
        Raises:
            GuardViolation: Unless the calling thread holds subvector ``index``.
        """
        if self._owners[index] != threading.get_ident():
            raise GuardViolation(f"Write to subvector {index} without holding its lock")

    def held(self, index: int) -> bool:
        return self._owners[index] is not None

    @property
    def acquisitions(self) -> list[int]:
        return list(self._acquisitions)
