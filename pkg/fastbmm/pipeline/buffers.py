import threading
import time

import numpy as np

from fastbmm.bitmatrix.words import WORD_DTYPE
from fastbmm.config import bmm_settings
from fastbmm.pipeline.enums import BufferKind, BufferState
from fastbmm.pipeline.exceptions import BufferStateError, PipelineAborted, PipelineError


class WorkBuffers:
    """
    The T, S and Q buffers of one worker with their Free/Occupied states.

    A producer waits for Free, fills the buffer and marks it Occupied; the
    consumer waits for Occupied, reads it and marks it Free. Waits poll an
    abort event so that a failing stage releases everyone else.
    """

    def __init__(self, worker: int, words: int) -> None:
        self.worker = worker
        self._condition = threading.Condition()
        self._arrays = {kind: np.zeros(words, dtype=WORD_DTYPE) for kind in BufferKind}
        self._states = {kind: BufferState.FREE for kind in BufferKind}
        self._transitions = 0

    @property
    def words(self) -> int:
        return self._arrays[BufferKind.LEFT].size

    @property
    def transitions(self) -> int:
        return self._transitions

    def state(self, kind: BufferKind) -> BufferState:
        with self._condition:
            return self._states[kind]

    def array(self, kind: BufferKind) -> np.ndarray:
        return self._arrays[kind]

    def wait_for(
        self,
        kind: BufferKind,
        state: BufferState,
        abort: threading.Event | None = None,
        deadline: float | None = None,
    ) -> np.ndarray:
        """
        Block until ``kind`` is in ``state`` and return its array.

        Raises:
            PipelineAborted: If ``abort`` is set while waiting.
            PipelineError: If ``deadline`` (a ``time.monotonic`` value) passes.
        """
        poll = bmm_settings.BUFFER_POLL_SECONDS
        with self._condition:
            while self._states[kind] is not state:
                if abort is not None and abort.is_set():
                    raise PipelineAborted()
                if deadline is not None and time.monotonic() > deadline:
                    raise PipelineError(
                        f"Worker {self.worker} timed out waiting for "
                        f"{kind.value} to become {state.value}"
                    )
                self._condition.wait(poll)
        return self._arrays[kind]

    def mark(self, kind: BufferKind, state: BufferState) -> None:
        """
        Move ``kind`` to ``state`` and wake the waiting stages.

        Raises:
            BufferStateError: Unless the buffer is currently in the other state.
        """
        with self._condition:
            current = self._states[kind]
            if current is state:
                raise BufferStateError(
                    f"Worker {self.worker} {kind.value} buffer is already {state.value}"
                )
            self._states[kind] = state
            self._transitions += 1
            self._condition.notify_all()
