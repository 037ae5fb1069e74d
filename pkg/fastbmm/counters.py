import threading
from collections import defaultdict
from enum import Enum
from typing import Any


class Phase(Enum):
    BASIS_CHANGE = "basis_change"  # Phi / psi / chi transforms
    LINEAR_COMBINATION = "linear_combination"  # Alpha / beta / gamma layers
    HOST = "host"  # Sub-instance generation and aggregation


class OpCounter:
    """
    Thread-safe word-operation counters.

    Totals only grow during a multiply; reads while workers are running may
    observe any intermediate value, the totals after the call are exact.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._word_ands = 0
        self._word_ors = 0
        self._kernel_invocations = 0
        self._xors: dict[Phase, int] = defaultdict(int)

    def add_xors(self, count: int, phase: Phase = Phase.LINEAR_COMBINATION) -> None:
        with self._lock:
            self._xors[phase] += count

    def add_ors(self, count: int) -> None:
        with self._lock:
            self._word_ors += count

    def add_ands(self, count: int) -> None:
        with self._lock:
            self._word_ands += count

    def add_kernel(self, blocks: int, ands_per_block: int) -> None:
        with self._lock:
            self._kernel_invocations += blocks
            self._word_ands += blocks * ands_per_block

    @property
    def word_xors(self) -> int:
        with self._lock:
            return sum(self._xors.values())

    @property
    def word_ands(self) -> int:
        return self._word_ands

    @property
    def word_ors(self) -> int:
        return self._word_ors

    @property
    def kernel_invocations(self) -> int:
        return self._kernel_invocations

    def xors(self, phase: Phase) -> int:
        with self._lock:
            return self._xors.get(phase, 0)

    def reset(self) -> None:
        with self._lock:
            self._word_ands = 0
            self._word_ors = 0
            self._kernel_invocations = 0
            self._xors.clear()

    def get_stats(self) -> dict[str, Any]:
        """Snapshot of all counters."""
        with self._lock:
            return {
                "word_ands": self._word_ands,
                "word_ors": self._word_ors,
                "word_xors": sum(self._xors.values()),
                "kernel_invocations": self._kernel_invocations,
                "xors_by_phase": {phase.value: self._xors.get(phase, 0) for phase in Phase},
            }
