"""
Host layer: sub-instances flow through one four-stage pipeline per worker.

Worker ``ℓ`` owns the sub-instances whose linear index is ``ℓ`` modulo the
worker count and runs four threads over them in the same order:

* prepare-left fills the worker's T buffer with ``T̂^{[h]}``,
* prepare-right fills the S buffer with ``Ŝ^{[h]}``,
* solve copies T and S out, frees them and multiplies into the Q buffer,
* aggregate adds Q into ``Ĉ`` under the subvector locks and frees Q.

Since T and S are freed as soon as solve has copied them, preparation of the
next sub-instance overlaps the current solve.
"""

import threading
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from fastbmm.bitmatrix import BitVectorTensor, Operand
from fastbmm.config import bmm_settings
from fastbmm.counters import OpCounter
from fastbmm.decomposition import Decomposition
from fastbmm.engine import LayerPlan, multiply_alt
from fastbmm.logging.logger import FastbmmLogger
from fastbmm.pipeline.buffers import WorkBuffers
from fastbmm.pipeline.enums import BufferKind, BufferState, Stage
from fastbmm.pipeline.exceptions import PipelineAborted, PipelineError
from fastbmm.pipeline.generation import aggregate, generate_left, generate_right
from fastbmm.pipeline.locks import SubvectorLocks
from fastbmm.pipeline.schemas import (
    PipelineStats,
    SubInstanceIndex,
    iter_sub_instances,
    owned_sub_instances,
)


def _check_operands(a_hat: BitVectorTensor, b_hat: BitVectorTensor, plan: LayerPlan) -> None:
    a_hat.expect(Operand.LEFT, plan.outer_depth)
    b_hat.expect(Operand.RIGHT, plan.outer_depth)


def _solve(
    left: np.ndarray,
    right: np.ndarray,
    decomposition: Decomposition,
    plan: LayerPlan,
    counter: OpCounter | None,
) -> np.ndarray:
    depth = plan.accelerator_depth
    t_hat = BitVectorTensor.interleaved(depth, Operand.LEFT, left)
    s_hat = BitVectorTensor.interleaved(depth, Operand.RIGHT, right)
    return multiply_alt(t_hat, s_hat, decomposition, plan, counter).words


class HostPipeline:
    """
    Runs the host layer of one product over ``n_workers`` emulated accelerators.

    Each worker solves its sub-instances with ``plan.workers // n_workers``
    threads (at least one).
    """

    logger = FastbmmLogger("HostPipeline")

    def __init__(
        self,
        decomposition: Decomposition,
        plan: LayerPlan,
        n_workers: int,
        counter: OpCounter | None = None,
        timeout: float | None = None,
    ) -> None:
        """
        Raises:
            PipelineError: If ``n_workers < 1``.
        """
        if n_workers < 1:
            raise PipelineError(f"At least one worker is needed, got {n_workers}")
        self._decomposition = decomposition
        self._plan = plan
        self._sub_plan = plan.model_copy(
            update={"d_host": 0, "workers": max(1, plan.workers // n_workers)}
        )
        self._n_workers = n_workers
        self._counter = counter
        self._timeout = timeout or bmm_settings.PIPELINE_TIMEOUT_SECONDS
        self._stats_lock = threading.Lock()
        self._stats = PipelineStats()
        self._buffers: list[WorkBuffers] = []
        self._locks: SubvectorLocks | None = None

    @property
    def n_workers(self) -> int:
        return self._n_workers

    @property
    def locks(self) -> SubvectorLocks | None:
        return self._locks

    def _count(self, stage: Stage) -> None:
        field = {
            Stage.PREPARE_LEFT: "generated_left",
            Stage.PREPARE_RIGHT: "generated_right",
            Stage.SOLVE: "solved",
            Stage.AGGREGATE: "aggregated",
        }[stage]
        with self._stats_lock:
            setattr(self._stats, field, getattr(self._stats, field) + 1)

    def run(self, a_hat: BitVectorTensor, b_hat: BitVectorTensor) -> BitVectorTensor:
        """
        Compute ``ĉ`` from full-depth operands in the alternative basis.

        Raises:
            LayoutError: If the operands are not interleaved at the plan's depth.
            PipelineError: If a stage times out.
            Exception: The first error raised by any stage, after all stages
                have stopped.
        """
        _check_operands(a_hat, b_hat, self._plan)
        d_host = self._plan.d_host
        rank = self._decomposition.params.r
        c_hat = BitVectorTensor.interleaved(self._plan.outer_depth, Operand.RESULT)
        sub_words = c_hat.words.size // 4**d_host

        self._locks = SubvectorLocks(d_host)
        self._buffers = [WorkBuffers(worker, sub_words) for worker in range(self._n_workers)]
        self._stats = PipelineStats(sub_instances=rank**d_host, workers=self._n_workers)
        abort = threading.Event()
        deadline = time.monotonic() + self._timeout
        started = time.perf_counter()

        stages: list[tuple[Stage, int, Callable[[], None]]] = []
        for worker in range(self._n_workers):
            owned = owned_sub_instances(d_host, self._n_workers, worker, rank)
            buffers = self._buffers[worker]
            stages.extend(
                [
                    (
                        Stage.PREPARE_LEFT,
                        worker,
                        lambda o=owned, b=buffers: self._prepare(
                            Stage.PREPARE_LEFT, a_hat, o, b, abort, deadline
                        ),
                    ),
                    (
                        Stage.PREPARE_RIGHT,
                        worker,
                        lambda o=owned, b=buffers: self._prepare(
                            Stage.PREPARE_RIGHT, b_hat, o, b, abort, deadline
                        ),
                    ),
                    (
                        Stage.SOLVE,
                        worker,
                        lambda o=owned, b=buffers: self._solve_stage(o, b, abort, deadline),
                    ),
                    (
                        Stage.AGGREGATE,
                        worker,
                        lambda o=owned, b=buffers: self._aggregate_stage(
                            c_hat, o, b, abort, deadline
                        ),
                    ),
                ]
            )

        logger = self.logger.bind(workers=self._n_workers, d_host=d_host)
        logger.debug(f"Starting {len(stages)} stage threads for {rank**d_host} sub-instances")
        errors: list[BaseException] = []
        with ThreadPoolExecutor(max_workers=len(stages)) as executor:
            futures = [
                (stage, worker, executor.submit(self._guarded, func, abort))
                for stage, worker, func in stages
            ]
            for stage, worker, future in futures:
                error = future.exception()
                if error is not None and not isinstance(error, PipelineAborted):
                    logger.error(f"Stage {stage.value} of worker {worker} failed: {error!r}")
                    errors.append(error)

        self._stats.wall_time_seconds = time.perf_counter() - started
        if errors:
            raise errors[0]
        logger.debug(f"Pipeline finished in {self._stats.wall_time_seconds:.4f}s")
        return c_hat

    @staticmethod
    def _guarded(func: Callable[[], None], abort: threading.Event) -> None:
        try:
            func()
        except BaseException:
            abort.set()
            raise

    def _prepare(
        self,
        stage: Stage,
        source: BitVectorTensor,
        owned: list[SubInstanceIndex],
        buffers: WorkBuffers,
        abort: threading.Event,
        deadline: float,
    ) -> None:
        kind, generate = (
            (BufferKind.LEFT, generate_left)
            if stage is Stage.PREPARE_LEFT
            else (BufferKind.RIGHT, generate_right)
        )
        for index in owned:
            out = buffers.wait_for(kind, BufferState.FREE, abort, deadline)
            generate(source, index, self._decomposition, out, self._counter)
            buffers.mark(kind, BufferState.OCCUPIED)
            self._count(stage)

    def _solve_stage(
        self,
        owned: list[SubInstanceIndex],
        buffers: WorkBuffers,
        abort: threading.Event,
        deadline: float,
    ) -> None:
        for _ in owned:
            left = buffers.wait_for(BufferKind.LEFT, BufferState.OCCUPIED, abort, deadline).copy()
            buffers.mark(BufferKind.LEFT, BufferState.FREE)
            right = buffers.wait_for(
                BufferKind.RIGHT, BufferState.OCCUPIED, abort, deadline
            ).copy()
            buffers.mark(BufferKind.RIGHT, BufferState.FREE)

            product = _solve(left, right, self._decomposition, self._sub_plan, self._counter)
            out = buffers.wait_for(BufferKind.PRODUCT, BufferState.FREE, abort, deadline)
            out[:] = product
            buffers.mark(BufferKind.PRODUCT, BufferState.OCCUPIED)
            self._count(Stage.SOLVE)

    def _aggregate_stage(
        self,
        c_hat: BitVectorTensor,
        owned: list[SubInstanceIndex],
        buffers: WorkBuffers,
        abort: threading.Event,
        deadline: float,
    ) -> None:
        for index in owned:
            q = buffers.wait_for(BufferKind.PRODUCT, BufferState.OCCUPIED, abort, deadline)
            aggregate(c_hat, index, q, self._decomposition, self._locks, self._counter)
            buffers.mark(BufferKind.PRODUCT, BufferState.FREE)
            self._count(Stage.AGGREGATE)

    def get_stats(self) -> PipelineStats:
        with self._stats_lock:
            return self._stats.model_copy()


def coordinate(
    a_hat: BitVectorTensor,
    b_hat: BitVectorTensor,
    n_workers: int,
    plan: LayerPlan,
    decomposition: Decomposition,
    counter: OpCounter | None = None,
) -> BitVectorTensor:
    """Pipelined host layer; bit-identical to :func:`coordinate_sequential`."""
    return HostPipeline(decomposition, plan, n_workers, counter).run(a_hat, b_hat)


def coordinate_sequential(
    a_hat: BitVectorTensor,
    b_hat: BitVectorTensor,
    plan: LayerPlan,
    decomposition: Decomposition,
    counter: OpCounter | None = None,
) -> BitVectorTensor:
    """Single-threaded host layer: generate, solve and aggregate in linear order."""
    _check_operands(a_hat, b_hat, plan)
    d_host = plan.d_host
    c_hat = BitVectorTensor.interleaved(plan.outer_depth, Operand.RESULT)
    locks = SubvectorLocks(d_host)
    sub_plan = plan.model_copy(update={"d_host": 0})
    for index in iter_sub_instances(d_host, 1, decomposition.params.r):
        left = generate_left(a_hat, index, decomposition, counter=counter)
        right = generate_right(b_hat, index, decomposition, counter=counter)
        product = _solve(left.words, right.words, decomposition, sub_plan, counter)
        aggregate(c_hat, index, product, decomposition, locks, counter)
    return c_hat
