from fastbmm.pipeline.buffers import WorkBuffers
from fastbmm.pipeline.coordinator import HostPipeline, coordinate, coordinate_sequential
from fastbmm.pipeline.enums import BufferKind, BufferState, Stage
from fastbmm.pipeline.exceptions import (
    BufferStateError,
    GuardViolation,
    PipelineAborted,
    PipelineError,
)
from fastbmm.pipeline.generation import (
    add_to_subvector,
    aggregate,
    generate_left,
    generate_right,
    kronecker_row,
)
from fastbmm.pipeline.locks import SubvectorLocks
from fastbmm.pipeline.schemas import (
    PipelineStats,
    SubInstanceIndex,
    iter_sub_instances,
    owned_sub_instances,
    ownership_counts,
)

__all__ = [
    "BufferKind",
    "BufferState",
    "Stage",
    "PipelineError",
    "BufferStateError",
    "GuardViolation",
    "PipelineAborted",
    "WorkBuffers",
    "SubvectorLocks",
    "SubInstanceIndex",
    "PipelineStats",
    "iter_sub_instances",
    "owned_sub_instances",
    "ownership_counts",
    "kronecker_row",
    "generate_left",
    "generate_right",
    "add_to_subvector",
    "aggregate",
    "HostPipeline",
    "coordinate",
    "coordinate_sequential",
]
