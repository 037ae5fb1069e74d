from pydantic import BaseModel

from fastbmm.engine import LayerPlan


class PlanSummary(BaseModel):
    d_host: int = 0
    d_serial: int = 0
    d_parallel: int = 0

    @classmethod
    def from_plan(cls, plan: LayerPlan | None) -> "PlanSummary":
        if plan is None:
            return cls()
        return cls(d_host=plan.d_host, d_serial=plan.d_serial, d_parallel=plan.d_parallel)

    class Config:
        frozen = True


class BenchReport(BaseModel):
    """
    One JSON line per timed routine.

    ``effective_bops`` always divides the elementary count ``2n³ - n²`` by the
    median wall time, whatever algorithm ran.
    """

    algo: str
    routine: str = "multiply"
    n: int
    plan: PlanSummary
    workers: int
    repeats: int = 1
    wall_time_seconds: float
    effective_bops: float
    kernel_invocations: int = 0
    word_xor_count: int = 0
    estimated_bit_operations: int | None = None
    check: bool | None = None

    class Config:
        frozen = True
        extra = "forbid"
