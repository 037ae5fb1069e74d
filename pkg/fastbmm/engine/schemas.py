from pydantic import BaseModel, Field, field_validator

from fastbmm.bitmatrix.words import BLOCK, WORD_BITS
from fastbmm.config import bmm_settings
from fastbmm.engine.exceptions import PlanError
from fastbmm.utils import is_power_of_two


class LayerPlan(BaseModel):
    """
    How the recursion levels of one multiplication are split across layers.

    The host layer generates sub-instances, the serial layer recurses
    depth-first, the parallel layer runs one Kronecker level per pass and the
    single inner level multiplies 64x64 blocks.
    """

    d_host: int = Field(default=0, ge=0)
    d_serial: int = Field(default=0, ge=0)
    d_parallel: int = Field(default=0, ge=0)
    d_inner: int = 1
    s: int = 2
    t: int = 2
    u: int = 2
    r: int = 7
    word_width: int = WORD_BITS
    block: int = BLOCK
    workers: int = Field(default_factory=lambda: bmm_settings.WORKERS, ge=1)

    @field_validator("d_inner")
    @classmethod
    def validate_inner(cls, v: int) -> int:
        if v != 1:
            raise ValueError("Exactly one inner level is supported")
        return v

    @field_validator("word_width", "block")
    @classmethod
    def validate_width(cls, v: int) -> int:
        if v != WORD_BITS:
            raise ValueError(f"Words and inner blocks are {WORD_BITS} bits wide")
        return v

    @property
    def outer_depth(self) -> int:
        """Levels above the inner block: host + serial + parallel."""
        return self.d_host + self.d_serial + self.d_parallel

    @property
    def accelerator_depth(self) -> int:
        """Levels handled by one emulated accelerator: serial + parallel."""
        return self.d_serial + self.d_parallel

    @property
    def depth(self) -> int:
        return self.outer_depth + self.d_inner

    @property
    def n(self) -> int:
        return self.block << self.outer_depth

    def with_workers(self, workers: int) -> "LayerPlan":
        return self.model_copy(update={"workers": max(1, workers)})

    @classmethod
    def default(cls, n: int, workers: int | None = None) -> "LayerPlan":
        """Default split for an ``n x n`` product."""
        return cls.for_size(n, workers=workers)

    @classmethod
    def for_size(
        cls,
        n: int,
        d_host: int | None = None,
        d_serial: int | None = None,
        d_parallel: int | None = None,
        workers: int | None = None,
    ) -> "LayerPlan":
        """
        Build a plan for ``n``, filling the levels that were not given.

        Free levels go to the parallel layer first (up to
        ``BMM_MAX_PARALLEL_LEVELS``), then to the serial layer (up to
        ``BMM_MAX_SERIAL_LEVELS``), the rest to the host layer. The last free
        layer absorbs whatever remains.

        Raises:
            PlanError: If ``n`` is not ``64 * 2^k`` or the given levels do not
                add up to ``k``.
        """
        if n < BLOCK or not is_power_of_two(n):
            raise PlanError(f"Size must be 64 times a power of two, got {n}")
        total = (n // BLOCK).bit_length() - 1

        given = {"d_host": d_host, "d_serial": d_serial, "d_parallel": d_parallel}
        levels = {name: value for name, value in given.items() if value is not None}
        if any(value < 0 for value in levels.values()):
            raise PlanError(f"Level counts must be non-negative, got {levels}")
        remaining = total - sum(levels.values())
        if remaining < 0:
            raise PlanError(f"Levels {levels} exceed the {total} levels of n={n}")

        caps = {
            "d_parallel": bmm_settings.MAX_PARALLEL_LEVELS,
            "d_serial": bmm_settings.MAX_SERIAL_LEVELS,
            "d_host": None,
        }
        free = [name for name in caps if name not in levels]
        if not free and remaining:
            raise PlanError(f"Levels {levels} cover only {total - remaining} of {total}")
        for position, name in enumerate(free):
            cap = caps[name]
            last = position == len(free) - 1
            levels[name] = remaining if last or cap is None else min(remaining, cap)
            remaining -= levels[name]

        if workers is None:
            return cls(**levels)
        return cls(**levels, workers=workers)

    def __str__(self) -> str:
        return f"h{self.d_host}/s{self.d_serial}/p{self.d_parallel}/i{self.d_inner}"

    class Config:
        frozen = True
        extra = "forbid"
