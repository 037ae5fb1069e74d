from collections.abc import Iterator
from itertools import product

from pydantic import BaseModel, Field, model_validator


class SubInstanceIndex(BaseModel):
    """
    One host-layer sub-instance ``(h_1, ..., h_d)`` and the worker owning it.

    The linear index reads ``h`` as base-``r`` digits, most significant
    first; worker ``ℓ`` owns the sub-instances whose linear index is
    congruent to ``ℓ`` modulo the worker count.
    """

    h: tuple[int, ...]
    owner: int = Field(ge=0)
    r: int = Field(default=7, ge=1)

    @model_validator(mode="after")
    def validate_digits(self) -> "SubInstanceIndex":
        if any(not 0 <= digit < self.r for digit in self.h):
            raise ValueError(f"Digits of {self.h} must lie in [0, {self.r})")
        return self

    @property
    def linear(self) -> int:
        value = 0
        for digit in self.h:
            value = value * self.r + digit
        return value

    @property
    def depth(self) -> int:
        return len(self.h)

    @classmethod
    def create(cls, h: tuple[int, ...], n_workers: int, r: int = 7) -> "SubInstanceIndex":
        """Index ``h`` with its owner among ``n_workers`` workers."""
        index = cls(h=h, owner=0, r=r)
        return index.model_copy(update={"owner": index.linear % n_workers})

    class Config:
        frozen = True


def iter_sub_instances(
    d_host: int, n_workers: int, r: int = 7
) -> Iterator[SubInstanceIndex]:
    """All ``r^d_host`` sub-instances in increasing linear order."""
    for h in product(range(r), repeat=d_host):
        yield SubInstanceIndex.create(h, n_workers, r)


def owned_sub_instances(
    d_host: int, n_workers: int, worker: int, r: int = 7
) -> list[SubInstanceIndex]:
    return [
        index for index in iter_sub_instances(d_host, n_workers, r) if index.owner == worker
    ]


def ownership_counts(d_host: int, n_workers: int, r: int = 7) -> list[int]:
    """Number of sub-instances owned by each worker."""
    counts = [0] * n_workers
    for index in iter_sub_instances(d_host, n_workers, r):
        counts[index.owner] += 1
    return counts


class PipelineStats(BaseModel):
    sub_instances: int = 0
    workers: int = 0
    generated_left: int = 0
    generated_right: int = 0
    solved: int = 0
    aggregated: int = 0
    wall_time_seconds: float = 0.0

    @property
    def complete(self) -> bool:
        """Every sub-instance went through every stage exactly once."""
        return (
            self.generated_left
            == self.generated_right
            == self.solved
            == self.aggregated
            == self.sub_instances
        )
