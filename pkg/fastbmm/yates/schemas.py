from math import prod
from typing import Any

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from fastbmm.bitmatrix.words import WORD_BITS
from fastbmm.decomposition import Decomposition, Factor, StraightLineProgram, as_gf2

# Largest factor side that is merged with its neighbour in one pass.
MERGE_LIMIT = 8


class KroneckerFactor(BaseModel):
    """One ``b x a`` factor of a chain with the program that applies it."""

    matrix: np.ndarray
    slp: StraightLineProgram

    @field_validator("matrix", mode="before")
    @classmethod
    def validate_matrix(cls, v: Any) -> np.ndarray:
        return as_gf2(v)

    @model_validator(mode="after")
    def validate_program(self) -> "KroneckerFactor":
        if self.matrix.shape != (self.slp.output_arity, self.slp.input_arity):
            raise ValueError(
                f"Program maps {self.slp.input_arity} to {self.slp.output_arity} "
                f"registers, matrix has shape {self.matrix.shape}"
            )
        return self

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    @property
    def additions(self) -> int:
        return self.slp.addition_count

    @property
    def mergeable(self) -> bool:
        return self.rows <= MERGE_LIMIT and self.cols <= MERGE_LIMIT

    class Config:
        arbitrary_types_allowed = True
        frozen = True


class KroneckerChain(BaseModel):
    """``factors[0] ⊗ factors[1] ⊗ ... ⊗ I_trailing`` acting on bit vectors."""

    factors: tuple[KroneckerFactor, ...]
    trailing_identity: int = Field(ge=WORD_BITS)

    @field_validator("trailing_identity")
    @classmethod
    def validate_trailing(cls, v: int) -> int:
        if v % WORD_BITS:
            raise ValueError(f"trailing_identity must be a multiple of {WORD_BITS}")
        return v

    @classmethod
    def from_decomposition(
        cls, decomposition: Decomposition, factor: Factor, depth: int, trailing: int
    ) -> "KroneckerChain":
        """The ``depth``-fold power of one decomposition factor."""
        single = KroneckerFactor(
            matrix=decomposition.matrix(factor), slp=decomposition.slp(factor)
        )
        return cls(factors=(single,) * depth, trailing_identity=trailing)

    @property
    def depth(self) -> int:
        return len(self.factors)

    @property
    def trailing_words(self) -> int:
        return self.trailing_identity // WORD_BITS

    @property
    def input_modes(self) -> tuple[int, ...]:
        return tuple(f.cols for f in self.factors)

    @property
    def output_modes(self) -> tuple[int, ...]:
        return tuple(f.rows for f in self.factors)

    @property
    def input_bits(self) -> int:
        return prod(self.input_modes) * self.trailing_identity

    @property
    def output_bits(self) -> int:
        return prod(self.output_modes) * self.trailing_identity

    class Config:
        frozen = True
