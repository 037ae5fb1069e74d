from collections.abc import Sequence
from math import prod

import numpy as np
from pydantic import BaseModel, Field

from fastbmm.bitmatrix.enums import Layout, Operand
from fastbmm.bitmatrix.exceptions import LayoutError, ShapeError
from fastbmm.bitmatrix.words import BLOCK_BITS, BLOCK_WORDS, WORD_DTYPE, words_for

# Two row digits and two column digits per recursion level.
LEVEL_MODE = 4


class InterleavedLayout(BaseModel):
    """Tag of a vector in the recursive interleaved layout."""

    depth: int = Field(ge=0)
    operand: Operand

    @property
    def mode_lengths(self) -> tuple[int, ...]:
        return (LEVEL_MODE,) * self.depth + (BLOCK_BITS,)

    class Config:
        frozen = True


class BitVectorTensor:
    """
    Bit vector with named mode lengths under first-index-major linearization.

    Interleaved operands carry an :class:`InterleavedLayout` tag; intermediate
    vectors of the engine (for example after an expanding level) carry none.
    """

    __slots__ = ("_mode_lengths", "_words", "_layout")

    def __init__(
        self,
        mode_lengths: Sequence[int],
        words: np.ndarray | None = None,
        layout: InterleavedLayout | None = None,
    ) -> None:
        modes = tuple(int(length) for length in mode_lengths)
        if not modes or any(length < 1 for length in modes):
            raise ShapeError(f"Mode lengths must be positive, got {modes}")

        size = words_for(prod(modes))
        if words is None:
            words = np.zeros(size, dtype=WORD_DTYPE)
        elif words.dtype != WORD_DTYPE or words.ndim != 1 or words.size != size:
            raise ShapeError(
                f"Word storage of shape {words.shape} does not fit modes {modes} "
                f"({size} words expected)"
            )
        if layout is not None and layout.mode_lengths != modes:
            raise LayoutError(
                f"Layout {layout} expects modes {layout.mode_lengths}, got {modes}"
            )

        self._mode_lengths = modes
        self._words = words
        self._layout = layout

    @classmethod
    def interleaved(
        cls, depth: int, operand: Operand, words: np.ndarray | None = None
    ) -> "BitVectorTensor":
        layout = InterleavedLayout(depth=depth, operand=operand)
        return cls(layout.mode_lengths, words, layout)

    @property
    def mode_lengths(self) -> tuple[int, ...]:
        return self._mode_lengths

    @property
    def words(self) -> np.ndarray:
        return self._words

    @property
    def total_bits(self) -> int:
        return prod(self._mode_lengths)

    @property
    def layout_kind(self) -> Layout:
        return Layout.INTERLEAVED if self._layout is not None else Layout.ROW_MAJOR

    @property
    def layout(self) -> InterleavedLayout:
        if self._layout is None:
            raise LayoutError("Bit vector carries no interleaved layout")
        return self._layout

    @property
    def depth(self) -> int:
        return self.layout.depth

    @property
    def operand(self) -> Operand:
        return self.layout.operand

    @property
    def blocks(self) -> np.ndarray:
        """View of the storage as ``(blocks, 64)`` innermost 64x64 blocks."""
        return self._words.reshape(-1, BLOCK_WORDS)

    def expect(self, operand: Operand, depth: int | None = None) -> None:
        """
        Raise unless the vector is interleaved for ``operand`` (and ``depth``).

        Raises:
            LayoutError: On a missing or different layout tag.
        """
        layout = self.layout
        if layout.operand is not operand:
            raise LayoutError(
                f"Expected a {operand.value} operand, got {layout.operand.value}"
            )
        if depth is not None and layout.depth != depth:
            raise LayoutError(f"Expected depth {depth}, got {layout.depth}")

    def relabel(self, operand: Operand) -> "BitVectorTensor":
        """
        Same storage under another operand tag.

        Only Left and Result share a bit-address map, so those are the only
        conversions allowed.
        """
        shared = {Operand.LEFT, Operand.RESULT}
        if self.operand is not operand and {self.operand, operand} != shared:
            raise LayoutError(
                f"Cannot relabel a {self.operand.value} vector as {operand.value}"
            )
        return BitVectorTensor.interleaved(self.depth, operand, self._words)

    def copy(self) -> "BitVectorTensor":
        return BitVectorTensor(self._mode_lengths, self._words.copy(), self._layout)

    def zeros_like(self) -> "BitVectorTensor":
        return BitVectorTensor(self._mode_lengths, None, self._layout)

    def is_zero(self) -> bool:
        return not self._words.any()

    def __xor__(self, other: "BitVectorTensor") -> "BitVectorTensor":
        if self._mode_lengths != other._mode_lengths:
            raise ShapeError(
                f"Cannot add vectors with modes {self._mode_lengths} and "
                f"{other._mode_lengths}"
            )
        return BitVectorTensor(
            self._mode_lengths, self._words ^ other._words, self._layout
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVectorTensor):
            return NotImplemented
        return self._mode_lengths == other._mode_lengths and bool(
            np.array_equal(self._words, other._words)
        )

    def __hash__(self) -> int:
        return hash((self._mode_lengths, self._words.tobytes()))

    def __repr__(self) -> str:
        tag = f"{self._layout.operand.value}@{self._layout.depth}" if self._layout else "-"
        return f"BitVectorTensor(modes={self._mode_lengths}, layout={tag})"
