from typing import Any

import numpy as np

from fastbmm.bitmatrix.enums import Layout
from fastbmm.bitmatrix.exceptions import ShapeError
from fastbmm.bitmatrix.words import (
    BLOCK,
    WORD_BITS,
    WORD_DTYPE,
    pack_rows,
    tail_mask,
    transpose64,
    unpack_rows,
    words_for,
)
from fastbmm.utils import is_power_of_two


class BitMatrix:
    """
    Row-major, word-packed bit matrix.

    Each row occupies ``ceil(cols / 64)`` little-endian 64-bit words; column
    ``j`` is bit ``j % 64`` of word ``j // 64``. Bits past ``cols`` in the last
    word of a row are kept at zero by every operation.
    """

    __slots__ = ("_rows", "_cols", "_words")

    def __init__(self, rows: int, cols: int, words: np.ndarray | None = None) -> None:
        """
        Args:
            rows: Number of rows (at least 1).
            cols: Number of columns (at least 1).
            words: Optional ``(rows, ceil(cols/64))`` word array. Ownership is
                taken; pad bits are cleared in place.

        Raises:
            ShapeError: On zero dimensions or a word array of the wrong shape.
        """
        if rows < 1 or cols < 1:
            raise ShapeError(f"Matrix dimensions must be positive, got {rows}x{cols}")

        shape = (rows, words_for(cols))
        if words is None:
            words = np.zeros(shape, dtype=WORD_DTYPE)
        else:
            words = np.ascontiguousarray(words, dtype=WORD_DTYPE)
            if words.shape != shape:
                raise ShapeError(
                    f"Word array of shape {words.shape} does not fit a "
                    f"{rows}x{cols} matrix (expected {shape})"
                )
            words[:, -1] &= tail_mask(cols)

        self._rows = rows
        self._cols = cols
        self._words = words

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        matrix = cls(n, n)
        index = np.arange(n)
        matrix._words[index, index // WORD_BITS] = np.left_shift(
            np.uint64(1), (index % WORD_BITS).astype(np.uint64)
        )
        return matrix

    @classmethod
    def random(cls, rows: int, cols: int, seed: int) -> "BitMatrix":
        """Uniformly random matrix, bit-identical for a fixed ``(rows, cols, seed)``."""
        if rows < 1 or cols < 1:
            raise ShapeError(f"Matrix dimensions must be positive, got {rows}x{cols}")
        rng = np.random.default_rng(seed)
        words = rng.integers(
            0,
            np.iinfo(np.uint64).max,
            size=(rows, words_for(cols)),
            dtype=np.uint64,
            endpoint=True,
        )
        return cls(rows, cols, words)

    @classmethod
    def from_bits(cls, bits: Any) -> "BitMatrix":
        """Build from a 2-D array-like of 0/1 values."""
        array = np.asarray(bits)
        if array.ndim != 2:
            raise ShapeError(f"Expected a 2-D bit array, got {array.ndim} dimensions")
        rows, cols = array.shape
        if rows < 1 or cols < 1:
            raise ShapeError(f"Matrix dimensions must be positive, got {rows}x{cols}")
        return cls(rows, cols, pack_rows(array))

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def words(self) -> np.ndarray:
        return self._words

    @property
    def words_per_row(self) -> int:
        return self._words.shape[1]

    @property
    def layout(self) -> Layout:
        return Layout.ROW_MAJOR

    @property
    def is_square(self) -> bool:
        return self._rows == self._cols

    def _check_index(self, i: int, j: int) -> None:
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(
                f"Index ({i}, {j}) out of bounds for {self._rows}x{self._cols} matrix"
            )

    def get(self, i: int, j: int) -> int:
        self._check_index(i, j)
        word = int(self._words[i, j // WORD_BITS])
        return (word >> (j % WORD_BITS)) & 1

    def set(self, i: int, j: int, bit: int) -> None:
        self._check_index(i, j)
        mask = np.uint64(1 << (j % WORD_BITS))
        if bit:
            self._words[i, j // WORD_BITS] |= mask
        else:
            self._words[i, j // WORD_BITS] &= ~mask

    def to_bits(self) -> np.ndarray:
        return unpack_rows(self._words, self._cols)

    def popcount(self) -> int:
        return int(np.bitwise_count(self._words).sum())

    def copy(self) -> "BitMatrix":
        return BitMatrix(self._rows, self._cols, self._words.copy())

    def transpose_blocks64(self) -> "BitMatrix":
        """
        Transpose every aligned 64x64 block in place of its position.

        Raises:
            ShapeError: If either dimension is not a multiple of 64.
        """
        if self._rows % BLOCK or self._cols % BLOCK:
            raise ShapeError(
                f"Blockwise transpose needs dimensions divisible by {BLOCK}, "
                f"got {self._rows}x{self._cols}"
            )
        block_rows = self._rows // BLOCK
        grid = self._words.reshape(block_rows, BLOCK, self.words_per_row)
        blocks = np.ascontiguousarray(grid.transpose(0, 2, 1))
        transposed = transpose64(blocks).transpose(0, 2, 1)
        return BitMatrix(
            self._rows, self._cols, transposed.reshape(self._rows, self.words_per_row)
        )

    def pad_pow2(self) -> "BitMatrix":
        """
        Embed into the smallest ``n x n`` zero matrix with ``n`` a power of two
        and ``n >= 64``; the original occupies the top-left corner.
        """
        n = BLOCK
        while n < max(self._rows, self._cols):
            n *= 2
        if n == self._rows == self._cols:
            return self.copy()
        padded = BitMatrix(n, n)
        padded._words[: self._rows, : self.words_per_row] = self._words
        return padded

    def crop(self, rows: int, cols: int) -> "BitMatrix":
        """Top-left ``rows x cols`` submatrix (inverse of :meth:`pad_pow2`)."""
        if not (1 <= rows <= self._rows and 1 <= cols <= self._cols):
            raise ShapeError(
                f"Cannot crop a {self._rows}x{self._cols} matrix to {rows}x{cols}"
            )
        return BitMatrix(rows, cols, self._words[:rows, : words_for(cols)].copy())

    def is_power_of_two_square(self) -> bool:
        return self.is_square and is_power_of_two(self._rows) and self._rows >= BLOCK

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self._rows == other._rows
            and self._cols == other._cols
            and bool(np.array_equal(self._words, other._words))
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix(rows={self._rows}, cols={self._cols}, ones={self.popcount()})"
