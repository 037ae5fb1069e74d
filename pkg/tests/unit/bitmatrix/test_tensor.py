"""Unit tests for interleaved bit-vector tensors."""

import numpy as np
import pytest
from pydantic import ValidationError

from fastbmm.bitmatrix import (
    BitVectorTensor,
    InterleavedLayout,
    Layout,
    LayoutError,
    Operand,
    ShapeError,
)
from fastbmm.bitmatrix.words import WORD_DTYPE


class TestInterleavedLayout:
    """Test the layout tag."""

    def test_mode_lengths(self) -> None:
        """Test four-way modes per level and the inner block."""
        layout = InterleavedLayout(depth=2, operand=Operand.LEFT)

        assert layout.mode_lengths == (4, 4, 4096)

    def test_negative_depth(self) -> None:
        """Test that depth must be non-negative."""
        with pytest.raises(ValidationError):
            InterleavedLayout(depth=-1, operand=Operand.LEFT)


class TestBitVectorTensor:
    """Test BitVectorTensor."""

    def test_interleaved_zeros(self) -> None:
        """Test allocation of an interleaved vector."""
        vector = BitVectorTensor.interleaved(1, Operand.RESULT)

        assert vector.words.size == 4 * 64
        assert vector.total_bits == 4 * 4096
        assert vector.is_zero()
        assert vector.layout_kind is Layout.INTERLEAVED
        assert vector.blocks.shape == (4, 64)

    def test_untagged_vector(self) -> None:
        """Test that untagged vectors have no layout."""
        vector = BitVectorTensor((7, 4096))

        assert vector.layout_kind is Layout.ROW_MAJOR
        with pytest.raises(LayoutError):
            _ = vector.depth

    def test_storage_checked(self) -> None:
        """Test that word storage must fit the modes."""
        with pytest.raises(ShapeError):
            BitVectorTensor((4, 4096), np.zeros(10, dtype=WORD_DTYPE))
        with pytest.raises(ShapeError):
            BitVectorTensor((0, 64))

    def test_expect(self) -> None:
        """Test operand and depth checks."""
        vector = BitVectorTensor.interleaved(2, Operand.LEFT)

        vector.expect(Operand.LEFT, 2)
        with pytest.raises(LayoutError):
            vector.expect(Operand.RIGHT)
        with pytest.raises(LayoutError):
            vector.expect(Operand.LEFT, 1)

    def test_relabel_left_result(self) -> None:
        """Test that Left and Result share storage under relabel."""
        vector = BitVectorTensor.interleaved(1, Operand.RESULT)

        relabelled = vector.relabel(Operand.LEFT)
        relabelled.words[0] = 1

        assert relabelled.operand is Operand.LEFT
        assert vector.words[0] == 1

    def test_relabel_right_rejected(self) -> None:
        """Test that Right vectors cannot be relabelled."""
        vector = BitVectorTensor.interleaved(1, Operand.RIGHT)

        with pytest.raises(LayoutError):
            vector.relabel(Operand.LEFT)

    def test_xor_and_equality(self) -> None:
        """Test addition over GF(2) and equality of contents."""
        words = np.arange(64, dtype=WORD_DTYPE)
        vector = BitVectorTensor.interleaved(0, Operand.LEFT, words)

        assert (vector ^ vector).is_zero()
        assert vector == vector.copy()
        assert vector.copy().words is not vector.words
        assert vector.zeros_like().is_zero()
        with pytest.raises(ShapeError):
            _ = vector ^ BitVectorTensor.interleaved(1, Operand.LEFT)
