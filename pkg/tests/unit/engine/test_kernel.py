"""Unit tests for the 64x64 block kernels."""

import numpy as np
import pytest

from fastbmm.bitmatrix import BitMatrix, BitVectorTensor, Operand, from_interleaved, to_interleaved
from fastbmm.counters import OpCounter, Phase
from fastbmm.decomposition import BuiltinName, builtin
from fastbmm.engine import (
    LayerPlan,
    Semiring,
    SemiringError,
    kernel64,
    kernel64_batch,
    shifted_kernel_batch,
)
from fastbmm.engine.kernel import ANDS_PER_BLOCK, require_gf2
from tests.conftest_matrices import dense_product


def _block(matrix: BitMatrix) -> np.ndarray:
    return matrix.words[:, 0].copy()


class TestKernel64:
    """Test single and batched block products."""

    @pytest.mark.parametrize("ring", [Semiring.GF2, Semiring.BOOLEAN])
    def test_single_block(self, ring: Semiring) -> None:
        """Test one block product against the dense reference."""
        a = BitMatrix.random(64, 64, seed=1)
        b = BitMatrix.random(64, 64, seed=2)

        words = kernel64(_block(a), _block(b.transpose_blocks64()), ring)

        assert BitMatrix(64, 64, words[:, None]) == dense_product(a, b, ring)

    def test_identity_block(self) -> None:
        """Test that multiplying by the identity returns the operand."""
        a = BitMatrix.random(64, 64, seed=3)
        identity = BitMatrix.identity(64)

        words = kernel64(_block(a), _block(identity))

        assert np.array_equal(words, _block(a))

    def test_batch_and_counter(self) -> None:
        """Test a batch split over workers and its counted invocations."""
        rng = np.random.default_rng(4)
        a = rng.integers(0, 2**63, size=(10, 64), dtype=np.uint64)
        bt = rng.integers(0, 2**63, size=(10, 64), dtype=np.uint64)
        counter = OpCounter()

        out = kernel64_batch(a, bt, counter=counter, workers=3)

        for index in range(10):
            assert np.array_equal(out[index], kernel64(a[index], bt[index]))
        assert counter.kernel_invocations == 10
        assert counter.word_ands == 10 * ANDS_PER_BLOCK

    def test_batch_shape_mismatch(self) -> None:
        """Test that stacks of different shapes are rejected."""
        with pytest.raises(ValueError):
            kernel64_batch(np.zeros((2, 64), np.uint64), np.zeros((3, 64), np.uint64))


class TestShiftedKernel:
    """Test the kernel with one recursion level folded in."""

    @pytest.mark.parametrize("name", [BuiltinName.SW, BuiltinName.ELEMENTARY])
    def test_matches_dense(self, name: BuiltinName) -> None:
        """Test a 128x128 product of standard-basis groups."""
        plan = LayerPlan(d_parallel=1)
        a = BitMatrix.random(128, 128, seed=5)
        b = BitMatrix.random(128, 128, seed=6)
        left = to_interleaved(a, plan, Operand.LEFT).words.reshape(1, 4, 64)
        right = to_interleaved(b, plan, Operand.RIGHT).words.reshape(1, 4, 64)

        out = shifted_kernel_batch(left, right, builtin(name))

        result = BitVectorTensor.interleaved(1, Operand.RESULT, out.reshape(-1))
        assert from_interleaved(result, plan, Operand.RESULT) == dense_product(a, b)

    def test_counts(self) -> None:
        """Test r kernels and (Pα+Pβ+Pγ)·64 word XORs per group."""
        decomposition = builtin(BuiltinName.ALT_SELF_INVERSE)
        groups = np.zeros((3, 4, 64), dtype=np.uint64)
        counter = OpCounter()

        shifted_kernel_batch(groups, groups, decomposition, counter, workers=2)

        assert counter.kernel_invocations == 3 * 7
        assert counter.xors(Phase.LINEAR_COMBINATION) == 3 * 12 * 64


class TestRequireGf2:
    """Test the semiring guard."""

    def test_boolean_rejected(self) -> None:
        """Test that the Boolean semiring raises SemiringError."""
        require_gf2(Semiring.GF2, "sw")
        with pytest.raises(SemiringError) as exc_info:
            require_gf2(Semiring.BOOLEAN, "sw")

        assert "boolean" in str(exc_info.value)
