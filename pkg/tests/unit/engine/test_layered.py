"""Unit tests for the serial and parallel layers."""

import numpy as np
import pytest

from fastbmm.bitmatrix import BitMatrix, BitVectorTensor, Operand, from_interleaved, to_interleaved
from fastbmm.counters import OpCounter, Phase
from fastbmm.decomposition import BuiltinName, builtin
from fastbmm.engine import (
    LayeredMultiplier,
    LayerPlan,
    PlanError,
    Semiring,
    SemiringError,
    predicted_word_xors,
)
from tests.conftest_matrices import dense_product


def _standard_product(
    name: BuiltinName, d_serial: int, d_parallel: int, seed: int, **options: object
) -> tuple[BitMatrix, BitMatrix]:
    """Run a standard-basis decomposition and return (product, reference)."""
    plan = LayerPlan(d_serial=d_serial, d_parallel=d_parallel, workers=2)
    a = BitMatrix.random(plan.n, plan.n, seed)
    b = BitMatrix.random(plan.n, plan.n, seed + 1)
    multiplier = LayeredMultiplier(
        builtin(name), d_serial, d_parallel, workers=2, **options
    )
    words = multiplier.multiply(
        to_interleaved(a, plan, Operand.LEFT).words,
        to_interleaved(b, plan, Operand.RIGHT).words,
    )
    result = BitVectorTensor.interleaved(plan.outer_depth, Operand.RESULT, words)
    return from_interleaved(result, plan, Operand.RESULT), dense_product(a, b)


class TestLayeredMultiplier:
    """Test products through every split of the levels."""

    @pytest.mark.parametrize("split", [(0, 0), (2, 0), (1, 1), (0, 2)])
    @pytest.mark.parametrize("shifting", [False, True])
    def test_strassen_winograd_splits(self, split: tuple[int, int], shifting: bool) -> None:
        """Test that any serial/parallel split gives the same product."""
        product, expected = _standard_product(
            BuiltinName.SW, *split, seed=10, shifting=shifting
        )

        assert product == expected

    @pytest.mark.parametrize("merging", [False, True])
    def test_three_parallel_levels(self, merging: bool) -> None:
        """Test a 512x512 product in the parallel layer only."""
        product, expected = _standard_product(
            BuiltinName.SW, 0, 3, seed=20, shifting=False, merging=merging
        )

        assert product == expected

    def test_elementary(self) -> None:
        """Test the eight-product recursion."""
        product, expected = _standard_product(BuiltinName.ELEMENTARY, 1, 1, seed=30)

        assert product == expected

    def test_zero_operands(self) -> None:
        """Test that zero operands give a zero result."""
        multiplier = LayeredMultiplier(builtin(BuiltinName.ALT_SELF_INVERSE), 1, 1)
        zeros = np.zeros(multiplier.words, dtype=np.uint64)

        assert not multiplier.multiply(zeros, zeros).any()

    def test_words_and_shift(self) -> None:
        """Test operand length and level shifting rules."""
        multiplier = LayeredMultiplier(builtin(BuiltinName.SW), 1, 2, shifting=True)

        assert multiplier.depth == 3
        assert multiplier.words == 64 * 64
        assert multiplier.shifts_level
        assert not LayeredMultiplier(builtin(BuiltinName.SW), 2, 0, shifting=True).shifts_level

    def test_wrong_operand_size(self) -> None:
        """Test that operands of another depth raise PlanError."""
        multiplier = LayeredMultiplier(builtin(BuiltinName.SW), 1, 0)
        short = np.zeros(64, dtype=np.uint64)

        with pytest.raises(PlanError):
            multiplier.multiply(short, short)

    def test_boolean_rejected(self) -> None:
        """Test that the recursion refuses the Boolean semiring."""
        with pytest.raises(SemiringError):
            LayeredMultiplier(builtin(BuiltinName.SW), 1, 0, ring=Semiring.BOOLEAN)

    def test_negative_levels(self) -> None:
        """Test that negative level counts raise PlanError."""
        with pytest.raises(PlanError):
            LayeredMultiplier(builtin(BuiltinName.SW), -1, 0)


class TestLayeredCounts:
    """Test counted kernels and linear-combination XORs."""

    @pytest.mark.parametrize("split", [(3, 0), (1, 2), (0, 3)])
    @pytest.mark.parametrize("shifting", [False, True])
    def test_alternative_counts(self, split: tuple[int, int], shifting: bool) -> None:
        """Test 7^d kernels and 12·(7^d − 4^d)/3·64 word XORs at depth 3."""
        decomposition = builtin(BuiltinName.ALT_SELF_INVERSE)
        d_serial, d_parallel = split
        multiplier_counter = OpCounter()
        multiplier = LayeredMultiplier(
            decomposition, d_serial, d_parallel, counter=multiplier_counter, shifting=shifting
        )
        zeros = np.zeros(multiplier.words, dtype=np.uint64)

        multiplier.multiply(zeros, zeros)

        plan = LayerPlan(d_serial=d_serial, d_parallel=d_parallel)
        expected = 12 * (7**3 - 4**3) // 3 * 64
        assert multiplier_counter.kernel_invocations == 7**3
        assert multiplier_counter.xors(Phase.LINEAR_COMBINATION) == expected
        assert predicted_word_xors(decomposition, plan) == expected
        assert multiplier_counter.xors(Phase.BASIS_CHANGE) == 0

    def test_strassen_winograd_counts(self) -> None:
        """Test 15·(7^d − 4^d)/3·64 word XORs for Strassen-Winograd."""
        counter = OpCounter()
        multiplier = LayeredMultiplier(builtin(BuiltinName.SW), 1, 1, counter=counter)
        zeros = np.zeros(multiplier.words, dtype=np.uint64)

        multiplier.multiply(zeros, zeros)

        assert counter.word_xors == 15 * (49 - 16) // 3 * 64
        assert counter.kernel_invocations == 49
