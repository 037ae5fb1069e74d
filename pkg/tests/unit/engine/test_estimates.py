"""Unit tests for closed-form bit-operation estimates."""

import math

import pytest

from fastbmm.decomposition import BuiltinName
from fastbmm.engine import (
    Algorithm,
    PlanError,
    basis_change_bit_operations,
    bit_operation_estimate,
    cubic_bit_operations,
    effective_bops,
)


class TestBitOperationEstimate:
    """Test bit_operation_estimate."""

    def test_cubic(self) -> None:
        """Test 2n³ − n² for both cubic variants."""
        assert cubic_bit_operations(2) == 12
        assert bit_operation_estimate(Algorithm.CUBIC, 4) == 2 * 64 - 16
        assert bit_operation_estimate(Algorithm.BOOLEAN_CUBIC, 4) == 112

    def test_strassen_winograd(self) -> None:
        """Test 6n^log₂7 − 5n²."""
        assert bit_operation_estimate(Algorithm.SW, 2) == 22
        assert bit_operation_estimate(Algorithm.SW, 1024) == 6 * 7**10 - 5 * 1024**2

    def test_alternative(self) -> None:
        """Test 5n^log₂7 − 4n², plus 3·½n²log₂n with transforms."""
        for algorithm in (Algorithm.ALT_SELF_INVERSE, Algorithm.ALT_CHAINING):
            assert bit_operation_estimate(algorithm, 2) == 19
            assert bit_operation_estimate(algorithm, 2, include_transforms=True) == 25

    def test_alternative_beats_strassen_winograd(self) -> None:
        """Test that the alternative count is below Strassen-Winograd for n >= 2."""
        for levels in range(1, 12):
            n = 1 << levels
            assert bit_operation_estimate(
                Algorithm.ALT_SELF_INVERSE, n
            ) < bit_operation_estimate(Algorithm.SW, n)

    def test_basis_change(self) -> None:
        """Test ½n²log₂n for one operand."""
        assert basis_change_bit_operations(8) == 96

    def test_not_power_of_two(self) -> None:
        """Test that other sizes raise PlanError."""
        with pytest.raises(PlanError):
            bit_operation_estimate(Algorithm.SW, 3)


class TestEffectiveBops:
    """Test effective_bops."""

    def test_rate(self) -> None:
        """Test the cubic count over the wall time."""
        assert effective_bops(2, 2.0) == 6.0

    def test_zero_time(self) -> None:
        """Test that a zero duration gives infinity."""
        assert math.isinf(effective_bops(64, 0.0))


class TestAlgorithm:
    """Test Algorithm helpers."""

    def test_decomposition_name(self) -> None:
        """Test the mapping to built-in decompositions."""
        assert Algorithm.SW.decomposition_name is BuiltinName.SW
        assert Algorithm.ALT_CHAINING.decomposition_name is BuiltinName.ALT_CHAINING
        assert Algorithm.CUBIC.decomposition_name is None

    def test_is_cubic(self) -> None:
        """Test the cubic family."""
        assert Algorithm.BOOLEAN_CUBIC.is_cubic
        assert not Algorithm.ALT_SELF_INVERSE.is_cubic
