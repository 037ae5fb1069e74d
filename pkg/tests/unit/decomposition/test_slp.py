"""Unit tests for straight-line programs."""

import numpy as np
import pytest
from pydantic import ValidationError

from fastbmm.decomposition import SlpError, as_gf2, slp, slp_eval, slp_matches, slp_matrix
from fastbmm.decomposition.builtins import CHAIN_SLP_PHI, SI_SLP_GAMMA


class TestStraightLineProgram:
    """Test program validation and evaluation."""

    def test_addition_count(self) -> None:
        """Test that only XOR steps count as additions."""
        program = slp(2, [2], ("copy", 2, 0), ("xor", 2, 1))

        assert program.addition_count == 1
        assert program.register_count == 3
        assert not program.is_in_place

    def test_evaluate_ints(self) -> None:
        """Test evaluation on Python ints."""
        program = slp(2, [0, 2], ("copy", 2, 0), ("xor", 2, 1))

        assert slp_eval(program, [0b1100, 0b1010]) == [0b1100, 0b0110]

    def test_evaluate_does_not_modify_inputs(self) -> None:
        """Test that word-array inputs stay untouched."""
        program = slp(2, [2], ("copy", 2, 0), ("xor", 2, 1))
        a = np.array([1, 2], dtype=np.uint64)
        b = np.array([3, 3], dtype=np.uint64)

        (result,) = program.evaluate([a, b])

        assert result.tolist() == [2, 1]
        assert a.tolist() == [1, 2]

    def test_wrong_arity(self) -> None:
        """Test that the input count is checked."""
        with pytest.raises(SlpError):
            slp(2, [0]).evaluate([1])

    def test_undefined_register(self) -> None:
        """Test that reading an unwritten register is rejected."""
        with pytest.raises(ValidationError):
            slp(2, [3], ("xor", 3, 0))
        with pytest.raises(ValidationError):
            slp(2, [2])

    def test_self_addition_rejected(self) -> None:
        """Test that x += x is rejected."""
        with pytest.raises(ValidationError):
            slp(2, [0], ("xor", 0, 0))

    def test_in_place(self) -> None:
        """Test in-place evaluation on word views."""
        registers = [np.array([0b01], dtype=np.uint64), np.array([0b11], dtype=np.uint64)]
        program = slp(2, [0, 1], ("xor", 1, 0))

        program.evaluate_in_place(registers)

        assert program.is_in_place
        assert registers[1].tolist() == [0b10]

    def test_in_place_rejected_for_copies(self) -> None:
        """Test that programs with copies cannot run in place."""
        with pytest.raises(SlpError):
            SI_SLP_GAMMA.evaluate_in_place([np.zeros(1, dtype=np.uint64)] * 7)

    def test_step_order_matters(self) -> None:
        """Test that the chaining φ program reads the updated register."""
        assert slp_matrix(CHAIN_SLP_PHI).tolist() == [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 1, 1, 1],
            [0, 1, 0, 1],
        ]

    def test_slp_matches(self) -> None:
        """Test matching against the realized matrix and a wrong one."""
        program = slp(2, [0, 2], ("copy", 2, 0), ("xor", 2, 1))

        assert slp_matches(program, as_gf2([[1, 0], [1, 1]]))
        assert not slp_matches(program, as_gf2([[1, 0], [0, 1]]))
        assert not slp_matches(program, as_gf2([[1, 0, 0]]))
