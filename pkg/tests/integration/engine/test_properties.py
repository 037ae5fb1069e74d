"""Integration tests for algebraic properties of the fast products."""

import pytest

from fastbmm.bitmatrix import BitMatrix, Operand
from fastbmm.core import chain_multiply, from_alternative, multiply, to_alternative
from fastbmm.decomposition import BuiltinName, builtin
from fastbmm.engine import Algorithm, LayerPlan, Semiring, multiply_alt
from tests.conftest_matrices import Oracle

ALTERNATIVE = [BuiltinName.ALT_SELF_INVERSE, BuiltinName.ALT_CHAINING]


class TestLinearity:
    """The alternative-basis product is bilinear over GF(2)."""

    @pytest.mark.integration
    @pytest.mark.parametrize("name", ALTERNATIVE)
    def test_linear_in_each_argument(self, name: BuiltinName) -> None:
        """Test f(a1 + a2, b) = f(a1, b) + f(a2, b) and the same for b."""
        decomposition = builtin(name)
        plan = LayerPlan(d_serial=1, d_parallel=2, workers=2)
        a1, a2, b1, b2 = (
            to_alternative(
                BitMatrix.random(plan.n, plan.n, seed), decomposition, plan, operand
            )
            for seed, operand in (
                (31, Operand.LEFT),
                (32, Operand.LEFT),
                (33, Operand.RIGHT),
                (34, Operand.RIGHT),
            )
        )

        left_sum = multiply_alt(a1 ^ a2, b1, decomposition, plan)
        right_sum = multiply_alt(a1, b1 ^ b2, decomposition, plan)

        assert left_sum == multiply_alt(a1, b1, decomposition, plan) ^ multiply_alt(
            a2, b1, decomposition, plan
        )
        assert right_sum == multiply_alt(a1, b1, decomposition, plan) ^ multiply_alt(
            a1, b2, decomposition, plan
        )

    @pytest.mark.integration
    def test_zero_operand(self) -> None:
        """Test that a zero operand gives a zero product."""
        decomposition = builtin(BuiltinName.ALT_SELF_INVERSE)
        plan = LayerPlan(d_serial=1, d_parallel=1, workers=2)
        a_hat = to_alternative(
            BitMatrix.random(plan.n, plan.n, 35), decomposition, plan, Operand.LEFT
        )
        zero = to_alternative(
            BitMatrix.zeros(plan.n, plan.n), decomposition, plan, Operand.RIGHT
        )

        assert multiply_alt(a_hat, zero, decomposition, plan).is_zero()


class TestAssociativity:
    """Chained products agree however they are bracketed."""

    @pytest.mark.integration
    @pytest.mark.parametrize("d_host", [0, 1])
    def test_bracketing(self, oracle: Oracle, d_host: int) -> None:
        """Test one left-folded chain against right-nested products."""
        decomposition = builtin(BuiltinName.ALT_CHAINING)
        plan = LayerPlan(d_host=d_host, d_serial=1, d_parallel=1, workers=2)
        a, b, c, d = (
            BitMatrix.random(plan.n, plan.n, seed) for seed in (41, 42, 43, 44)
        )

        chained = chain_multiply(
            [
                to_alternative(a, decomposition, plan, Operand.LEFT),
                to_alternative(b, decomposition, plan, Operand.RIGHT),
                to_alternative(c, decomposition, plan, Operand.RIGHT),
                to_alternative(d, decomposition, plan, Operand.RIGHT),
            ],
            decomposition,
            plan,
            n_workers=2,
        )

        inner = multiply(c, d, Algorithm.ALT_CHAINING, plan)
        middle = multiply(b, inner, Algorithm.ALT_CHAINING, plan)
        nested = multiply(a, middle, Algorithm.ALT_CHAINING, plan)
        product = from_alternative(chained, decomposition, plan)
        assert product == nested
        assert product == oracle(
            oracle(oracle(a, b, Semiring.GF2), c, Semiring.GF2), d, Semiring.GF2
        )


class TestLargeOracle:
    """Every layer at n=4096 against the dense product."""

    @pytest.mark.integration
    @pytest.mark.slow
    @pytest.mark.parametrize(
        "algorithm",
        [Algorithm.SW, Algorithm.ALT_SELF_INVERSE, Algorithm.ALT_CHAINING],
    )
    def test_fast_algorithms(
        self, oracle: Oracle, random_pair, algorithm: Algorithm
    ) -> None:
        """Test the default plan at n=4096."""
        a, b = random_pair(4096, seed=51)

        assert multiply(a, b, algorithm) == oracle(a, b, Semiring.GF2)

    @pytest.mark.integration
    @pytest.mark.slow
    @pytest.mark.pipeline
    def test_host_pipeline(self, oracle: Oracle, random_pair) -> None:
        """Test one host level with four emulated accelerators at n=4096."""
        a, b = random_pair(4096, seed=52)
        plan = LayerPlan.for_size(4096, d_host=1, workers=4)

        product = multiply(a, b, Algorithm.ALT_SELF_INVERSE, plan, n_workers=4)

        assert product == oracle(a, b, Semiring.GF2)
