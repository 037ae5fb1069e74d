"""Integration tests for end-to-end products against the dense reference."""

import pytest

from fastbmm.bitmatrix import BitMatrix, Operand, ShapeError
from fastbmm.core import (
    chain_multiply,
    from_alternative,
    multiply,
    solve_alternative,
    to_alternative,
)
from fastbmm.counters import OpCounter, Phase
from fastbmm.decomposition import BuiltinName, DecompositionError, builtin
from fastbmm.engine import (
    Algorithm,
    LayerPlan,
    PlanError,
    Semiring,
    SemiringError,
    predicted_word_xors,
)
from tests.conftest_matrices import Oracle

FAST_ALGORITHMS = [Algorithm.SW, Algorithm.ALT_SELF_INVERSE, Algorithm.ALT_CHAINING]


class TestOracleEquivalence:
    """Every algorithm agrees with the dense product."""

    @pytest.mark.integration
    @pytest.mark.parametrize("algorithm", FAST_ALGORITHMS)
    @pytest.mark.parametrize("n", [64, 128, 256, 512])
    def test_fast_algorithms(
        self, oracle: Oracle, random_pair, algorithm: Algorithm, n: int
    ) -> None:
        """Test the default plan of each size."""
        a, b = random_pair(n, seed=n)

        assert multiply(a, b, algorithm) == oracle(a, b, Semiring.GF2)

    @pytest.mark.integration
    @pytest.mark.slow
    @pytest.mark.parametrize("algorithm", FAST_ALGORITHMS)
    def test_n_1024(self, oracle: Oracle, random_pair, algorithm: Algorithm) -> None:
        """Test n=1024 with every layer in use."""
        a, b = random_pair(1024, seed=1)
        plan = LayerPlan.for_size(1024, d_host=1, d_serial=1, d_parallel=2, workers=4)

        assert multiply(a, b, algorithm, plan) == oracle(a, b, Semiring.GF2)

    @pytest.mark.integration
    @pytest.mark.parametrize(
        "levels", [(0, 3, 0), (0, 0, 3), (1, 1, 1), (2, 0, 1), (3, 0, 0)]
    )
    def test_plans_agree(
        self, oracle: Oracle, random_pair, levels: tuple[int, int, int]
    ) -> None:
        """Test that every split of three levels gives the same product."""
        a, b = random_pair(512, seed=3)
        d_host, d_serial, d_parallel = levels
        plan = LayerPlan(d_host=d_host, d_serial=d_serial, d_parallel=d_parallel, workers=2)

        assert multiply(a, b, Algorithm.ALT_SELF_INVERSE, plan) == oracle(a, b, Semiring.GF2)

    @pytest.mark.integration
    @pytest.mark.parametrize("ring", [Semiring.GF2, Semiring.BOOLEAN])
    def test_cubic_rectangular(self, oracle: Oracle, ring: Semiring) -> None:
        """Test the elementary algorithm on rectangular operands."""
        a = BitMatrix.random(70, 130, seed=1)
        b = BitMatrix.random(130, 10, seed=2)

        assert multiply(a, b, Algorithm.CUBIC, ring=ring) == oracle(a, b, ring)

    @pytest.mark.integration
    def test_boolean_cubic_ignores_ring(self, two_by_two) -> None:
        """Test that boolean-cubic always multiplies over OR / AND."""
        a, b = two_by_two

        product = multiply(a, b, Algorithm.BOOLEAN_CUBIC, ring=Semiring.GF2)

        assert product.to_bits().tolist() == [[1, 1], [1, 1]]


class TestSingleBitProduct:
    """A single-bit product lands in exactly one output position."""

    @pytest.mark.integration
    @pytest.mark.parametrize(
        "i, j, k", [(0, 0, 0), (255, 255, 255), (66, 130, 5), (200, 3, 190)]
    )
    @pytest.mark.parametrize("algorithm", [Algorithm.ALT_SELF_INVERSE, Algorithm.ALT_CHAINING])
    def test_single_bit(self, algorithm: Algorithm, i: int, j: int, k: int) -> None:
        """Test e_i e_jᵀ · e_j e_kᵀ = e_i e_kᵀ through the host layer."""
        a = BitMatrix.zeros(256, 256)
        b = BitMatrix.zeros(256, 256)
        a.set(i, j, 1)
        b.set(j, k, 1)
        plan = LayerPlan(d_host=1, d_parallel=1, workers=2)

        product = multiply(a, b, algorithm, plan)

        assert product.popcount() == 1
        assert product.get(i, k) == 1


class TestAlternativeBasis:
    """Test the alternative-basis building blocks together."""

    @pytest.mark.integration
    def test_solve_then_convert(self, oracle: Oracle, random_pair) -> None:
        """Test that only the solve needs the operands in the alternative basis."""
        decomposition = builtin(BuiltinName.ALT_SELF_INVERSE)
        plan = LayerPlan(d_serial=1, d_parallel=1, workers=1)
        a, b = random_pair(256, seed=7)

        a_hat = to_alternative(a, decomposition, plan, Operand.LEFT)
        b_hat = to_alternative(b, decomposition, plan, Operand.RIGHT)
        c_hat = solve_alternative(a_hat, b_hat, decomposition, plan)

        assert c_hat.operand is Operand.RESULT
        assert from_alternative(c_hat, decomposition, plan) == oracle(a, b, Semiring.GF2)

    @pytest.mark.integration
    def test_chain_of_three(self, oracle: Oracle) -> None:
        """Test A·B·C without leaving the chaining basis."""
        decomposition = builtin(BuiltinName.ALT_CHAINING)
        plan = LayerPlan(d_serial=1, d_parallel=1, workers=2)
        a, b, c = (BitMatrix.random(256, 256, seed) for seed in (1, 2, 3))

        matrices_hat = [
            to_alternative(a, decomposition, plan, Operand.LEFT),
            to_alternative(b, decomposition, plan, Operand.RIGHT),
            to_alternative(c, decomposition, plan, Operand.RIGHT),
        ]
        result = chain_multiply(matrices_hat, decomposition, plan)

        expected = oracle(oracle(a, b, Semiring.GF2), c, Semiring.GF2)
        assert from_alternative(result, decomposition, plan) == expected

    @pytest.mark.integration
    def test_chain_through_host_layer(self, oracle: Oracle) -> None:
        """Test chaining with a host level and two emulated workers."""
        decomposition = builtin(BuiltinName.ALT_CHAINING)
        plan = LayerPlan(d_host=1, d_parallel=1, workers=2)
        a, b, c = (BitMatrix.random(256, 256, seed) for seed in (4, 5, 6))

        matrices_hat = [
            to_alternative(a, decomposition, plan, Operand.LEFT),
            to_alternative(b, decomposition, plan, Operand.RIGHT),
            to_alternative(c, decomposition, plan, Operand.RIGHT),
        ]
        result = chain_multiply(matrices_hat, decomposition, plan, n_workers=2)

        expected = oracle(oracle(a, b, Semiring.GF2), c, Semiring.GF2)
        assert from_alternative(result, decomposition, plan) == expected

    def test_chain_requires_support(self) -> None:
        """Test that the self-inverse basis refuses chaining."""
        decomposition = builtin(BuiltinName.ALT_SELF_INVERSE)
        plan = LayerPlan(d_serial=1)
        a_hat = to_alternative(BitMatrix.zeros(128, 128), decomposition, plan, Operand.LEFT)

        with pytest.raises(DecompositionError):
            chain_multiply([a_hat, a_hat], decomposition, plan)

    def test_chain_needs_two_operands(self) -> None:
        """Test that a chain of one operand is rejected."""
        decomposition = builtin(BuiltinName.ALT_CHAINING)
        plan = LayerPlan(d_serial=1)
        a_hat = to_alternative(BitMatrix.zeros(128, 128), decomposition, plan, Operand.LEFT)

        with pytest.raises(PlanError):
            chain_multiply([a_hat], decomposition, plan)


class TestOperationCounts:
    """Counted word operations match the closed forms."""

    @pytest.mark.integration
    def test_alternative_counts(self, random_pair) -> None:
        """Test kernels, linear combinations and basis changes at n=512."""
        a, b = random_pair(512, seed=9)
        plan = LayerPlan(d_serial=1, d_parallel=2, workers=2)
        counter = OpCounter()

        multiply(a, b, Algorithm.ALT_SELF_INVERSE, plan, counter=counter)

        decomposition = builtin(BuiltinName.ALT_SELF_INVERSE)
        assert counter.kernel_invocations == 7**3
        assert counter.xors(Phase.LINEAR_COMBINATION) == 12 * (7**3 - 4**3) // 3 * 64
        predicted = predicted_word_xors(decomposition, plan)
        assert counter.xors(Phase.LINEAR_COMBINATION) == predicted
        # φ, ψ and χ: two additions per level on every quadrant of 16 blocks.
        assert counter.xors(Phase.BASIS_CHANGE) == 3 * 2 * 3 * 16 * 64
        assert counter.xors(Phase.HOST) == 0

    @pytest.mark.integration
    def test_host_counts(self, random_pair) -> None:
        """Test that the host layer keeps the accelerator counts unchanged."""
        a, b = random_pair(512, seed=10)
        plan = LayerPlan(d_host=1, d_parallel=2, workers=2)
        counter = OpCounter()

        multiply(a, b, Algorithm.ALT_SELF_INVERSE, plan, counter=counter)

        assert counter.kernel_invocations == 7**3
        assert counter.xors(Phase.HOST) > 0


class TestMultiplyErrors:
    """Test argument errors of multiply."""

    def test_boolean_fast_rejected(self) -> None:
        """Test that fast algorithms refuse the Boolean semiring."""
        square = BitMatrix.zeros(64, 64)
        for algorithm in FAST_ALGORITHMS:
            with pytest.raises(SemiringError):
                multiply(square, square, algorithm, ring=Semiring.BOOLEAN)

    def test_not_square(self) -> None:
        """Test that fast algorithms need equal square operands."""
        with pytest.raises(ShapeError):
            multiply(BitMatrix.zeros(64, 128), BitMatrix.zeros(128, 64))

    def test_not_power_of_two(self) -> None:
        """Test that fast algorithms need n = 64·2^k."""
        square = BitMatrix.zeros(96, 96)
        with pytest.raises(ShapeError):
            multiply(square, square, Algorithm.ALT_CHAINING)

    def test_plan_for_other_size(self) -> None:
        """Test that a plan for another size raises PlanError."""
        square = BitMatrix.zeros(128, 128)
        with pytest.raises(PlanError):
            multiply(square, square, Algorithm.ALT_SELF_INVERSE, LayerPlan(d_serial=2))
