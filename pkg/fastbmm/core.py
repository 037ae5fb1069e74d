"""End-to-end products: layout, basis changes, engine and host pipeline."""

from collections.abc import Sequence

from fastbmm.bitmatrix import (
    BitMatrix,
    BitVectorTensor,
    Operand,
    ShapeError,
    from_interleaved,
    to_interleaved,
)
from fastbmm.config import bmm_settings
from fastbmm.counters import OpCounter
from fastbmm.decomposition import Decomposition, DecompositionError, Factor, builtin
from fastbmm.engine import (
    Algorithm,
    LayerPlan,
    PlanError,
    Semiring,
    basis_change,
    multiply_alt,
    multiply_cubic,
    multiply_strassen_winograd,
)
from fastbmm.engine.kernel import require_gf2
from fastbmm.logging.logger import FastbmmLogger
from fastbmm.pipeline import coordinate
from fastbmm.utils import is_power_of_two

logger = FastbmmLogger("core")


def to_alternative(
    matrix: BitMatrix,
    decomposition: Decomposition,
    plan: LayerPlan,
    operand: Operand,
    counter: OpCounter | None = None,
) -> BitVectorTensor:
    """Interleave ``matrix`` and change it into the alternative basis (φ or ψ)."""
    vector = to_interleaved(matrix, plan, operand)
    match operand:
        case Operand.LEFT:
            which = Factor.PHI
        case Operand.RIGHT:
            which = Factor.PSI
        case _:
            raise PlanError("Only Left and Right operands enter the alternative basis")
    return basis_change(vector, decomposition, which, plan.outer_depth, counter, plan.workers)


def from_alternative(
    vector: BitVectorTensor,
    decomposition: Decomposition,
    plan: LayerPlan,
    counter: OpCounter | None = None,
) -> BitMatrix:
    """Change a Result back with χ and return it row-major."""
    vector = basis_change(
        vector, decomposition, Factor.CHI, plan.outer_depth, counter, plan.workers
    )
    return from_interleaved(vector, plan, Operand.RESULT)


def solve_alternative(
    a_hat: BitVectorTensor,
    b_hat: BitVectorTensor,
    decomposition: Decomposition,
    plan: LayerPlan,
    counter: OpCounter | None = None,
    n_workers: int | None = None,
) -> BitVectorTensor:
    """
    ``ĉ`` from full-depth operands: the host pipeline when ``plan.d_host > 0``,
    otherwise one accelerator-depth multiply.

    ``n_workers`` defaults to ``plan.workers``, capped by the sub-instance count.
    """
    if plan.d_host == 0:
        return multiply_alt(a_hat, b_hat, decomposition, plan, counter)
    sub_instances = decomposition.params.r**plan.d_host
    workers = n_workers or min(plan.workers, sub_instances)
    return coordinate(a_hat, b_hat, workers, plan, decomposition, counter)


def _check_square(a: BitMatrix, b: BitMatrix) -> int:
    n = a.rows
    if not (a.is_square and b.is_square and b.rows == n):
        raise ShapeError(
            f"Fast algorithms need two equal square matrices, got "
            f"{a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )
    if n < 64 or not is_power_of_two(n):
        raise ShapeError(f"Fast algorithms need n = 64 * 2^k, got {n}")
    return n


def multiply(
    a: BitMatrix,
    b: BitMatrix,
    algorithm: Algorithm = Algorithm.ALT_SELF_INVERSE,
    plan: LayerPlan | None = None,
    ring: Semiring = Semiring.GF2,
    counter: OpCounter | None = None,
    n_workers: int | None = None,
) -> BitMatrix:
    """
    Standard-basis, row-major product ``a · b``.

    Args:
        a: Left operand.
        b: Right operand.
        algorithm: ``cubic`` works for any shapes and both semirings;
            ``boolean-cubic`` always uses the Boolean semiring; the fast
            algorithms need square ``64 * 2^k`` operands and GF(2).
        plan: Level split; defaults to :meth:`LayerPlan.default`.
        ring: Semiring of the product.
        counter: Receives the word operations.
        n_workers: Emulated accelerators of the host pipeline.

    Raises:
        SemiringError: For a fast algorithm over the Boolean semiring.
        ShapeError: For operands the algorithm cannot multiply.
        PlanError: If ``plan`` is for another size.
    """
    if algorithm.is_cubic:
        if algorithm is Algorithm.BOOLEAN_CUBIC:
            ring = Semiring.BOOLEAN
        workers = plan.workers if plan else bmm_settings.WORKERS
        return multiply_cubic(a, b, ring, workers, counter)

    require_gf2(ring, algorithm.value)
    n = _check_square(a, b)
    plan = plan or LayerPlan.default(n)
    if plan.n != n:
        raise PlanError(f"Plan {plan} is for n={plan.n}, operands are {n}x{n}")

    if algorithm is Algorithm.SW:
        return multiply_strassen_winograd(a, b, plan, ring, counter)

    name = algorithm.decomposition_name
    if name is None:
        raise PlanError(f"No decomposition for {algorithm.value}")
    decomposition = builtin(name)
    with logger.bind(algo=algorithm.value, plan=str(plan)).timed("multiply"):
        a_hat = to_alternative(a, decomposition, plan, Operand.LEFT, counter)
        b_hat = to_alternative(b, decomposition, plan, Operand.RIGHT, counter)
        c_hat = solve_alternative(a_hat, b_hat, decomposition, plan, counter, n_workers)
        return from_alternative(c_hat, decomposition, plan, counter)


def chain_multiply(
    matrices_hat: Sequence[BitVectorTensor],
    decomposition: Decomposition,
    plan: LayerPlan,
    counter: OpCounter | None = None,
    n_workers: int | None = None,
) -> BitVectorTensor:
    """
    Left fold of products that never leaves the alternative basis.

    The first operand is a Left (or a previous Result), the others are Right
    operands. Each Result is reused as the next Left operand, which is sound
    because χ = φ⁻¹ and both share one address map.

    Raises:
        DecompositionError: If the decomposition does not support chaining.
        PlanError: For fewer than two operands.
    """
    if not decomposition.traits.supports_chaining:
        raise DecompositionError(f"{decomposition.label} does not support chaining")
    if len(matrices_hat) < 2:
        raise PlanError(f"A chain needs at least two operands, got {len(matrices_hat)}")

    accumulated = matrices_hat[0].relabel(Operand.LEFT)
    result = accumulated
    for position, right in enumerate(matrices_hat[1:], start=1):
        logger.debug(f"Chain step {position} of {len(matrices_hat) - 1}")
        result = solve_alternative(accumulated, right, decomposition, plan, counter, n_workers)
        accumulated = result.relabel(Operand.LEFT)
    return result
