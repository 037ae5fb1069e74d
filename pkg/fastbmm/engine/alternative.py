"""Basis changes and products in an alternative basis."""

from fastbmm.bitmatrix import (
    BitMatrix,
    BitVectorTensor,
    Operand,
    ShapeError,
    from_interleaved,
    to_interleaved,
)
from fastbmm.bitmatrix.tensor import LEVEL_MODE
from fastbmm.bitmatrix.words import BLOCK_BITS
from fastbmm.counters import OpCounter, Phase
from fastbmm.decomposition import BuiltinName, Decomposition, Factor, builtin
from fastbmm.engine.enums import Semiring
from fastbmm.engine.exceptions import PlanError
from fastbmm.engine.kernel import require_gf2
from fastbmm.engine.layered import LayeredMultiplier
from fastbmm.engine.schemas import LayerPlan
from fastbmm.yates import KroneckerChain, apply, apply_in_place

BASIS_OPERAND = {
    Factor.PHI: Operand.LEFT,
    Factor.PSI: Operand.RIGHT,
    Factor.CHI: Operand.RESULT,
}


def basis_change(
    vector: BitVectorTensor,
    decomposition: Decomposition,
    which: Factor,
    levels: int,
    counter: OpCounter | None = None,
    workers: int = 1,
) -> BitVectorTensor:
    """
    Apply ``which^{⊗levels}`` over the outermost ``levels`` modes, in place.

    φ acts on Left operands, ψ on Right operands and χ on Results. Programs
    that cannot run in place are applied out of place and copied back, so
    the returned vector always shares storage with ``vector``.

    Raises:
        LayoutError: If ``vector`` is not interleaved for the factor's operand.
        PlanError: If ``which`` is not a basis factor or ``levels`` exceeds
            the vector's depth.
    """
    if which not in BASIS_OPERAND:
        raise PlanError(f"{which.value} is not a basis change")
    operand = BASIS_OPERAND[which]
    vector.expect(operand)
    if not 0 <= levels <= vector.depth:
        raise PlanError(f"Cannot change {levels} levels of a depth-{vector.depth} vector")
    if levels == 0:
        return vector

    trailing = LEVEL_MODE ** (vector.depth - levels) * BLOCK_BITS
    chain = KroneckerChain.from_decomposition(decomposition, which, levels, trailing)
    if decomposition.slp(which).is_in_place:
        apply_in_place(chain, vector.words, None, counter, workers, Phase.BASIS_CHANGE)
    else:
        flat = BitVectorTensor(chain.input_modes + (trailing,), vector.words)
        result = apply(chain, flat, None, counter, workers, Phase.BASIS_CHANGE)
        vector.words[:] = result.words
    return vector


def multiply_alt(
    a_hat: BitVectorTensor,
    b_hat: BitVectorTensor,
    decomposition: Decomposition,
    plan: LayerPlan,
    counter: OpCounter | None = None,
    ring: Semiring = Semiring.GF2,
) -> BitVectorTensor:
    """
    ``ĉ = γ̄(ᾱâ ⊙ β̄b̂)`` over the serial and parallel levels of ``plan``.

    Args:
        a_hat: Left operand in the alternative basis, interleaved at the
            plan's accelerator depth.
        b_hat: Right operand, likewise.
        decomposition: The bilinear algorithm and its programs.
        plan: Level split; ``d_host`` is ignored.
        counter: Receives XORs and kernel invocations.
        ring: Must be GF(2).

    Returns:
        The Result operand in the alternative basis.

    Raises:
        LayoutError: If the operands are not interleaved at the plan's depth.
        SemiringError: For the Boolean semiring.
    """
    depth = plan.accelerator_depth
    a_hat.expect(Operand.LEFT, depth)
    b_hat.expect(Operand.RIGHT, depth)
    multiplier = LayeredMultiplier(
        decomposition, plan.d_serial, plan.d_parallel, ring, plan.workers, counter
    )
    words = multiplier.multiply(a_hat.words, b_hat.words)
    return BitVectorTensor.interleaved(depth, Operand.RESULT, words)


def multiply_strassen_winograd(
    a: BitMatrix,
    b: BitMatrix,
    plan: LayerPlan | None = None,
    ring: Semiring = Semiring.GF2,
    counter: OpCounter | None = None,
) -> BitMatrix:
    """
    Strassen-Winograd product of two square ``64 * 2^k`` matrices.

    The standard basis needs no basis change; host levels recurse serially
    like the serial layer.

    Raises:
        SemiringError: For the Boolean semiring.
        ShapeError: If the operands are not square of the same size.
        PlanError: If the plan is for another size.
    """
    require_gf2(ring, "Strassen-Winograd")
    if not (a.is_square and b.is_square and a.rows == b.rows):
        raise ShapeError(
            f"Strassen-Winograd needs two equal square matrices, got "
            f"{a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )
    plan = plan or LayerPlan.default(a.rows)
    if plan.n != a.rows:
        raise PlanError(f"Plan {plan} is for n={plan.n}, operands are {a.rows}x{a.rows}")

    multiplier = LayeredMultiplier(
        builtin(BuiltinName.SW),
        plan.d_host + plan.d_serial,
        plan.d_parallel,
        ring,
        plan.workers,
        counter,
    )
    left = to_interleaved(a, plan, Operand.LEFT)
    right = to_interleaved(b, plan, Operand.RIGHT)
    words = multiplier.multiply(left.words, right.words)
    result = BitVectorTensor.interleaved(plan.outer_depth, Operand.RESULT, words)
    return from_interleaved(result, plan, Operand.RESULT)
