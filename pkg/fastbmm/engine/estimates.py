"""Closed-form bit-operation counts for the full recursion down to single bits."""

from fastbmm.engine.enums import Algorithm
from fastbmm.engine.exceptions import PlanError
from fastbmm.utils import is_power_of_two


def _levels(n: int) -> int:
    if not is_power_of_two(n):
        raise PlanError(f"Closed-form counts need a power-of-two size, got {n}")
    return n.bit_length() - 1


def cubic_bit_operations(n: int) -> int:
    return 2 * n**3 - n * n


def basis_change_bit_operations(n: int) -> int:
    """One operand's change of basis: ``½ n² log₂ n``."""
    return n * n * _levels(n) // 2


def bit_operation_estimate(
    algorithm: Algorithm, n: int, include_transforms: bool = False
) -> int:
    """
    Bit operations of an ``n x n`` product, ``n`` a power of two.

    ``n^{log₂ 7}`` is evaluated exactly as ``7^{log₂ n}``. The alternative-basis
    count assumes operands already in the alternative basis unless
    ``include_transforms`` adds the three basis changes.

    Raises:
        PlanError: If ``n`` is not a power of two.
    """
    levels = _levels(n)
    match algorithm:
        case Algorithm.CUBIC | Algorithm.BOOLEAN_CUBIC:
            return cubic_bit_operations(n)
        case Algorithm.SW:
            return 6 * 7**levels - 5 * n * n
        case Algorithm.ALT_SELF_INVERSE | Algorithm.ALT_CHAINING:
            total = 5 * 7**levels - 4 * n * n
            if include_transforms:
                total += 3 * basis_change_bit_operations(n)
            return total
    raise PlanError(f"No estimate for {algorithm!r}")


def effective_bops(n: int, seconds: float) -> float:
    """Effective rate: the cubic count ``2n³ - n²`` divided by the wall time."""
    if seconds <= 0:
        return float("inf")
    return cubic_bit_operations(n) / seconds
