from fastbmm.decomposition.enums import CostPart, Factor
from fastbmm.decomposition.exceptions import DecompositionError
from fastbmm.decomposition.schemas import Decomposition


def predicted_additions(
    decomposition: Decomposition, depth: int, part: CostPart
) -> int:
    """
    Closed-form addition count of a depth-``depth`` recursion, diagonal case.

    Units are element vectors: one addition adds two vectors holding one
    innermost block each. Multiply by the block's word count to get word XORs.

    Args:
        decomposition: A decomposition with ``s = t = u`` and ``r > s²``.
        depth: Number of recursion levels.
        part: Basis changes ``(Pχ+Pφ+Pψ)·s^{2(d-1)}·d`` or linear combinations
            ``(Pγ+Pα+Pβ)·(r^d - s^{2d})/(r - s²)``.

    Raises:
        DecompositionError: For a non-diagonal decomposition or negative depth.
    """
    p = decomposition.params
    if not p.is_diagonal:
        raise DecompositionError(
            f"Closed-form counts need s = t = u and r > s², got {p}"
        )
    if depth < 0:
        raise DecompositionError(f"Depth must be non-negative, got {depth}")
    if depth == 0:
        return 0

    square = p.s * p.s
    match part:
        case CostPart.BASIS_CHANGES:
            total = sum(
                decomposition.additions(factor)
                for factor in (Factor.CHI, Factor.PHI, Factor.PSI)
            )
            return total * square ** (depth - 1) * depth
        case CostPart.LINEAR_COMBINATIONS:
            total = sum(
                decomposition.additions(factor)
                for factor in (Factor.GAMMA, Factor.ALPHA, Factor.BETA)
            )
            return total * (p.r**depth - square**depth) // (p.r - square)
    raise DecompositionError(f"Unknown cost part {part!r}")
