"""Permutations between row-major matrices and the interleaved layout."""

from typing import TYPE_CHECKING

import numpy as np

from fastbmm.bitmatrix.enums import Operand
from fastbmm.bitmatrix.exceptions import ShapeError
from fastbmm.bitmatrix.matrix import BitMatrix
from fastbmm.bitmatrix.tensor import BitVectorTensor
from fastbmm.bitmatrix.words import BLOCK

if TYPE_CHECKING:
    from fastbmm.engine.schemas import LayerPlan


def _digit_order(depth: int) -> list[int]:
    # Axes of the (row digits, inner row, column digits) grid, interleaved as
    # (i1, j1, i2, j2, ..., inner row).
    order = []
    for level in range(depth):
        order.extend((level, depth + 1 + level))
    order.append(depth)
    return order


def to_interleaved(
    matrix: BitMatrix, plan: "LayerPlan", operand: Operand
) -> BitVectorTensor:
    """
    Permute a square row-major matrix into the interleaved layout of ``plan``.

    Bit ``(i, j)`` lands at the tuple obtained by interleaving the binary digits
    of ``i`` and ``j`` above the 64x64 block level, most significant first,
    followed by the position inside the innermost block. Right operands have
    their innermost blocks transposed.

    Raises:
        ShapeError: If the matrix is not ``n x n`` with ``n = 64 * 2^depth``.
    """
    depth = plan.outer_depth
    n = BLOCK << depth
    if matrix.rows != n or matrix.cols != n:
        raise ShapeError(
            f"Plan of outer depth {depth} needs a {n}x{n} matrix, "
            f"got {matrix.rows}x{matrix.cols}"
        )

    source = matrix.transpose_blocks64() if operand is Operand.RIGHT else matrix
    grid = source.words.reshape((2,) * depth + (BLOCK,) + (2,) * depth)
    words = np.ascontiguousarray(grid.transpose(_digit_order(depth))).reshape(-1)
    return BitVectorTensor.interleaved(depth, operand, words)


def from_interleaved(
    vector: BitVectorTensor, plan: "LayerPlan", operand: Operand
) -> BitMatrix:
    """
    Exact inverse of :func:`to_interleaved`.

    Raises:
        LayoutError: If the vector is tagged for another operand or depth.
    """
    depth = plan.outer_depth
    vector.expect(operand, depth)
    n = BLOCK << depth

    grid = vector.words.reshape((2,) * (2 * depth) + (BLOCK,))
    inverse = np.argsort(_digit_order(depth))
    words = np.ascontiguousarray(grid.transpose(inverse)).reshape(n, n // BLOCK)
    matrix = BitMatrix(n, n, words)
    if operand is Operand.RIGHT:
        return matrix.transpose_blocks64()
    return matrix
