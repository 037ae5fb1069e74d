"""Elementary algorithm on packed words, any rectangular shape."""

import numpy as np

from fastbmm.bitmatrix import BitMatrix, ShapeError
from fastbmm.bitmatrix.words import pack_rows, unpack_rows
from fastbmm.counters import OpCounter, Phase
from fastbmm.engine.enums import Semiring
from fastbmm.logging.logger import FastbmmLogger
from fastbmm.utils import run_partitioned

logger = FastbmmLogger("cubic")

# Upper bound on the words of one (rows, cols, words) AND intermediate.
CHUNK_WORDS = 1 << 22


def multiply_cubic(
    a: BitMatrix,
    b: BitMatrix,
    ring: Semiring = Semiring.GF2,
    workers: int = 1,
    counter: OpCounter | None = None,
) -> BitMatrix:
    """
    ``C[i, k]`` is the XOR (GF(2)) or OR (Boolean) over ``j`` of ``a[i, j] & b[j, k]``.

    Rows of ``a`` and columns of ``b`` (rows of ``bᵀ``) are both packed along
    ``j``, so each output bit takes one AND per word pair followed by an XOR
    or OR reduction. Output rows are split into disjoint ranges per worker.

    Raises:
        ShapeError: If ``a.cols != b.rows``.
    """
    if a.cols != b.rows:
        raise ShapeError(
            f"Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    rows, inner, cols = a.rows, a.cols, b.cols
    if rows == 0 or cols == 0 or inner == 0:
        return BitMatrix.zeros(rows, cols)

    left = a.words
    right_t = pack_rows(np.ascontiguousarray(unpack_rows(b.words, cols).T))
    words = left.shape[1]
    out_bits = np.empty((rows, cols), dtype=np.uint8)
    step = max(1, CHUNK_WORDS // (cols * words))

    def run(start: int, stop: int) -> None:
        for first in range(start, stop, step):
            window = slice(first, min(first + step, stop))
            pairs = left[window, None, :] & right_t[None, :, :]
            match ring:
                case Semiring.GF2:
                    reduced = np.bitwise_xor.reduce(pairs, axis=-1)
                    out_bits[window] = np.bitwise_count(reduced) & 1
                case Semiring.BOOLEAN:
                    reduced = np.bitwise_or.reduce(pairs, axis=-1)
                    out_bits[window] = reduced != 0

    with logger.bind(ring=ring.value).timed(f"cubic {rows}x{inner}x{cols}"):
        run_partitioned(rows, workers, run)

    if counter is not None:
        products = rows * cols
        counter.add_ands(products * words)
        reductions = products * (words - 1)
        if ring is Semiring.GF2:
            counter.add_xors(reductions, Phase.LINEAR_COMBINATION)
        else:
            counter.add_ors(reductions)
    return BitMatrix(rows, cols, pack_rows(out_bits))
