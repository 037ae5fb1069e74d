"""64x64 block products on word rows."""

import numpy as np

from fastbmm.bitmatrix.words import BLOCK_WORDS, WORD_DTYPE
from fastbmm.config import bmm_settings
from fastbmm.counters import OpCounter, Phase
from fastbmm.decomposition import Decomposition
from fastbmm.engine.enums import Semiring
from fastbmm.engine.exceptions import SemiringError
from fastbmm.utils import run_partitioned

# One AND per (row, column) word pair of a block.
ANDS_PER_BLOCK = BLOCK_WORDS * BLOCK_WORDS


def _pack(bits: np.ndarray) -> np.ndarray:
    packed = np.packbits(bits, axis=-1, bitorder="little")
    return packed.view(WORD_DTYPE).reshape(bits.shape[:-1])


def _block_products(a: np.ndarray, bt: np.ndarray, ring: Semiring) -> np.ndarray:
    # (B, 64, 1) & (B, 1, 64): entry [b, i, k] pairs row i of A with column k of B.
    pairs = a[:, :, None] & bt[:, None, :]
    match ring:
        case Semiring.GF2:
            bits = np.bitwise_count(pairs) & 1
        case Semiring.BOOLEAN:
            bits = (pairs != 0).view(np.uint8)
    return _pack(bits)


def kernel64_batch(
    a_blocks: np.ndarray,
    bt_blocks: np.ndarray,
    ring: Semiring = Semiring.GF2,
    counter: OpCounter | None = None,
    workers: int = 1,
) -> np.ndarray:
    """
    Multiply stacks of 64x64 blocks.

    Args:
        a_blocks: ``(B, 64)`` words, row ``i`` of each left block.
        bt_blocks: ``(B, 64)`` words, row ``k`` holding column ``k`` of each
            right block.
        ring: GF(2) reduces with popcount parity, Boolean with a nonzero test.
        counter: Receives ``B`` kernel invocations.
        workers: Threads sharing the batch.

    Returns:
        ``(B, 64)`` words of the row-major products.
    """
    if a_blocks.shape != bt_blocks.shape or a_blocks.shape[-1:] != (BLOCK_WORDS,):
        raise ValueError(
            f"Block stacks must both be (B, {BLOCK_WORDS}), got "
            f"{a_blocks.shape} and {bt_blocks.shape}"
        )
    count = a_blocks.shape[0]
    out = np.empty((count, BLOCK_WORDS), dtype=WORD_DTYPE)
    batch = bmm_settings.KERNEL_BATCH_BLOCKS

    def run(start: int, stop: int) -> None:
        for first in range(start, stop, batch):
            window = slice(first, min(first + batch, stop))
            out[window] = _block_products(a_blocks[window], bt_blocks[window], ring)

    run_partitioned(count, workers, run)
    if counter is not None:
        counter.add_kernel(count, ANDS_PER_BLOCK)
    return out


def kernel64(
    a_block: np.ndarray, b_block_transposed: np.ndarray, ring: Semiring = Semiring.GF2
) -> np.ndarray:
    """Product of one 64x64 block with one pre-transposed block."""
    return kernel64_batch(a_block[None, :], b_block_transposed[None, :], ring)[0]


def shifted_kernel_batch(
    left_groups: np.ndarray,
    right_groups: np.ndarray,
    decomposition: Decomposition,
    counter: OpCounter | None = None,
    workers: int = 1,
) -> np.ndarray:
    """
    Kernel with one recursion level folded in.

    Each group holds the four 64x64 quadrant blocks of one 128x128 operand;
    the group is expanded with the α/β programs, the ``r`` block products are
    taken and the γ program compresses them back to four result blocks.

    Args:
        left_groups: ``(G, 4, 64)`` left quadrants.
        right_groups: ``(G, 4, 64)`` right quadrants, blocks pre-transposed.
        decomposition: Supplies the level's programs.

    Returns:
        ``(G, 4, 64)`` result quadrants.
    """
    slp_alpha, slp_beta, slp_gamma = (
        decomposition.slp_alpha,
        decomposition.slp_beta,
        decomposition.slp_gamma,
    )
    rank = decomposition.params.r
    count = left_groups.shape[0]
    out = np.empty((count, slp_gamma.output_arity, BLOCK_WORDS), dtype=WORD_DTYPE)
    batch = max(1, bmm_settings.KERNEL_BATCH_BLOCKS // rank)

    def run(start: int, stop: int) -> None:
        for first in range(start, stop, batch):
            window = slice(first, min(first + batch, stop))
            left, right = left_groups[window], right_groups[window]
            t = slp_alpha.evaluate([left[:, i] for i in range(slp_alpha.input_arity)])
            s = slp_beta.evaluate([right[:, i] for i in range(slp_beta.input_arity)])
            size = left.shape[0]
            products = _block_products(
                np.stack(t, axis=1).reshape(size * rank, BLOCK_WORDS),
                np.stack(s, axis=1).reshape(size * rank, BLOCK_WORDS),
                Semiring.GF2,
            ).reshape(size, rank, BLOCK_WORDS)
            q = slp_gamma.evaluate([products[:, h] for h in range(rank)])
            for c, value in enumerate(q):
                out[window, c] = value

    run_partitioned(count, workers, run)
    if counter is not None:
        additions = (
            slp_alpha.addition_count + slp_beta.addition_count + slp_gamma.addition_count
        )
        counter.add_xors(additions * count * BLOCK_WORDS, Phase.LINEAR_COMBINATION)
        counter.add_kernel(count * rank, ANDS_PER_BLOCK)
    return out


def require_gf2(ring: Semiring, algorithm: str) -> None:
    """
    Raises:
        SemiringError: Unless ``ring`` is GF(2).
    """
    if ring is not Semiring.GF2:
        raise SemiringError(
            f"{algorithm} needs subtraction and is unsound over the {ring.value} semiring"
        )
