"""Word-level primitives shared by matrices, vectors and kernels."""

import numpy as np

WORD_BITS = 64
WORD_DTYPE = np.dtype("<u8")

BLOCK = 64  # Side of the innermost square block
BLOCK_WORDS = BLOCK * BLOCK // WORD_BITS
BLOCK_BITS = BLOCK * BLOCK

ALL_ONES = np.uint64(0xFFFFFFFFFFFFFFFF)

# (shift, mask of the bit columns that stay in place) for the recursive
# 64x64 transpose; the mask selects columns c with c & shift == 0.
_TRANSPOSE_STEPS = (
    (32, np.uint64(0x00000000FFFFFFFF)),
    (16, np.uint64(0x0000FFFF0000FFFF)),
    (8, np.uint64(0x00FF00FF00FF00FF)),
    (4, np.uint64(0x0F0F0F0F0F0F0F0F)),
    (2, np.uint64(0x3333333333333333)),
    (1, np.uint64(0x5555555555555555)),
)


def words_for(bits: int) -> int:
    return -(-bits // WORD_BITS)


def tail_mask(cols: int) -> np.uint64:
    """Mask of the live bits in the last word of a row of ``cols`` bits."""
    live = cols % WORD_BITS
    if live == 0:
        return ALL_ONES
    return np.uint64((1 << live) - 1)


def pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a 2-D 0/1 array into rows of LSB-first words."""
    rows, cols = bits.shape
    padded = np.zeros((rows, words_for(cols) * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = bits != 0
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view(WORD_DTYPE).reshape(rows, -1).copy()


def unpack_rows(words: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of :func:`pack_rows`; returns a ``(rows, cols)`` uint8 array."""
    raw = np.ascontiguousarray(words, dtype=WORD_DTYPE).view(np.uint8)
    raw = raw.reshape(words.shape[0], -1)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :cols]


def transpose64(blocks: np.ndarray) -> np.ndarray:
    """
    Transpose every 64x64 block of a ``(..., 64)`` word stack.

    Word ``i`` of a block is row ``i``; bit ``j`` of it is column ``j``. The
    transpose swaps off-diagonal half blocks with shifts and masks, halving
    the block side on every step.

    Args:
        blocks: Array whose last axis has 64 words.

    Returns:
        A new array of the same shape with each block transposed.
    """
    shape = blocks.shape
    x = np.array(blocks, dtype=WORD_DTYPE, copy=True).reshape(-1, BLOCK)
    for shift, mask in _TRANSPOSE_STEPS:
        pairs = x.reshape(x.shape[0], BLOCK // (2 * shift), 2, shift)
        low = pairs[:, :, 0, :]
        high = pairs[:, :, 1, :]
        delta = ((low >> np.uint64(shift)) ^ high) & mask
        high ^= delta
        low ^= delta << np.uint64(shift)
    return x.reshape(shape)


def parity(words: np.ndarray, axis: int = -1) -> np.ndarray:
    """Parity of the total popcount along ``axis``."""
    counts = np.bitwise_count(words).astype(np.uint32)
    return (counts.sum(axis=axis) & 1).astype(np.uint8)
