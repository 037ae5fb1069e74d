"""BMM1 binary files and 0/1 text dumps."""

from os import PathLike
from pathlib import Path

import numpy as np

from fastbmm.bitmatrix.exceptions import BitFormatError
from fastbmm.bitmatrix.matrix import BitMatrix
from fastbmm.bitmatrix.words import WORD_DTYPE, tail_mask, words_for

MAGIC = b"BMM1"
HEADER_DTYPE = np.dtype("<u8")
HEADER_SIZE = len(MAGIC) + 2 * HEADER_DTYPE.itemsize


def encode_bmm(matrix: BitMatrix) -> bytes:
    header = np.array([matrix.rows, matrix.cols], dtype=HEADER_DTYPE).tobytes()
    return MAGIC + header + matrix.words.astype(WORD_DTYPE, copy=False).tobytes()


def decode_bmm(data: bytes) -> BitMatrix:
    """
    Parse a BMM1 payload.

    Raises:
        BitFormatError: On a bad magic, a truncated or oversized payload, zero
            dimensions or set pad bits.
    """
    if len(data) < HEADER_SIZE or data[: len(MAGIC)] != MAGIC:
        raise BitFormatError("Not a BMM1 file (bad magic or truncated header)")

    rows, cols = (int(v) for v in np.frombuffer(data, HEADER_DTYPE, 2, len(MAGIC)))
    if rows < 1 or cols < 1:
        raise BitFormatError(f"BMM1 header declares an empty {rows}x{cols} matrix")

    per_row = words_for(cols)
    expected = HEADER_SIZE + rows * per_row * WORD_DTYPE.itemsize
    if len(data) != expected:
        raise BitFormatError(
            f"BMM1 payload of {len(data)} bytes, expected {expected} for {rows}x{cols}"
        )

    words = np.frombuffer(data, WORD_DTYPE, offset=HEADER_SIZE).reshape(rows, per_row)
    if np.any(words[:, -1] & ~tail_mask(cols)):
        raise BitFormatError("BMM1 rows have non-zero pad bits")
    return BitMatrix(rows, cols, words.copy())


def write_bmm(matrix: BitMatrix, path: str | PathLike[str]) -> None:
    Path(path).write_bytes(encode_bmm(matrix))


def read_bmm(path: str | PathLike[str]) -> BitMatrix:
    return decode_bmm(Path(path).read_bytes())


def dump_text(matrix: BitMatrix) -> str:
    """Rows of ``0``/``1`` characters, one line per row."""
    bits = matrix.to_bits()
    return "\n".join("".join("1" if bit else "0" for bit in row) for row in bits)


def parse_text(text: str) -> BitMatrix:
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise BitFormatError("Empty bit-matrix text")
    width = len(lines[0])
    if any(len(line) != width for line in lines):
        raise BitFormatError("Rows of a bit-matrix text dump differ in length")
    if any(char not in "01" for line in lines for char in line):
        raise BitFormatError("Bit-matrix text may only contain 0 and 1")
    return BitMatrix.from_bits([[int(char) for char in line] for line in lines])
