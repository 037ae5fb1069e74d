from fastbmm.bitmatrix.enums import Layout, Operand
from fastbmm.bitmatrix.exceptions import BitFormatError, LayoutError, ShapeError
from fastbmm.bitmatrix.io import (
    decode_bmm,
    dump_text,
    encode_bmm,
    parse_text,
    read_bmm,
    write_bmm,
)
from fastbmm.bitmatrix.layout import from_interleaved, to_interleaved
from fastbmm.bitmatrix.matrix import BitMatrix
from fastbmm.bitmatrix.tensor import LEVEL_MODE, BitVectorTensor, InterleavedLayout

__all__ = [
    "BitMatrix",
    "BitVectorTensor",
    "InterleavedLayout",
    "Layout",
    "Operand",
    "LEVEL_MODE",
    "ShapeError",
    "LayoutError",
    "BitFormatError",
    "to_interleaved",
    "from_interleaved",
    "read_bmm",
    "write_bmm",
    "encode_bmm",
    "decode_bmm",
    "dump_text",
    "parse_text",
]
