from fastbmm.bitmatrix import BitMatrix, read_bmm, write_bmm
from fastbmm.core import chain_multiply, multiply
from fastbmm.decomposition import BuiltinName, builtin
from fastbmm.engine import Algorithm, LayerPlan, Semiring

__all__ = [
    "BitMatrix",
    "read_bmm",
    "write_bmm",
    "multiply",
    "chain_multiply",
    "LayerPlan",
    "Algorithm",
    "Semiring",
    "BuiltinName",
    "builtin",
]
