from fastbmm.yates.exceptions import ChainError
from fastbmm.yates.schemas import KroneckerChain, KroneckerFactor
from fastbmm.yates.yates import apply, apply_in_place, application_sequence, cost

__all__ = [
    "ChainError",
    "KroneckerChain",
    "KroneckerFactor",
    "apply",
    "apply_in_place",
    "application_sequence",
    "cost",
]
