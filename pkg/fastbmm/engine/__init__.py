from fastbmm.counters import OpCounter, Phase
from fastbmm.engine.alternative import (
    basis_change,
    multiply_alt,
    multiply_strassen_winograd,
)
from fastbmm.engine.cubic import multiply_cubic
from fastbmm.engine.enums import Algorithm, Semiring
from fastbmm.engine.estimates import (
    basis_change_bit_operations,
    bit_operation_estimate,
    cubic_bit_operations,
    effective_bops,
)
from fastbmm.engine.exceptions import PlanError, SemiringError
from fastbmm.engine.kernel import kernel64, kernel64_batch, shifted_kernel_batch
from fastbmm.engine.layered import LayeredMultiplier, predicted_word_xors
from fastbmm.engine.schemas import LayerPlan

__all__ = [
    "Algorithm",
    "Semiring",
    "LayerPlan",
    "OpCounter",
    "Phase",
    "PlanError",
    "SemiringError",
    "kernel64",
    "kernel64_batch",
    "shifted_kernel_batch",
    "multiply_cubic",
    "LayeredMultiplier",
    "predicted_word_xors",
    "basis_change",
    "multiply_alt",
    "multiply_strassen_winograd",
    "bit_operation_estimate",
    "basis_change_bit_operations",
    "cubic_bit_operations",
    "effective_bops",
]
