from fastbmm.decomposition.builtins import builtin, sw_triple
from fastbmm.decomposition.cost import predicted_additions
from fastbmm.decomposition.enums import Axis, BuiltinName, CostPart, Factor, SlpOp
from fastbmm.decomposition.exceptions import DecompositionError, SlpError
from fastbmm.decomposition.gf2 import (
    as_gf2,
    check_mutual_inverse,
    check_self_inverse,
    gf2_inverse,
    gf2_matmul,
    gf2_matvec,
    identity,
    is_identity,
    kronecker,
    kronecker_power,
    weight_distribution,
)
from fastbmm.decomposition.schemas import (
    BilinearParams,
    BilinearTriple,
    Decomposition,
    DecompositionTraits,
    VerificationReport,
)
from fastbmm.decomposition.slp import (
    SlpStep,
    StraightLineProgram,
    slp,
    slp_eval,
    slp_matches,
    slp_matrix,
)
from fastbmm.decomposition.verify import (
    compose,
    kronecker_triple,
    verify_decomposition,
    verify_triple_product,
)

__all__ = [
    "Axis",
    "BuiltinName",
    "CostPart",
    "Factor",
    "SlpOp",
    "DecompositionError",
    "SlpError",
    "BilinearParams",
    "BilinearTriple",
    "Decomposition",
    "DecompositionTraits",
    "VerificationReport",
    "SlpStep",
    "StraightLineProgram",
    "slp",
    "slp_eval",
    "slp_matches",
    "slp_matrix",
    "as_gf2",
    "identity",
    "is_identity",
    "gf2_matmul",
    "gf2_matvec",
    "gf2_inverse",
    "kronecker",
    "kronecker_power",
    "check_self_inverse",
    "check_mutual_inverse",
    "weight_distribution",
    "builtin",
    "sw_triple",
    "compose",
    "kronecker_triple",
    "verify_triple_product",
    "verify_decomposition",
    "predicted_additions",
]
