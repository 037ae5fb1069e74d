from enum import Enum


class BuiltinName(Enum):
    SW = "sw"  # Strassen-Winograd in the standard basis
    ALT_SELF_INVERSE = "alt-si"  # Alternative basis with self-inverse changes
    ALT_CHAINING = "alt-chain"  # Alternative basis with chi = phi^-1
    ELEMENTARY = "elementary"  # Eight-product block recursion


class Axis(Enum):
    ROWS = "rows"
    COLS = "cols"


class CostPart(Enum):
    BASIS_CHANGES = "basis_changes"
    LINEAR_COMBINATIONS = "linear_combinations"


class Factor(Enum):
    ALPHA = "alpha"  # Left operand combinations, r x st
    BETA = "beta"  # Right operand combinations, r x tu
    GAMMA = "gamma"  # Product aggregation, su x r
    PHI = "phi"  # Left basis change, st x st
    PSI = "psi"  # Right basis change, tu x tu
    CHI = "chi"  # Result basis change back, su x su


class SlpOp(Enum):
    COPY = "copy"  # target <- source
    XOR = "xor"  # target <- target + source
