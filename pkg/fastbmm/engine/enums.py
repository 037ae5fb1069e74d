from enum import Enum

from fastbmm.decomposition.enums import BuiltinName


class Semiring(Enum):
    BOOLEAN = "boolean"  # OR / AND
    GF2 = "gf2"  # XOR / AND


class Algorithm(Enum):
    CUBIC = "cubic"  # Elementary word-level algorithm, ring from the caller
    BOOLEAN_CUBIC = "boolean-cubic"  # Elementary algorithm over OR / AND
    SW = "sw"  # Strassen-Winograd in the standard basis
    ALT_SELF_INVERSE = "alt-si"  # Alternative basis, self-inverse changes
    ALT_CHAINING = "alt-chain"  # Alternative basis, chi = phi^-1

    @property
    def is_cubic(self) -> bool:
        return self in (Algorithm.CUBIC, Algorithm.BOOLEAN_CUBIC)

    @property
    def decomposition_name(self) -> BuiltinName | None:
        match self:
            case Algorithm.SW:
                return BuiltinName.SW
            case Algorithm.ALT_SELF_INVERSE:
                return BuiltinName.ALT_SELF_INVERSE
            case Algorithm.ALT_CHAINING:
                return BuiltinName.ALT_CHAINING
        return None
