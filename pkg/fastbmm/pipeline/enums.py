from enum import Enum


class BufferState(Enum):
    FREE = "free"  # Writable by the producing stage
    OCCUPIED = "occupied"  # Holds data for the consuming stage


class BufferKind(Enum):
    LEFT = "left"  # T: left operand of a sub-instance
    RIGHT = "right"  # S: right operand of a sub-instance
    PRODUCT = "product"  # Q: solved sub-instance


class Stage(Enum):
    PREPARE_LEFT = "prepare_left"
    PREPARE_RIGHT = "prepare_right"
    SOLVE = "solve"
    AGGREGATE = "aggregate"
