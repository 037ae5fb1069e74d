from enum import Enum


class Layout(Enum):
    ROW_MAJOR = "row_major"  # Rows of word-packed bits
    INTERLEAVED = "interleaved"  # Recursive block layout of the layered engine


class Operand(Enum):
    LEFT = "left"  # Modes (s, t), inner block row-major
    RIGHT = "right"  # Modes (t, u), inner block transposed
    RESULT = "result"  # Modes (s, u), inner block row-major
