from collections.abc import Iterable, Sequence
from itertools import product
from typing import Any

import numpy as np
from pydantic import BaseModel, Field, model_validator

from fastbmm.decomposition.enums import SlpOp
from fastbmm.decomposition.exceptions import SlpError
from fastbmm.decomposition.gf2 import as_gf2


class SlpStep(BaseModel):
    op: SlpOp
    target: int = Field(ge=0)
    source: int = Field(ge=0)

    class Config:
        frozen = True


class StraightLineProgram(BaseModel):
    """
    Branch-free program of copies and XORs over word registers.

    Registers ``0 .. input_arity-1`` hold the inputs when evaluation starts;
    every other register must be written by a copy before it is read. The
    program's result is the registers listed in ``outputs``.
    """

    input_arity: int = Field(ge=1)
    output_arity: int = Field(ge=1)
    steps: tuple[SlpStep, ...] = ()
    outputs: tuple[int, ...]

    @model_validator(mode="after")
    def validate_program(self) -> "StraightLineProgram":
        if len(self.outputs) != self.output_arity:
            raise ValueError(
                f"Program lists {len(self.outputs)} outputs, expected {self.output_arity}"
            )

        defined = set(range(self.input_arity))
        for position, step in enumerate(self.steps):
            if step.source not in defined:
                raise ValueError(f"Step {position} reads undefined register {step.source}")
            if step.op is SlpOp.XOR and step.target not in defined:
                raise ValueError(f"Step {position} adds into undefined register {step.target}")
            if step.op is SlpOp.XOR and step.target == step.source:
                raise ValueError(f"Step {position} adds register {step.target} to itself")
            defined.add(step.target)

        missing = [register for register in self.outputs if register not in defined]
        if missing:
            raise ValueError(f"Outputs read undefined registers {missing}")
        return self

    @property
    def addition_count(self) -> int:
        return sum(1 for step in self.steps if step.op is SlpOp.XOR)

    @property
    def register_count(self) -> int:
        registers = [self.input_arity - 1, *self.outputs]
        registers.extend(step.target for step in self.steps)
        return max(registers) + 1

    @property
    def is_in_place(self) -> bool:
        """Square program that only adds between input registers."""
        return (
            self.input_arity == self.output_arity
            and self.outputs == tuple(range(self.input_arity))
            and all(
                step.op is SlpOp.XOR
                and step.target < self.input_arity
                and step.source < self.input_arity
                for step in self.steps
            )
        )

    def evaluate(self, inputs: Sequence[Any]) -> list[Any]:
        """
        Run the program on word arrays (or Python ints).

        Inputs are never modified; copies alias until a register is added to,
        and each addition produces a fresh value.

        Raises:
            SlpError: If the number of inputs differs from ``input_arity``.
        """
        if len(inputs) != self.input_arity:
            raise SlpError(
                f"Program expects {self.input_arity} inputs, got {len(inputs)}"
            )
        registers: list[Any] = [None] * self.register_count
        registers[: self.input_arity] = list(inputs)
        for step in self.steps:
            if step.op is SlpOp.COPY:
                registers[step.target] = registers[step.source]
            else:
                registers[step.target] = registers[step.target] ^ registers[step.source]
        return [registers[register] for register in self.outputs]

    def evaluate_in_place(self, registers: Sequence[np.ndarray]) -> None:
        """Run an in-place program directly on writable word views."""
        if not self.is_in_place:
            raise SlpError("Program cannot run in place")
        if len(registers) != self.input_arity:
            raise SlpError(
                f"Program expects {self.input_arity} registers, got {len(registers)}"
            )
        for step in self.steps:
            np.bitwise_xor(
                registers[step.target], registers[step.source], out=registers[step.target]
            )

    class Config:
        frozen = True


def slp(
    input_arity: int,
    outputs: Iterable[int],
    *steps: tuple[str, int, int],
) -> StraightLineProgram:
    """
    Compact constructor: ``slp(4, [0, 1, 2, 3], ("xor", 3, 1))``.
    """
    output_list = tuple(outputs)
    return StraightLineProgram(
        input_arity=input_arity,
        output_arity=len(output_list),
        steps=tuple(
            SlpStep(op=SlpOp(op), target=target, source=source)
            for op, target, source in steps
        ),
        outputs=output_list,
    )


def slp_eval(program: StraightLineProgram, inputs: Sequence[Any]) -> list[Any]:
    return program.evaluate(inputs)


def slp_matrix(program: StraightLineProgram) -> np.ndarray:
    """Dense matrix realized by the program, read off its action on unit vectors."""
    units = [1 << column for column in range(program.input_arity)]
    # Each input is a Python int whose bit c marks unit vector c.
    outputs = program.evaluate(units)
    return as_gf2(
        [
            [(value >> column) & 1 for column in range(program.input_arity)]
            for value in outputs
        ]
    )


def slp_matches(program: StraightLineProgram, matrix: np.ndarray) -> bool:
    """
    Check that the program computes ``matrix · x`` for every input ``x``.

    All ``2^a`` inputs are enumerated for ``a <= 8``; larger programs are
    checked through their realized matrix, which is equivalent by linearity.
    """
    if matrix.shape != (program.output_arity, program.input_arity):
        return False
    if program.input_arity > 8:
        return bool(np.array_equal(slp_matrix(program), matrix))

    for bits in product((0, 1), repeat=program.input_arity):
        outputs = program.evaluate(list(bits))
        expected = (matrix.astype(np.int64) @ np.array(bits)) & 1
        if [int(value) for value in outputs] != [int(value) for value in expected]:
            return False
    return True
