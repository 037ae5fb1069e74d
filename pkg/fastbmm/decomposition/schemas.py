from typing import Any

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from fastbmm.decomposition.enums import BuiltinName, Factor
from fastbmm.decomposition.gf2 import as_gf2
from fastbmm.decomposition.slp import StraightLineProgram


class BilinearParams(BaseModel):
    """Parameters ⟨s,t,u⟩_r: an s×t by t×u product with r multiplications."""

    s: int = Field(ge=1)
    t: int = Field(ge=1)
    u: int = Field(ge=1)
    r: int = Field(ge=1)

    @property
    def is_diagonal(self) -> bool:
        return self.s == self.t == self.u and self.r > self.s * self.s

    def __str__(self) -> str:
        return f"⟨{self.s},{self.t},{self.u}⟩_{self.r}"

    class Config:
        frozen = True


class BilinearTriple(BaseModel):
    """The triple (ζ | ξ, η) computing C = ζ(ξA ⊙ ηB)."""

    zeta: np.ndarray  # su x r
    xi: np.ndarray  # r x st
    eta: np.ndarray  # r x tu
    params: BilinearParams

    @field_validator("zeta", "xi", "eta", mode="before")
    @classmethod
    def validate_matrix(cls, v: Any) -> np.ndarray:
        return as_gf2(v)

    @model_validator(mode="after")
    def validate_shapes(self) -> "BilinearTriple":
        p = self.params
        expected = {
            "zeta": (p.s * p.u, p.r),
            "xi": (p.r, p.s * p.t),
            "eta": (p.r, p.t * p.u),
        }
        for name, shape in expected.items():
            actual = getattr(self, name).shape
            if actual != shape:
                raise ValueError(f"{name} has shape {actual}, expected {shape} for {p}")
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BilinearTriple):
            return NotImplemented
        return self.params == other.params and all(
            np.array_equal(getattr(self, name), getattr(other, name))
            for name in ("zeta", "xi", "eta")
        )

    class Config:
        arbitrary_types_allowed = True
        frozen = True


class DecompositionTraits(BaseModel):
    self_inverse_bases: bool = False  # phi^2 = psi^2 = chi^2 = I
    supports_chaining: bool = False  # chi = phi^-1 = psi^-1

    class Config:
        frozen = True


class Decomposition(BaseModel):
    """
    Alternative-basis decomposition: ζ = χγ, ξ = αφ, η = βψ.

    Each factor matrix comes with a straight-line program computing its
    matrix-vector product; the programs' addition counts are the P values of
    the cost formulas.
    """

    name: BuiltinName | None = None
    params: BilinearParams
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    phi: np.ndarray
    psi: np.ndarray
    chi: np.ndarray
    slp_alpha: StraightLineProgram
    slp_beta: StraightLineProgram
    slp_gamma: StraightLineProgram
    slp_phi: StraightLineProgram
    slp_psi: StraightLineProgram
    slp_chi: StraightLineProgram
    traits: DecompositionTraits = DecompositionTraits()

    @field_validator("alpha", "beta", "gamma", "phi", "psi", "chi", mode="before")
    @classmethod
    def validate_matrix(cls, v: Any) -> np.ndarray:
        return as_gf2(v)

    @model_validator(mode="after")
    def validate_shapes(self) -> "Decomposition":
        p = self.params
        st, tu, su = p.s * p.t, p.t * p.u, p.s * p.u
        expected = {
            Factor.ALPHA: (p.r, st),
            Factor.BETA: (p.r, tu),
            Factor.GAMMA: (su, p.r),
            Factor.PHI: (st, st),
            Factor.PSI: (tu, tu),
            Factor.CHI: (su, su),
        }
        for factor, shape in expected.items():
            actual = self.matrix(factor).shape
            if actual != shape:
                raise ValueError(
                    f"{factor.value} has shape {actual}, expected {shape} for {p}"
                )
            program = self.slp(factor)
            if (program.output_arity, program.input_arity) != shape:
                raise ValueError(
                    f"slp_{factor.value} maps {program.input_arity} to "
                    f"{program.output_arity} registers, expected {shape[1]} to {shape[0]}"
                )
        return self

    def matrix(self, factor: Factor) -> np.ndarray:
        return getattr(self, factor.value)

    def slp(self, factor: Factor) -> StraightLineProgram:
        return getattr(self, f"slp_{factor.value}")

    def additions(self, factor: Factor) -> int:
        return self.slp(factor).addition_count

    @property
    def label(self) -> str:
        return self.name.value if self.name else f"custom{self.params}"

    class Config:
        arbitrary_types_allowed = True
        frozen = True


class VerificationReport(BaseModel):
    """Outcome of the full property suite for one decomposition."""

    decomposition: str
    params: str
    triple_product: bool
    bases_invertible: bool
    self_inverse: bool | None = None
    mutual_inverse: bool | None = None
    slps_match: dict[str, bool]
    additions: dict[str, int]
    total_additions: int
    operand_weights: list[int]
    right_operand_weights: list[int]
    result_weights: list[int]

    @property
    def passed(self) -> bool:
        checks = [self.triple_product, self.bases_invertible, *self.slps_match.values()]
        checks.extend(
            flag for flag in (self.self_inverse, self.mutual_inverse) if flag is not None
        )
        return all(checks)

    class Config:
        frozen = True
