"""The published ⟨2,2,2⟩ decompositions and their straight-line programs."""

from functools import cache

from fastbmm.decomposition.enums import BuiltinName
from fastbmm.decomposition.gf2 import identity
from fastbmm.decomposition.schemas import (
    BilinearParams,
    BilinearTriple,
    Decomposition,
    DecompositionTraits,
)
from fastbmm.decomposition.slp import StraightLineProgram, slp

# Block order of every 2x2 operand is (00, 01, 10, 11).
SQUARE_2X2 = BilinearParams(s=2, t=2, u=2, r=7)
ELEMENTARY_2X2 = BilinearParams(s=2, t=2, u=2, r=8)

IDENTITY_SLP = slp(4, range(4))

# Strassen-Winograd: 4 + 4 input additions, 7 output additions.
SW_XI = [
    [0, 0, 1, 1],
    [0, 1, 0, 0],
    [0, 1, 0, 1],
    [0, 1, 1, 1],
    [1, 1, 1, 1],
    [0, 0, 1, 0],
    [1, 0, 0, 0],
]
SW_ETA = [
    [0, 0, 1, 1],
    [0, 0, 1, 0],
    [0, 1, 0, 1],
    [0, 1, 1, 1],
    [0, 1, 0, 0],
    [1, 1, 1, 1],
    [1, 0, 0, 0],
]
SW_ZETA = [
    [0, 1, 0, 0, 0, 0, 1],
    [1, 1, 0, 1, 1, 0, 0],
    [0, 1, 1, 1, 0, 1, 0],
    [1, 1, 1, 1, 0, 0, 0],
]
SW_SLP_XI = slp(
    4,
    [4, 1, 5, 6, 7, 2, 0],
    ("copy", 4, 2), ("xor", 4, 3),  # T0 = A10 + A11
    ("copy", 5, 1), ("xor", 5, 3),  # T2 = A01 + A11
    ("copy", 6, 2), ("xor", 6, 5),  # T3 = A10 + T2
    ("copy", 7, 0), ("xor", 7, 6),  # T4 = A00 + T3
)  # fmt: skip
SW_SLP_ETA = slp(
    4,
    [4, 2, 5, 6, 1, 7, 0],
    ("copy", 4, 2), ("xor", 4, 3),  # S0 = B10 + B11
    ("copy", 5, 1), ("xor", 5, 3),  # S2 = B01 + B11
    ("copy", 6, 2), ("xor", 6, 5),  # S3 = B10 + S2
    ("copy", 7, 0), ("xor", 7, 6),  # S5 = B00 + S3
)  # fmt: skip
SW_SLP_ZETA = slp(
    7,
    [10, 11, 12, 13],
    ("copy", 7, 1), ("xor", 7, 3),  # U0 = Q1 + Q3
    ("copy", 8, 2), ("xor", 8, 7),  # U1 = Q2 + U0
    ("copy", 9, 4), ("xor", 9, 7),  # U2 = Q4 + U0
    ("copy", 10, 1), ("xor", 10, 6),  # C00 = Q1 + Q6
    ("copy", 11, 0), ("xor", 11, 9),  # C01 = Q0 + U2
    ("copy", 12, 5), ("xor", 12, 8),  # C10 = Q5 + U1
    ("copy", 13, 0), ("xor", 13, 8),  # C11 = Q0 + U1
)  # fmt: skip

# Alternative basis with self-inverse basis changes.
SI_PHI = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 1, 1, 1],
]
SI_CHI = [
    [1, 0, 0, 0],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
    [0, 0, 0, 1],
]
SI_ALPHA = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 0, 0, 1],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
]
SI_BETA = [
    [1, 0, 0, 0],
    [0, 0, 1, 0],
    [1, 0, 0, 1],
    [0, 0, 0, 1],
    [0, 1, 0, 0],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
]
SI_GAMMA = [
    [1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 0, 1, 0],
    [0, 1, 0, 1, 0, 1, 1],
]
SI_SLP_PHI = slp(4, range(4), ("xor", 3, 1), ("xor", 3, 2))
SI_SLP_CHI = slp(4, range(4), ("xor", 1, 3), ("xor", 2, 3))
SI_SLP_ALPHA = slp(
    4,
    [0, 1, 2, 3, 4, 5, 6],
    ("copy", 4, 0), ("xor", 4, 3),  # T4 = A00 + A11
    ("copy", 5, 1), ("xor", 5, 3),  # T5 = A01 + A11
    ("copy", 6, 2), ("xor", 6, 3),  # T6 = A10 + A11
)  # fmt: skip
SI_SLP_BETA = slp(
    4,
    [0, 2, 4, 3, 1, 5, 6],
    ("copy", 4, 0), ("xor", 4, 3),  # S2 = B00 + B11
    ("copy", 5, 1), ("xor", 5, 3),  # S5 = B01 + B11
    ("copy", 6, 2), ("xor", 6, 3),  # S6 = B10 + B11
)  # fmt: skip
SI_SLP_GAMMA = slp(
    7,
    [7, 8, 9, 10],
    ("copy", 7, 0), ("xor", 7, 1),  # C00 = Q0 + Q1
    ("copy", 8, 4), ("xor", 8, 6),  # C01 = Q4 + Q6
    ("copy", 9, 2), ("xor", 9, 5),  # C10 = Q2 + Q5
    ("copy", 10, 1), ("xor", 10, 3), ("xor", 10, 5), ("xor", 10, 6),  # C11
)  # fmt: skip

# Alternative basis with chi = phi^-1, so products chain without leaving the basis.
CHAIN_PHI = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 1, 1, 1],
    [0, 1, 0, 1],
]
CHAIN_CHI = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 1],
    [0, 1, 0, 1],
]
CHAIN_ALPHA = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 0, 1, 0],
    [0, 1, 1, 0],
    [0, 0, 1, 1],
]
CHAIN_BETA = [
    [1, 0, 0, 0],
    [0, 0, 1, 1],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 1, 0, 0],
    [0, 1, 1, 0],
    [1, 0, 1, 0],
]
CHAIN_GAMMA = [
    [1, 1, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 1, 1, 0],
    [0, 1, 1, 0, 1, 0, 1],
    [0, 0, 0, 1, 1, 0, 0],
]
# Order matters: the second step reads the already updated register 3.
CHAIN_SLP_PHI = slp(4, range(4), ("xor", 3, 1), ("xor", 2, 3))
CHAIN_SLP_CHI = slp(4, range(4), ("xor", 2, 3), ("xor", 3, 1))
CHAIN_SLP_ALPHA = slp(
    4,
    [0, 1, 2, 3, 4, 5, 6],
    ("copy", 4, 0), ("xor", 4, 2),  # T4 = A00 + A10
    ("copy", 5, 1), ("xor", 5, 2),  # T5 = A01 + A10
    ("copy", 6, 2), ("xor", 6, 3),  # T6 = A10 + A11
)  # fmt: skip
CHAIN_SLP_BETA = slp(
    4,
    [0, 4, 2, 3, 1, 5, 6],
    ("copy", 4, 2), ("xor", 4, 3),  # S1 = B10 + B11
    ("copy", 5, 1), ("xor", 5, 2),  # S5 = B01 + B10
    ("copy", 6, 0), ("xor", 6, 2),  # S6 = B00 + B10
)  # fmt: skip
CHAIN_SLP_GAMMA = slp(
    7,
    [8, 9, 10, 11],
    ("copy", 7, 1), ("xor", 7, 2), ("xor", 7, 4),  # R = Q1 + Q2 + Q4
    ("copy", 8, 0), ("xor", 8, 1),  # C00 = Q0 + Q1
    ("copy", 9, 7), ("xor", 9, 5),  # C01 = R + Q5
    ("copy", 10, 7), ("xor", 10, 6),  # C10 = R + Q6
    ("copy", 11, 3), ("xor", 11, 4),  # C11 = Q3 + Q4
)  # fmt: skip


def _elementary() -> Decomposition:
    # Product h = 4i + 2j + k computes A_ij * B_jk and feeds C_ik.
    alpha = [[0] * 4 for _ in range(8)]
    beta = [[0] * 4 for _ in range(8)]
    gamma = [[0] * 8 for _ in range(4)]
    alpha_outputs, beta_outputs = [], []
    gamma_steps: list[tuple[str, int, int]] = []
    for h in range(8):
        i, j, k = h >> 2, (h >> 1) & 1, h & 1
        alpha[h][2 * i + j] = 1
        beta[h][2 * j + k] = 1
        gamma[2 * i + k][h] = 1
        alpha_outputs.append(2 * i + j)
        beta_outputs.append(2 * j + k)
    for i in range(2):
        for k in range(2):
            register = 8 + 2 * i + k
            gamma_steps.append(("copy", register, 4 * i + k))
            gamma_steps.append(("xor", register, 4 * i + 2 + k))

    return _standard_basis(
        BuiltinName.ELEMENTARY,
        ELEMENTARY_2X2,
        alpha,
        beta,
        gamma,
        slp(4, alpha_outputs),
        slp(4, beta_outputs),
        slp(8, range(8, 12), *gamma_steps),
    )


def _standard_basis(
    name: BuiltinName,
    params: BilinearParams,
    alpha: list[list[int]],
    beta: list[list[int]],
    gamma: list[list[int]],
    slp_alpha: StraightLineProgram,
    slp_beta: StraightLineProgram,
    slp_gamma: StraightLineProgram,
) -> Decomposition:
    return Decomposition(
        name=name,
        params=params,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        phi=identity(4),
        psi=identity(4),
        chi=identity(4),
        slp_alpha=slp_alpha,
        slp_beta=slp_beta,
        slp_gamma=slp_gamma,
        slp_phi=IDENTITY_SLP,
        slp_psi=IDENTITY_SLP,
        slp_chi=IDENTITY_SLP,
        traits=DecompositionTraits(self_inverse_bases=True, supports_chaining=True),
    )


@cache
def builtin(name: BuiltinName) -> Decomposition:
    """
    Return one of the built-in decompositions.

    Args:
        name: Which decomposition.

    Returns:
        The decomposition with its published matrices and programs. The
        standard-basis ones (Strassen-Winograd, elementary) use identity bases.
    """
    match name:
        case BuiltinName.SW:
            return _standard_basis(
                name,
                SQUARE_2X2,
                SW_XI,
                SW_ETA,
                SW_ZETA,
                SW_SLP_XI,
                SW_SLP_ETA,
                SW_SLP_ZETA,
            )
        case BuiltinName.ALT_SELF_INVERSE:
            return Decomposition(
                name=name,
                params=SQUARE_2X2,
                alpha=SI_ALPHA,
                beta=SI_BETA,
                gamma=SI_GAMMA,
                phi=SI_PHI,
                psi=SI_PHI,
                chi=SI_CHI,
                slp_alpha=SI_SLP_ALPHA,
                slp_beta=SI_SLP_BETA,
                slp_gamma=SI_SLP_GAMMA,
                slp_phi=SI_SLP_PHI,
                slp_psi=SI_SLP_PHI,
                slp_chi=SI_SLP_CHI,
                traits=DecompositionTraits(self_inverse_bases=True),
            )
        case BuiltinName.ALT_CHAINING:
            return Decomposition(
                name=name,
                params=SQUARE_2X2,
                alpha=CHAIN_ALPHA,
                beta=CHAIN_BETA,
                gamma=CHAIN_GAMMA,
                phi=CHAIN_PHI,
                psi=CHAIN_PHI,
                chi=CHAIN_CHI,
                slp_alpha=CHAIN_SLP_ALPHA,
                slp_beta=CHAIN_SLP_BETA,
                slp_gamma=CHAIN_SLP_GAMMA,
                slp_phi=CHAIN_SLP_PHI,
                slp_psi=CHAIN_SLP_PHI,
                slp_chi=CHAIN_SLP_CHI,
                traits=DecompositionTraits(supports_chaining=True),
            )
        case BuiltinName.ELEMENTARY:
            return _elementary()
    raise ValueError(f"Unknown builtin decomposition {name!r}")


def sw_triple() -> BilinearTriple:
    return BilinearTriple(zeta=SW_ZETA, xi=SW_XI, eta=SW_ETA, params=SQUARE_2X2)
