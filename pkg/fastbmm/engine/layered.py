"""
Serial and parallel layers of the recursive bilinear multiplication.

Vectors are interleaved word arrays: at every level the four quadrant
sub-vectors of an operand are contiguous and in order (0,0), (0,1), (1,0),
(1,1), so one level of the recursion is a reshape to ``(4, size)``.
"""

from dataclasses import dataclass

import numpy as np

from fastbmm.bitmatrix import BitVectorTensor
from fastbmm.bitmatrix.tensor import LEVEL_MODE
from fastbmm.bitmatrix.words import BLOCK_BITS, BLOCK_WORDS, WORD_DTYPE
from fastbmm.config import bmm_settings
from fastbmm.counters import OpCounter, Phase
from fastbmm.decomposition import Decomposition, Factor
from fastbmm.engine.enums import Semiring
from fastbmm.engine.exceptions import PlanError
from fastbmm.engine.kernel import kernel64_batch, require_gf2, shifted_kernel_batch
from fastbmm.engine.schemas import LayerPlan
from fastbmm.logging.logger import FastbmmLogger
from fastbmm.yates import KroneckerChain, apply


@dataclass
class _LevelScratch:
    """Buffers of one serial level, reused across its ``r`` recursive calls."""

    left: np.ndarray  # r x size
    right: np.ndarray  # r x size
    products: np.ndarray  # r x size
    result: np.ndarray  # 4 x size


class LayeredMultiplier:
    """
    Multiply two interleaved operands below the host layer.

    ``d_serial`` levels recurse depth-first: the ``r`` operand combinations
    of a level are formed with the α/β programs, each pair is multiplied
    recursively and the ``r`` products are combined with the γ program. The
    remaining ``d_parallel`` levels run as one expanding Kronecker pass per
    operand (outermost level first), a batch of independent 64x64 block
    products and one compressing pass (innermost level first).

    With level shifting the innermost parallel level is folded into the
    kernel instead of the expanding and compressing passes.

    An instance keeps per-level scratch and is not meant to be shared
    between threads.
    """

    logger = FastbmmLogger("LayeredMultiplier")

    def __init__(
        self,
        decomposition: Decomposition,
        d_serial: int,
        d_parallel: int,
        ring: Semiring = Semiring.GF2,
        workers: int = 1,
        counter: OpCounter | None = None,
        shifting: bool | None = None,
        merging: bool | None = None,
    ) -> None:
        """
        Raises:
            SemiringError: For the Boolean semiring.
            PlanError: On negative level counts or a decomposition whose
                operands are not 2x2 block matrices.
        """
        require_gf2(ring, "Bilinear recursion")
        params = decomposition.params
        if (params.s, params.t, params.u) != (2, 2, 2):
            raise PlanError(f"Layered recursion needs 2x2 blocks, got {params}")
        if d_serial < 0 or d_parallel < 0:
            raise PlanError(f"Level counts must be non-negative, got {d_serial}, {d_parallel}")

        self._decomposition = decomposition
        self._rank = params.r
        self._d_serial = d_serial
        self._d_parallel = d_parallel
        self._workers = max(1, workers)
        self._counter = counter
        self._shifting = bmm_settings.LEVEL_SHIFTING if shifting is None else shifting
        self._merging = bmm_settings.LEVEL_MERGING if merging is None else merging
        self._scratch: dict[int, _LevelScratch] = {}

    @property
    def depth(self) -> int:
        return self._d_serial + self._d_parallel

    @property
    def words(self) -> int:
        """Word length of each operand and of the result."""
        return LEVEL_MODE**self.depth * BLOCK_WORDS

    @property
    def shifts_level(self) -> bool:
        return self._shifting and self._d_parallel >= 1

    def multiply(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """
        Args:
            left: Interleaved left operand words.
            right: Interleaved right operand words, innermost blocks transposed.

        Returns:
            A new word array with the interleaved result.

        Raises:
            PlanError: If an operand does not have :attr:`words` words.
        """
        for name, operand in (("left", left), ("right", right)):
            if operand.size != self.words:
                raise PlanError(
                    f"Depth {self.depth} expects {self.words} {name} words, got {operand.size}"
                )
        logger = self.logger.bind(serial=self._d_serial, parallel=self._d_parallel)
        with logger.timed(f"{self._decomposition.label} multiply"):
            return self._serial(0, left, right).copy()

    def _level_scratch(self, level: int, size: int) -> _LevelScratch:
        scratch = self._scratch.get(level)
        if scratch is None:
            scratch = _LevelScratch(
                left=np.empty((self._rank, size), dtype=WORD_DTYPE),
                right=np.empty((self._rank, size), dtype=WORD_DTYPE),
                products=np.empty((self._rank, size), dtype=WORD_DTYPE),
                result=np.empty((LEVEL_MODE, size), dtype=WORD_DTYPE),
            )
            self._scratch[level] = scratch
        return scratch

    def _serial(self, level: int, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        if level == self._d_serial:
            return self._parallel(left, right)

        decomposition = self._decomposition
        size = left.size // LEVEL_MODE
        scratch = self._level_scratch(level, size)
        quadrants_left = left.reshape(LEVEL_MODE, size)
        quadrants_right = right.reshape(LEVEL_MODE, size)

        combined = decomposition.slp_alpha.evaluate(list(quadrants_left))
        for h, value in enumerate(combined):
            scratch.left[h] = value
        combined = decomposition.slp_beta.evaluate(list(quadrants_right))
        for h, value in enumerate(combined):
            scratch.right[h] = value

        for h in range(self._rank):
            scratch.products[h] = self._serial(level + 1, scratch.left[h], scratch.right[h])

        for c, value in enumerate(decomposition.slp_gamma.evaluate(list(scratch.products))):
            scratch.result[c] = value

        if self._counter is not None:
            additions = sum(
                decomposition.additions(factor)
                for factor in (Factor.ALPHA, Factor.BETA, Factor.GAMMA)
            )
            self._counter.add_xors(additions * size, Phase.LINEAR_COMBINATION)
        return scratch.result.reshape(-1)

    def _expand(self, factor: Factor, words: np.ndarray, levels: int, trailing: int) -> np.ndarray:
        chain = KroneckerChain.from_decomposition(self._decomposition, factor, levels, trailing)
        vector = BitVectorTensor(chain.input_modes + (trailing,), words)
        # Reversal order: the outermost level goes first.
        order = tuple(reversed(range(levels)))
        return apply(
            chain, vector, order, self._counter, self._workers, merge=self._merging
        ).words

    def _compress(self, words: np.ndarray, levels: int, trailing: int) -> np.ndarray:
        chain = KroneckerChain.from_decomposition(
            self._decomposition, Factor.GAMMA, levels, trailing
        )
        vector = BitVectorTensor(chain.input_modes + (trailing,), words)
        return apply(
            chain, vector, None, self._counter, self._workers, merge=self._merging
        ).words

    def _parallel(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        shifted = 1 if self.shifts_level else 0
        levels = self._d_parallel - shifted
        trailing = LEVEL_MODE**shifted * BLOCK_BITS

        if levels:
            left = self._expand(Factor.ALPHA, left, levels, trailing)
            right = self._expand(Factor.BETA, right, levels, trailing)

        if shifted:
            groups = self._rank**levels
            products = shifted_kernel_batch(
                left.reshape(groups, LEVEL_MODE, BLOCK_WORDS),
                right.reshape(groups, LEVEL_MODE, BLOCK_WORDS),
                self._decomposition,
                self._counter,
                self._workers,
            ).reshape(-1)
        else:
            products = kernel64_batch(
                left.reshape(-1, BLOCK_WORDS),
                right.reshape(-1, BLOCK_WORDS),
                Semiring.GF2,
                self._counter,
                self._workers,
            ).reshape(-1)

        if levels:
            products = self._compress(products, levels, trailing)
        return products


def predicted_word_xors(decomposition: Decomposition, plan: LayerPlan) -> int:
    """
    Linear-combination word XORs counted by one accelerator-depth multiply.

    Level ``ℓ`` (1-based from the top) runs ``r^(ℓ-1)`` times on quadrants of
    ``4^(L-ℓ)`` blocks, whichever layer it belongs to, so the total is
    ``(Pα+Pβ+Pγ) · 64 · Σ_ℓ r^(ℓ-1) · 4^(L-ℓ)``.
    """
    depth = plan.accelerator_depth
    additions = sum(
        decomposition.additions(factor) for factor in (Factor.ALPHA, Factor.BETA, Factor.GAMMA)
    )
    rank = decomposition.params.r
    runs = sum(rank ** (level - 1) * LEVEL_MODE ** (depth - level) for level in range(1, depth + 1))
    return additions * BLOCK_WORDS * runs
