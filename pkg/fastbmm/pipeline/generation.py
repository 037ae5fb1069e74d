"""Host-layer sub-instance generation and aggregation."""

import numpy as np

from fastbmm.bitmatrix import BitVectorTensor, Operand
from fastbmm.bitmatrix.words import WORD_DTYPE
from fastbmm.counters import OpCounter, Phase
from fastbmm.decomposition import Decomposition, Factor
from fastbmm.pipeline.locks import SubvectorLocks
from fastbmm.pipeline.schemas import SubInstanceIndex


def kronecker_row(matrix: np.ndarray, digits: tuple[int, ...]) -> np.ndarray:
    """Row ``digits`` of ``matrix^{⊗len(digits)}`` without forming the power."""
    row = np.ones(1, dtype=np.uint8)
    for digit in digits:
        row = np.kron(row, matrix[digit])
    return row


def _subvectors(vector: BitVectorTensor, d_host: int) -> np.ndarray:
    return vector.words.reshape(4**d_host, -1)


def _combine(
    vector: BitVectorTensor,
    row: np.ndarray,
    d_host: int,
    operand: Operand,
    out: np.ndarray | None,
    counter: OpCounter | None,
) -> BitVectorTensor:
    parts = _subvectors(vector, d_host)
    if out is None:
        out = np.empty(parts.shape[1], dtype=WORD_DTYPE)
    selected = np.flatnonzero(row)
    if selected.size == 0:
        out[:] = 0
    else:
        out[:] = parts[selected[0]]
        for index in selected[1:]:
            np.bitwise_xor(out, parts[index], out=out)
        if counter is not None:
            counter.add_xors((selected.size - 1) * parts.shape[1], Phase.HOST)
    return BitVectorTensor.interleaved(vector.depth - d_host, operand, out)


def generate_left(
    a_hat: BitVectorTensor,
    h: SubInstanceIndex,
    decomposition: Decomposition,
    out: np.ndarray | None = None,
    counter: OpCounter | None = None,
) -> BitVectorTensor:
    """
    Left operand ``T̂^{[h]}`` of one sub-instance.

    XORs exactly the subvectors of ``â`` whose α-product for ``h`` is 1;
    subvectors with a zero coefficient are never read.

    Args:
        a_hat: Left operand in the alternative basis at full depth.
        h: The sub-instance; its depth is the host depth.
        out: Optional destination of the sub-instance's word length.
    """
    a_hat.expect(Operand.LEFT)
    row = kronecker_row(decomposition.matrix(Factor.ALPHA), h.h)
    return _combine(a_hat, row, h.depth, Operand.LEFT, out, counter)


def generate_right(
    b_hat: BitVectorTensor,
    h: SubInstanceIndex,
    decomposition: Decomposition,
    out: np.ndarray | None = None,
    counter: OpCounter | None = None,
) -> BitVectorTensor:
    """Right operand ``Ŝ^{[h]}``, selected by the β-product of ``h``."""
    b_hat.expect(Operand.RIGHT)
    row = kronecker_row(decomposition.matrix(Factor.BETA), h.h)
    return _combine(b_hat, row, h.depth, Operand.RIGHT, out, counter)


def add_to_subvector(
    parts: np.ndarray, index: int, q: np.ndarray, locks: SubvectorLocks
) -> None:
    """
    XOR ``q`` into subvector ``index`` of ``parts``.

    Raises:
        GuardViolation: Unless the caller holds the subvector's lock.
    """
    locks.require(index)
    np.bitwise_xor(parts[index], q, out=parts[index])


def aggregate(
    c_hat: BitVectorTensor,
    h: SubInstanceIndex,
    q: np.ndarray,
    decomposition: Decomposition,
    locks: SubvectorLocks,
    counter: OpCounter | None = None,
) -> None:
    """
    Add the solved sub-instance ``q`` into every ``Ĉ`` subvector whose
    γ-product with ``h`` is 1, each under its own lock.
    """
    c_hat.expect(Operand.RESULT)
    column = kronecker_row(decomposition.matrix(Factor.GAMMA).T, h.h)
    parts = _subvectors(c_hat, h.depth)
    selected = np.flatnonzero(column)
    for index in selected:
        with locks.guard(int(index)):
            add_to_subvector(parts, int(index), q, locks)
    if counter is not None:
        counter.add_xors(selected.size * parts.shape[1], Phase.HOST)
