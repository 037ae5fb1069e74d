"""Kronecker-structured matrix-vector products, one factor at a time."""

from collections.abc import Sequence
from math import prod

import numpy as np

from fastbmm.bitmatrix import BitVectorTensor
from fastbmm.bitmatrix.words import WORD_BITS, WORD_DTYPE
from fastbmm.config import bmm_settings
from fastbmm.counters import OpCounter, Phase
from fastbmm.utils import run_partitioned
from fastbmm.yates.exceptions import ChainError
from fastbmm.yates.schemas import KroneckerChain


def _check_order(chain: KroneckerChain, order: Sequence[int] | None) -> tuple[int, ...]:
    if order is None:
        return tuple(range(chain.depth))
    order = tuple(order)
    if sorted(order) != list(range(chain.depth)):
        raise ChainError(f"Order {order} is not a permutation of 0..{chain.depth - 1}")
    return order


def application_sequence(
    chain: KroneckerChain, order: Sequence[int] | None = None, merge: bool = False
) -> list[tuple[int, ...]]:
    """
    Factor indices in the order they are applied, grouped into passes.

    ``order[-1]`` is applied first and ``order[0]`` last. With ``merge`` set,
    two factors form one pass when they are neighbours, both small, applied
    back to back, and paired up from the innermost factor outward.
    """
    sequence = list(reversed(_check_order(chain, order)))
    pairs: set[frozenset[int]] = set()
    if merge:
        for inner in range(chain.depth - 1, 0, -2):
            pairs.add(frozenset((inner, inner - 1)))

    passes: list[tuple[int, ...]] = []
    position = 0
    while position < len(sequence):
        current = sequence[position]
        if position + 1 < len(sequence):
            following = sequence[position + 1]
            if (
                frozenset((current, following)) in pairs
                and chain.factors[current].mergeable
                and chain.factors[following].mergeable
            ):
                passes.append((current, following))
                position += 2
                continue
        passes.append((current,))
        position += 1
    return passes


def cost(chain: KroneckerChain, order: Sequence[int] | None = None) -> int:
    """
    Word additions of :func:`apply`: ``Σ_ℓ P_ℓ ∏_{k≠ℓ} m_k · trailing/64``.

    ``m_k`` is the input length of factor ``k`` while it is still waiting to
    be applied and its output length afterwards.
    """
    modes = list(chain.input_modes)
    total = 0
    for level in reversed(_check_order(chain, order)):
        others = prod(modes[:level]) * prod(modes[level + 1 :])
        total += chain.factors[level].additions * others
        modes[level] = chain.factors[level].rows
    return total * chain.trailing_words


def _split_axis(pre: int, post: int, workers: int) -> int:
    return 0 if pre >= workers or pre >= post else 2


def _count(
    counter: OpCounter | None, additions: int, register: np.ndarray, phase: Phase
) -> None:
    # One XOR per addition step and word of the register it ran on.
    if counter is not None and additions:
        counter.add_xors(additions * register.size, phase)


def _apply_single(
    chain: KroneckerChain,
    level: int,
    modes: list[int],
    source: np.ndarray,
    target: np.ndarray,
    workers: int,
    counter: OpCounter | None = None,
    phase: Phase = Phase.LINEAR_COMBINATION,
) -> None:
    factor = chain.factors[level]
    pre = prod(modes[:level])
    post = prod(modes[level + 1 :]) * chain.trailing_words
    src = source[: pre * factor.cols * post].reshape(pre, factor.cols, post)
    dst = target[: pre * factor.rows * post].reshape(pre, factor.rows, post)
    axis = _split_axis(pre, post, workers)

    def run(start: int, stop: int) -> None:
        window = slice(start, stop)
        if axis == 0:
            inputs = [src[window, i, :] for i in range(factor.cols)]
            outputs = factor.slp.evaluate(inputs)
            _count(counter, factor.additions, inputs[0], phase)
            for h, value in enumerate(outputs):
                dst[window, h, :] = value
        else:
            inputs = [src[:, i, window] for i in range(factor.cols)]
            outputs = factor.slp.evaluate(inputs)
            _count(counter, factor.additions, inputs[0], phase)
            for h, value in enumerate(outputs):
                dst[:, h, window] = value

    run_partitioned(pre if axis == 0 else post, workers, run)


def _apply_pair(
    chain: KroneckerChain,
    first: int,
    second: int,
    modes: list[int],
    source: np.ndarray,
    target: np.ndarray,
    workers: int,
    counter: OpCounter | None = None,
    phase: Phase = Phase.LINEAR_COMBINATION,
) -> None:
    # Two neighbouring levels in one pass; intermediates never reach a buffer.
    outer_level, inner_level = min(first, second), max(first, second)
    outer, inner = chain.factors[outer_level], chain.factors[inner_level]
    pre = prod(modes[:outer_level])
    post = prod(modes[inner_level + 1 :]) * chain.trailing_words
    src = source[: pre * outer.cols * inner.cols * post].reshape(
        pre, outer.cols, inner.cols, post
    )
    dst = target[: pre * outer.rows * inner.rows * post].reshape(
        pre, outer.rows, inner.rows, post
    )
    axis = _split_axis(pre, post, workers)

    def run(start: int, stop: int) -> None:
        window = slice(start, stop)
        view = src[window] if axis == 0 else src[..., window]
        out = dst[window] if axis == 0 else dst[..., window]
        register = view[:, 0, 0]
        if first == inner_level:
            partial = [
                inner.slp.evaluate([view[:, x, y] for y in range(inner.cols)])
                for x in range(outer.cols)
            ]
            _count(counter, inner.additions * outer.cols, register, phase)
            for z in range(inner.rows):
                values = outer.slp.evaluate([partial[x][z] for x in range(outer.cols)])
                _count(counter, outer.additions, register, phase)
                for w, value in enumerate(values):
                    out[:, w, z] = value
        else:
            partial = [
                outer.slp.evaluate([view[:, x, y] for x in range(outer.cols)])
                for y in range(inner.cols)
            ]
            _count(counter, outer.additions * inner.cols, register, phase)
            for w in range(outer.rows):
                values = inner.slp.evaluate([partial[y][w] for y in range(inner.cols)])
                _count(counter, inner.additions, register, phase)
                for z, value in enumerate(values):
                    out[:, w, z] = value

    run_partitioned(pre if axis == 0 else post, workers, run)


def apply(
    chain: KroneckerChain,
    vector: BitVectorTensor,
    order: Sequence[int] | None = None,
    counter: OpCounter | None = None,
    workers: int = 1,
    phase: Phase = Phase.LINEAR_COMBINATION,
    merge: bool | None = None,
) -> BitVectorTensor:
    """
    Compute ``(factors ⊗ I_trailing) · vector`` with Yates's algorithm.

    Args:
        chain: The Kronecker factors and the trailing identity length.
        vector: Input of ``chain.input_bits`` bits; it is not modified.
        order: Permutation of factor indices; ``order[-1]`` is applied first.
            Defaults to the identity (innermost factor first).
        counter: Optional counter receiving the word XORs under ``phase``.
        workers: Threads sharing each pass.
        merge: Fuse neighbouring small factors; defaults to BMM_LEVEL_MERGING.

    Returns:
        A new untagged vector with modes ``output_modes + (trailing,)``.

    Raises:
        ChainError: On a length mismatch or an invalid order.
    """
    if vector.total_bits != chain.input_bits:
        raise ChainError(
            f"Chain expects {chain.input_bits} input bits, got {vector.total_bits}"
        )
    merge = bmm_settings.LEVEL_MERGING if merge is None else merge
    passes = application_sequence(chain, order, merge)
    output_shape = chain.output_modes + (chain.trailing_identity,)
    if not passes:
        return BitVectorTensor(output_shape, vector.words.copy())

    # Two buffers sized for the longest intermediate alternate between passes.
    modes = list(chain.input_modes)
    longest = 0
    for levels in passes:
        for level in levels:
            modes[level] = chain.factors[level].rows
        longest = max(longest, prod(modes) * chain.trailing_words)
    buffers = (np.empty(longest, WORD_DTYPE), np.empty(longest, WORD_DTYPE))

    modes = list(chain.input_modes)
    source = vector.words
    for index, levels in enumerate(passes):
        target = buffers[index % 2]
        if len(levels) == 1:
            _apply_single(
                chain, levels[0], modes, source, target, workers, counter, phase
            )
        else:
            _apply_pair(
                chain,
                levels[0],
                levels[1],
                modes,
                source,
                target,
                workers,
                counter,
                phase,
            )
        for level in levels:
            modes[level] = chain.factors[level].rows
        source = target

    length = prod(chain.output_modes) * chain.trailing_words
    return BitVectorTensor(output_shape, source[:length].copy())


def apply_in_place(
    chain: KroneckerChain,
    words: np.ndarray,
    order: Sequence[int] | None = None,
    counter: OpCounter | None = None,
    workers: int = 1,
    phase: Phase = Phase.BASIS_CHANGE,
) -> None:
    """
    Apply a chain of square, in-place programs directly to ``words``.

    Raises:
        ChainError: If a factor is not square with an in-place program, or the
            storage length does not match.
    """
    for factor in chain.factors:
        if not factor.slp.is_in_place:
            raise ChainError("In-place application needs square in-place programs")
    expected = chain.input_bits // WORD_BITS
    if words.size != expected:
        raise ChainError(f"Chain expects {expected} words, got {words.size}")

    modes = list(chain.input_modes)
    for level in reversed(_check_order(chain, order)):
        factor = chain.factors[level]
        pre = prod(modes[:level])
        post = prod(modes[level + 1 :]) * chain.trailing_words
        grid = words.reshape(pre, factor.cols, post)
        axis = _split_axis(pre, post, workers)

        def run(
            start: int, stop: int, grid: np.ndarray = grid, axis: int = axis
        ) -> None:
            window = slice(start, stop)
            if axis == 0:
                registers = [grid[window, i, :] for i in range(factor.cols)]
            else:
                registers = [grid[:, i, window] for i in range(factor.cols)]
            factor.slp.evaluate_in_place(registers)
            _count(counter, factor.additions, registers[0], phase)

        run_partitioned(pre if axis == 0 else post, workers, run)
