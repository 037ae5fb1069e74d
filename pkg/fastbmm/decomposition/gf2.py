"""Dense GF(2) matrices as 0/1 ``uint8`` arrays."""

from typing import Any

import numpy as np

from fastbmm.decomposition.enums import Axis
from fastbmm.decomposition.exceptions import DecompositionError


def as_gf2(matrix: Any) -> np.ndarray:
    """Copy an array-like into a read-only 2-D 0/1 ``uint8`` array."""
    array = np.array(matrix, dtype=np.int64, copy=True)
    if array.ndim != 2:
        raise DecompositionError(f"Expected a 2-D matrix, got {array.ndim} dimensions")
    result = (array & 1).astype(np.uint8)
    result.setflags(write=False)
    return result


def identity(n: int) -> np.ndarray:
    return as_gf2(np.eye(n, dtype=np.uint8))


def gf2_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DecompositionError(
            f"Cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}"
        )
    return as_gf2(a.astype(np.int64) @ b.astype(np.int64))


def gf2_matvec(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    return ((m.astype(np.int64) @ np.asarray(v, dtype=np.int64)) & 1).astype(np.uint8)


def kronecker(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``(a ⊗ b)[i*p + k, j*q + l] = a[i, j] * b[k, l]`` with ``b`` of shape ``(p, q)``."""
    return as_gf2(np.kron(a, b))


def kronecker_power(m: np.ndarray, power: int) -> np.ndarray:
    result = identity(1)
    for _ in range(power):
        result = kronecker(result, m)
    return result


def is_identity(m: np.ndarray) -> bool:
    return m.shape[0] == m.shape[1] and bool(np.array_equal(m, np.eye(m.shape[0])))


def gf2_inverse(m: np.ndarray) -> np.ndarray | None:
    """
    Gauss-Jordan inverse over GF(2) with first-nonzero pivoting.

    Returns:
        The inverse, or ``None`` when ``m`` is singular.

    Raises:
        DecompositionError: If ``m`` is not square.
    """
    n, cols = m.shape
    if n != cols:
        raise DecompositionError(f"Only square matrices are invertible, got {n}x{cols}")

    work = np.concatenate([m.astype(np.uint8), np.eye(n, dtype=np.uint8)], axis=1)
    for col in range(n):
        candidates = np.flatnonzero(work[col:, col])
        if candidates.size == 0:
            return None
        pivot = col + int(candidates[0])
        if pivot != col:
            work[[col, pivot]] = work[[pivot, col]]
        for row in np.flatnonzero(work[:, col]):
            if row != col:
                work[row] ^= work[col]
    return as_gf2(work[:, n:])


def is_invertible(m: np.ndarray) -> bool:
    return m.shape[0] == m.shape[1] and gf2_inverse(m) is not None


def check_self_inverse(m: np.ndarray) -> bool:
    """True iff ``m · m = I`` over GF(2)."""
    if m.shape[0] != m.shape[1]:
        raise DecompositionError(f"Self-inverse check needs a square matrix, got {m.shape}")
    return is_identity(gf2_matmul(m, m))


def check_mutual_inverse(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape[0] != a.shape[1] or a.shape != b.shape:
        return False
    return is_identity(gf2_matmul(a, b)) and is_identity(gf2_matmul(b, a))


def weight_distribution(m: np.ndarray, axis: Axis) -> list[int]:
    """Ascending popcounts of the rows or columns of ``m``."""
    weights = m.sum(axis=1 if axis is Axis.ROWS else 0)
    return sorted(int(weight) for weight in weights)
