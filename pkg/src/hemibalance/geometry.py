"""Primitive operations on points of the N-sphere.

Points of S^N are unit vectors in R^(N+1), kept as float64 numpy arrays.
The module provides uniform sampling, antipodes, the generalized cross
product (hyperplane normal through N points and the origin), floating
side predicates, and an exact integer determinant-sign kernel.
"""

from __future__ import annotations

import enum
from itertools import combinations
from functools import lru_cache
from typing import Sequence

import numpy as np

UNIT_NORM_TOL = 1e-12
DEGENERACY_RTOL = 1e-12
MIN_GAUSSIAN_NORM = 1e-6
_MAX_REJECTIONS = 100


class DegenerateSubsetError(ValueError):
    """The given points span a subspace of dimension below N."""


class Side(enum.Enum):
    POSITIVE = 1
    ON_CIRCLE = 0
    NEGATIVE = -1


def check_sphere_point(x: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Validate a unit vector; returns it as a float64 array."""
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise ValueError(f"sphere point must be a vector of length >= 2, got shape {v.shape}")
    if dim is not None and v.size != dim + 1:
        raise ValueError(f"expected a point of S^{dim} (length {dim + 1}), got length {v.size}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise ValueError(f"not a unit vector: |norm - 1| = {abs(norm - 1.0):.3e}")
    return v


def sample_uniform_point(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Draw one point uniformly from S^dim.

    Standard rotation-invariant method: dim+1 independent standard
    normals, normalized.  Draws with norm below 1e-6 are rejected.
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    for _ in range(_MAX_REJECTIONS):
        v = rng.standard_normal(dim + 1)
        norm = float(np.linalg.norm(v))
        if norm >= MIN_GAUSSIAN_NORM:
            return v / norm
    raise RuntimeError("rejection sampling failed 100 times; broken random stream?")


def antipode(x: np.ndarray) -> np.ndarray:
    return -np.asarray(x, dtype=float)


@lru_cache(maxsize=64)
def _column_drop_index(width: int) -> np.ndarray:
    # row k lists all columns except k, so rows[:, :, idx] stacks the minors
    return np.array([[j for j in range(width) if j != k] for k in range(width)])


@lru_cache(maxsize=64)
def _cofactor_signs(width: int) -> np.ndarray:
    # sign of the cofactor for the appended last row, column k (0-based)
    n = width - 1
    return np.array([(-1.0) ** (n + k) for k in range(width)])


def _det_stack(m: np.ndarray) -> np.ndarray:
    """Determinants of a (..., k, k) stack; small k handled inline."""
    k = m.shape[-1]
    if k == 1:
        return m[..., 0, 0]
    if k == 2:
        return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
    if k == 3:
        return (
            m[..., 0, 0] * (m[..., 1, 1] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 1])
            - m[..., 0, 1] * (m[..., 1, 0] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 0])
            + m[..., 0, 2] * (m[..., 1, 0] * m[..., 2, 1] - m[..., 1, 1] * m[..., 2, 0])
        )
    return np.linalg.det(m)


def cofactor_normals(rows: np.ndarray) -> np.ndarray:
    """Generalized cross product for a stack of row sets.

    ``rows`` has shape (..., N, N+1); the result (..., N+1) is orthogonal
    to every row, oriented so that appending it as a last row gives a
    positive determinant.  Not normalized: the Euclidean norm equals the
    N-volume spanned by the rows.
    """
    rows = np.asarray(rows, dtype=float)
    width = rows.shape[-1]
    if rows.shape[-2] != width - 1:
        raise ValueError(f"need N rows of length N+1, got shape {rows.shape[-2:]}")
    minors = _det_stack(np.moveaxis(rows[..., :, _column_drop_index(width)], -2, -3))
    return minors * _cofactor_signs(width)


def hyperplane_normal(points: Sequence[np.ndarray]) -> np.ndarray:
    """Unit normal of the hyperplane through N points of S^N and the origin.

    Raises DegenerateSubsetError when the points span fewer than N
    dimensions (cofactor norm at or below 1e-12 relative to the Hadamard
    bound of the rows).
    """
    rows = np.asarray(points, dtype=float)
    if rows.ndim != 2 or rows.shape[0] != rows.shape[1] - 1:
        raise ValueError(f"need exactly N points in R^(N+1), got shape {rows.shape}")
    normal = cofactor_normals(rows)
    norm = float(np.linalg.norm(normal))
    hadamard = float(np.prod(np.linalg.norm(rows, axis=1)))
    if norm <= DEGENERACY_RTOL * hadamard:
        raise DegenerateSubsetError(
            f"points span a subspace of dimension < {rows.shape[0]} "
            f"(volume {norm:.3e} vs Hadamard bound {hadamard:.3e})"
        )
    return normal / norm


def side_of(pole: np.ndarray, x: np.ndarray, tol: float = 1e-9) -> Side:
    """Classify x against the great circle with the given pole."""
    pole = np.asarray(pole, dtype=float)
    x = np.asarray(x, dtype=float)
    if pole.shape != x.shape:
        raise ValueError(f"dimension mismatch: pole {pole.shape} vs point {x.shape}")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    d = float(np.dot(pole, x))
    if d > tol:
        return Side.POSITIVE
    if d < -tol:
        return Side.NEGATIVE
    return Side.ON_CIRCLE


def exact_det_sign(rows: Sequence[Sequence[int]]) -> int:
    """Exact sign of an integer determinant via fraction-free elimination.

    Arbitrary-precision: entries may be any Python ints.  Returns +1, 0,
    or -1; no rounding anywhere (Bareiss algorithm, exact divisions only).
    """
    m = [[int(e) for e in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        raise ValueError("matrix must be non-empty")
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    last = m[n - 1][n - 1]
    return sign * (last > 0) - sign * (last < 0)


@lru_cache(maxsize=256)
def subset_table(n: int, k: int) -> np.ndarray:
    """All k-subsets of range(n) in lexicographic order, as an (S, k) array."""
    return np.array(list(combinations(range(n), k)), dtype=np.intp).reshape(-1, k)


@lru_cache(maxsize=256)
def complement_table(n: int, k: int) -> np.ndarray:
    """Complements of subset_table(n, k) rows, each sorted increasing."""
    subsets = subset_table(n, k)
    mask = np.ones((subsets.shape[0], n), dtype=bool)
    np.put_along_axis(mask, subsets, False, axis=1)
    return np.nonzero(mask)[1].reshape(-1, n - k)
