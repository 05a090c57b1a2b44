"""Extremal configurations: alternating-sign moment curve sets and antipodal pairs.

The integer vectors (-1)^i * (1, i, i^2, ..., i^N), i = 1..n, normalize
to an equator-balanced set for every n > N: relative to any N-subset the
remaining points alternate sides, because each side test is an alternant
determinant whose sign flips once per index step.  Antipodal pairs are
the sharp inputs for the open-hemisphere bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import exact_det_sign, sample_uniform_point, subset_table, complement_table
from .hemisphere import Configuration


@dataclass(frozen=True)
class ExactConfiguration:
    """Integer generators plus their unit normalizations.

    ``integer_points[i]`` is (-1)^(i+1) * (1, i+1, (i+1)^2, ...) for the
    0-based list index i, i.e. the 1-based point i+1 carries sign
    (-1)^(i+1).  Normalization divides by a positive scalar, so every
    determinant sign computed from the integer rows transfers verbatim
    to the unit points.
    """

    dim: int
    integer_points: tuple[tuple[int, ...], ...]
    normalized: Configuration


def vandermonde_config(dim: int, n: int) -> ExactConfiguration:
    """The alternating moment-curve set of n points on S^dim, n > dim."""
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if n <= dim:
        raise ValueError(f"need more points than the dimension: n={n} <= N={dim}")
    rows = []
    for i in range(1, n + 1):
        sign = -1 if i % 2 else 1
        rows.append(tuple(sign * i**k for k in range(dim + 1)))
    floats = np.array(rows, dtype=float)
    floats /= np.linalg.norm(floats, axis=1, keepdims=True)
    return ExactConfiguration(
        dim=dim,
        integer_points=tuple(rows),
        normalized=Configuration(dim=dim, points=floats, label=f"vandermonde-{dim}-{n}"),
    )


def verify_vandermonde(dim: int, n: int) -> bool:
    """Exact-arithmetic balance certificate for vandermonde_config(dim, n).

    For every N-subset, the remaining points taken in increasing index
    order must have strictly alternating determinant signs (subset rows
    first in index order, test point last).  Alternation implies the two
    sides differ by at most one point, hence equator balance.
    """
    config = vandermonde_config(dim, n)
    rows = config.integer_points
    for subset, rest in zip(subset_table(n, dim), complement_table(n, dim)):
        base = [list(rows[i]) for i in subset]
        previous = 0
        for t in rest:
            sign = exact_det_sign(base + [list(rows[t])])
            if sign == 0 or sign == previous:
                return False
            previous = sign
    return True


def antipodal_config(dim: int, n: int, rng: np.random.Generator) -> Configuration:
    """floor(n/2) random antipodal pairs, plus one loose point when n is odd.

    Pairs are adjacent in the output: point 2k+1 is the negation of
    point 2k.  Any open hemisphere holds at most one point per pair, so
    these sets meet the open-hemisphere bound exactly.
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if n < 1:
        raise ValueError(f"need at least one point, got n={n}")
    points = np.empty((n, dim + 1))
    for k in range(n // 2):
        p = sample_uniform_point(dim, rng)
        points[2 * k] = p
        points[2 * k + 1] = -p
    if n % 2:
        points[n - 1] = sample_uniform_point(dim, rng)
    return Configuration(dim=dim, points=points, label=f"antipodal-{dim}-{n}")
