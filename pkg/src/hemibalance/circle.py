"""Circle (N=1) machinery: diameter sweeps, balance tests, flip enumeration.

On the circle every great circle is a diameter, which makes exact
reasoning cheap: rotating a diameter half a turn past n generic points
produces a sequence of n+1 semicircle counts whose successive entries
differ by one, and balance is a containment condition on that sequence.
Replacing points by their antipodes never moves the crossing events,
only their directions, so the balanced outcomes among all 2^n flip
combinations can be counted by direct enumeration.  The closed forms
for the balance probability live here too.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

GENERIC_TOL = 1e-12
FLIP_BUDGET = 24
_CHUNK_BITS = 18


class NonGenericError(ValueError):
    """Duplicate or antipodal angles (at tolerance); the sweep is ill-defined."""


class BudgetExceededError(ValueError):
    """Flip enumeration over 2^n combinations refused for n beyond the cap."""


def exact_probability(dim: int, n: int) -> Optional[Fraction]:
    """Closed-form probability that n uniform points on S^dim are balanced.

    Known cases: 1 for n <= dim+1 (nothing to cut unevenly), 2^-(dim+1)
    for n == dim+2, and on the circle 4^-k for n = 1+2k and 2^-k for
    n = 2+2k.  Returns None where no closed form is known.
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if n < 1:
        raise ValueError(f"point count must be >= 1, got {n}")
    if n <= dim + 1:
        return Fraction(1)
    if n == dim + 2:
        return Fraction(1, 2 ** (dim + 1))
    if dim == 1:
        if n % 2:
            return Fraction(1, 4 ** ((n - 1) // 2))
        return Fraction(1, 2 ** ((n - 2) // 2))
    return None


def _sweep_events(angles: Sequence[float]):
    """Crossing events for a diameter rotating from angle 0 through pi.

    Returns (positions, steps, initial) where positions are the event
    angles in (0, pi) sorted ascending, steps the +-1 count changes, and
    initial the number of points in the starting open semicircle of
    angles in (0, pi).  Raises NonGenericError on duplicate or antipodal
    points.  A point sitting on the starting diameter is handled by
    rotating the whole configuration by half the minimal event gap.
    """
    a = np.asarray(angles, dtype=float)
    if a.ndim != 1 or a.size < 1:
        raise ValueError("need a non-empty list of angles")
    a = np.mod(a, 2.0 * np.pi)

    for _ in range(2):
        events = np.mod(a, np.pi)
        order = np.argsort(events, kind="stable")
        sorted_events = events[order]
        gaps = np.diff(sorted_events)
        wrap = sorted_events[0] + np.pi - sorted_events[-1]
        if a.size > 1 and (np.min(gaps, initial=np.inf) <= GENERIC_TOL or wrap <= GENERIC_TOL):
            raise NonGenericError("two angles coincide or are antipodal at tolerance 1e-12")
        on_boundary = sorted_events[0] <= GENERIC_TOL or np.pi - sorted_events[-1] <= GENERIC_TOL
        if not on_boundary:
            inside = (a > 0) & (a < np.pi)
            steps = np.where(inside, -1, 1).astype(np.int8)
            return sorted_events, steps[order], int(np.count_nonzero(inside))
        # rotate away from the starting diameter and retry once
        min_gap = float(np.min(gaps, initial=np.pi)) if a.size > 1 else np.pi
        min_gap = min(min_gap, float(wrap)) if a.size > 1 else min_gap
        a = np.mod(a + 0.5 * min_gap, 2.0 * np.pi)
    raise NonGenericError("a point stays on the starting diameter even after rotation")


def sweep_sequence(angles: Sequence[float]) -> list[int]:
    """Semicircle occupancy counts as a diameter rotates half a turn.

    n crossing events give n+1 counts; consecutive entries differ by
    exactly one and the first and last add up to n.
    """
    _, steps, initial = _sweep_events(angles)
    walk = initial + np.cumsum(steps, dtype=np.int64)
    return [initial] + [int(v) for v in walk]


def _allowed_range(n: int) -> tuple[int, int]:
    if n % 2:
        k = (n - 1) // 2
        return k, k + 1
    k = (n - 2) // 2
    return k, k + 2


def is_balanced_circle(angles: Sequence[float]) -> bool:
    """True iff every diameter through one point halves the remaining ones.

    Equivalent sweep criterion: for n = 1+2k the count sequence stays in
    {k, k+1}; for n = 2+2k it stays in {k, k+1, k+2}.
    """
    seq = sweep_sequence(angles)
    lo, hi = _allowed_range(len(angles))
    return min(seq) >= lo and max(seq) <= hi


def flip_enumeration_count(angles: Sequence[float]) -> int:
    """Number of balanced outcomes among all 2^n antipodal-flip combinations.

    Flipping a point keeps its crossing event in place and toggles the
    direction, so each combination is a choice of +-1 step per event.
    The count is independent of the starting configuration: 2 for odd n,
    2^(k+2) for n = 2+2k.  Enumeration is exhaustive and refuses n > 24.
    """
    a = np.asarray(angles, dtype=float)
    n = int(a.size)
    if n > FLIP_BUDGET:
        raise BudgetExceededError(f"2^{n} flip combinations exceed the n <= {FLIP_BUDGET} cap")
    _, base_steps, _ = _sweep_events(a)
    lo, hi = _allowed_range(n)

    shifts = np.arange(n, dtype=np.uint32)
    total = 0
    chunk = 1 << _CHUNK_BITS
    for start in range(0, 1 << n, chunk):
        ids = np.arange(start, min(start + chunk, 1 << n), dtype=np.uint32)
        bits = ((ids[:, None] >> shifts) & 1).astype(np.int8)
        steps = base_steps * (1 - 2 * bits)
        initial = np.count_nonzero(steps == -1, axis=1).astype(np.int16)
        walk = np.cumsum(steps, axis=1, dtype=np.int16) + initial[:, None]
        low = np.minimum(walk.min(axis=1), initial)
        high = np.maximum(walk.max(axis=1), initial)
        total += int(np.count_nonzero((low >= lo) & (high <= hi)))
    return total


def angles_of_configuration(points: np.ndarray) -> np.ndarray:
    """Angles in [0, 2pi) of unit vectors in the plane."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"need an (n, 2) array of circle points, got shape {pts.shape}")
    return np.mod(np.arctan2(pts[:, 1], pts[:, 0]), 2.0 * np.pi)


def configuration_of_angles(angles: Sequence[float]) -> np.ndarray:
    """Unit vectors (cos t, sin t) for the given angles."""
    a = np.asarray(angles, dtype=float)
    return np.stack([np.cos(a), np.sin(a)], axis=1)
