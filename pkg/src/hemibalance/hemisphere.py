"""Closed-hemisphere maxima, equator balance, and open hemispheres.

A configuration of n points on S^N always admits a closed hemisphere
holding at least floor((n+N+1)/2) of them; the maximum is attained on a
hemisphere whose boundary great circle passes through N of the points,
so the exact search enumerates N-subsets.  A configuration is
equator-balanced when every such great circle splits the remaining
points as evenly as possible; exactly then the guaranteed bound is not
exceeded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import (
    DEGENERACY_RTOL,
    UNIT_NORM_TOL,
    cofactor_normals,
    complement_table,
    sample_uniform_point,
    subset_table,
)

DEFAULT_TOL = 1e-9
_CHUNK = 128
_RANK_RTOL = 1e-9


class GeneralPositionViolation(ValueError):
    """Some point lies on the great circle through an N-subset.

    The balance dichotomy (each remaining point falls in exactly one open
    hemisphere) does not apply to such configurations.
    """

    def __init__(self, subset: tuple[int, ...], on_circle: tuple[int, ...]):
        self.subset = subset
        self.on_circle = on_circle
        super().__init__(
            f"point(s) {list(on_circle)} lie on the great circle through subset {list(subset)}"
        )


class RetriesExhaustedError(RuntimeError):
    """Rejection sampling gave up; the tolerance is too large for the input."""


@dataclass(frozen=True)
class Configuration:
    """An ordered list of n points on S^dim, stored as an (n, dim+1) array."""

    dim: int
    points: np.ndarray
    label: Optional[str] = None

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if self.dim < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dim}")
        if pts.ndim != 2 or pts.shape[0] < 1:
            raise ValueError(f"points must be a non-empty (n, dim+1) array, got shape {pts.shape}")
        if pts.shape[1] != self.dim + 1:
            raise ValueError(
                f"points of S^{self.dim} need {self.dim + 1} coordinates, got {pts.shape[1]}"
            )
        norms = np.linalg.norm(pts, axis=1)
        worst = float(np.max(np.abs(norms - 1.0)))
        if worst > UNIT_NORM_TOL:
            raise ValueError(f"points must be unit vectors: worst |norm - 1| = {worst:.3e}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @classmethod
    def from_points(cls, points, label: Optional[str] = None) -> "Configuration":
        pts = np.asarray(points, dtype=float)
        return cls(dim=pts.shape[1] - 1, points=pts, label=label)


@dataclass(frozen=True)
class SideCount:
    positive: int
    negative: int
    on_circle: int

    @property
    def imbalance(self) -> int:
        return abs(self.positive - self.negative)


@dataclass(frozen=True)
class HemisphereReport:
    max_count: int
    witness_pole: np.ndarray
    witness_subset: tuple[int, ...]
    degenerate_subsets: int
    per_subset: Optional[list[tuple[tuple[int, ...], SideCount]]] = field(default=None)


@dataclass(frozen=True)
class BalanceVerdict:
    balanced: bool
    vacuous: bool
    violation: Optional[tuple[tuple[int, ...], SideCount]] = None


@dataclass(frozen=True)
class OpenReport:
    pole: np.ndarray
    count: int


def closed_bound(dim: int, n: int) -> int:
    """Guaranteed closed-hemisphere occupancy for n points on S^dim.

    All n points fit when n <= dim (they lie on a common great circle);
    otherwise floor((n+dim+1)/2).  The two regimes agree at n == dim.
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if n < 0:
        raise ValueError(f"point count must be >= 0, got {n}")
    if n <= dim:
        return n
    return (n + dim + 1) // 2


def _subset_sides(points: np.ndarray, subsets: np.ndarray, comp: np.ndarray, tol: float):
    """Side tallies of the complement points for each subset row.

    Returns (normals, norms, degenerate, pos, neg, onc); counts are valid
    only where ``degenerate`` is False.  Points are unit vectors, so the
    Hadamard bound for the degeneracy gate is 1.
    """
    normals = cofactor_normals(points[subsets])
    norms = np.linalg.norm(normals, axis=1)
    degenerate = norms <= DEGENERACY_RTOL
    rest = np.take_along_axis(normals @ points.T, comp, axis=1)
    thr = (tol * norms)[:, None]
    pos = np.count_nonzero(rest > thr, axis=1)
    neg = np.count_nonzero(rest < -thr, axis=1)
    onc = comp.shape[1] - pos - neg
    return normals, norms, degenerate, pos, neg, onc


def _span_pole(points: np.ndarray) -> Optional[np.ndarray]:
    """Unit vector orthogonal to all points, or None if they span R^(N+1)."""
    n, width = points.shape
    _, s, vt = np.linalg.svd(points)
    if n >= width and s[width - 1] > _RANK_RTOL * s[0]:
        return None
    pole = vt[-1]
    anchor = int(np.argmax(np.abs(pole)))
    if pole[anchor] < 0:
        pole = -pole
    return pole


def max_closed_hemisphere(
    c: Configuration, tol: float = DEFAULT_TOL, collect_per_subset: bool = False
) -> HemisphereReport:
    """Exact maximum closed-hemisphere occupancy with a witness.

    Enumerates the great circles through each N-subset of the points
    (lexicographic index order); the closed-hemisphere maximum is always
    attained on one of them.  Candidate count per subset: the N boundary
    points, plus further points on the circle, plus the larger open side.
    Configurations spanning at most N dimensions lie on a single great
    circle, so all n points count and no enumeration is needed.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    points, n, dim = c.points, c.n, c.dim
    if n <= dim:
        pole = _span_pole(points)
        assert pole is not None
        return HemisphereReport(n, pole, (), 0, [] if collect_per_subset else None)
    pole = _span_pole(points)
    if pole is not None:
        return HemisphereReport(n, pole, (), 0, [] if collect_per_subset else None)

    subsets = subset_table(n, dim)
    comp = complement_table(n, dim)
    normals, norms, degenerate, pos, neg, onc = _subset_sides(points, subsets, comp, tol)
    candidates = np.where(degenerate, -1, dim + onc + np.maximum(pos, neg))
    best = int(np.argmax(candidates))  # first lexicographic maximum
    assert candidates[best] >= 0, "full-rank configuration with no usable subset"

    witness = normals[best] / norms[best]
    if neg[best] > pos[best]:
        witness = -witness
    elif neg[best] == pos[best] and witness[-1] < 0:
        witness = -witness

    per_subset = None
    if collect_per_subset:
        per_subset = [
            (tuple(int(i) for i in subsets[s]), SideCount(int(pos[s]), int(neg[s]), int(onc[s])))
            for s in range(subsets.shape[0])
            if not degenerate[s]
        ]
    return HemisphereReport(
        max_count=int(candidates[best]),
        witness_pole=witness,
        witness_subset=tuple(int(i) for i in subsets[best]),
        degenerate_subsets=int(np.count_nonzero(degenerate)),
        per_subset=per_subset,
    )


def is_equator_balanced(c: Configuration, tol: float = DEFAULT_TOL) -> BalanceVerdict:
    """Check whether every subset great circle halves the remaining points.

    Vacuously true for n <= N+1.  Subsets are scanned in lexicographic
    order with early exit; degenerate subsets are skipped.  A remaining
    point on a subset's great circle (at the given tolerance) raises
    GeneralPositionViolation instead of guessing a side.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    points, n, dim = c.points, c.n, c.dim
    vacuous = n <= dim + 1
    if n <= dim:
        return BalanceVerdict(balanced=True, vacuous=True)

    subsets = subset_table(n, dim)
    comp = complement_table(n, dim)
    for start in range(0, subsets.shape[0], _CHUNK):
        sub = subsets[start : start + _CHUNK]
        com = comp[start : start + _CHUNK]
        _, _, degenerate, pos, neg, onc = _subset_sides(points, sub, com, tol)
        offending = ~degenerate & ((onc > 0) | (np.abs(pos - neg) >= 2))
        if not offending.any():
            continue
        k = int(np.argmax(offending))
        subset = tuple(int(i) for i in sub[k])
        count = SideCount(int(pos[k]), int(neg[k]), int(onc[k]))
        if count.on_circle > 0:
            normal = cofactor_normals(points[list(subset)])
            rest = points[com[k]] @ normal
            hits = tuple(int(com[k][j]) for j in np.nonzero(np.abs(rest) <= tol * np.linalg.norm(normal))[0])
            raise GeneralPositionViolation(subset, hits)
        return BalanceVerdict(balanced=False, vacuous=vacuous, violation=(subset, count))
    return BalanceVerdict(balanced=True, vacuous=vacuous)


def find_avoiding_pole(
    c: Configuration,
    rng: np.random.Generator,
    tol: float = DEFAULT_TOL,
    max_retries: int = 1000,
) -> np.ndarray:
    """A pole whose great circle clears every point by more than tol.

    Rejection sampling of uniform poles; almost every draw works since
    the failing poles form a finite union of great circles (measure zero).
    """
    for _ in range(max_retries):
        pole = sample_uniform_point(c.dim, rng)
        if float(np.min(np.abs(c.points @ pole))) > tol:
            return pole
    raise RetriesExhaustedError(
        f"no avoiding pole after {max_retries} draws (tol={tol:g} too large for n={c.n})"
    )


def best_open_hemisphere(
    c: Configuration,
    rng: np.random.Generator,
    tol: float = DEFAULT_TOL,
    max_retries: int = 1000,
) -> OpenReport:
    """An open hemisphere holding at least floor((n+1)/2) of the points.

    Takes a great circle avoiding all points; one of its two open
    hemispheres holds at least half, rounded up.
    """
    pole = find_avoiding_pole(c, rng, tol=tol, max_retries=max_retries)
    dots = c.points @ pole
    positive = int(np.count_nonzero(dots > tol))
    negative = c.n - positive
    if negative > positive:
        return OpenReport(pole=-pole, count=negative)
    return OpenReport(pole=pole, count=positive)
