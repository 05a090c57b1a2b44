"""Monte Carlo estimation of the equator-balance probability.

Trials are organized in fixed-size batches, each driven by its own
counter-based Philox stream keyed by (seed, batch index).  A batch's
success count therefore depends only on the seed and its index, never
on which process ran it, so splitting the batch range across workers
(or not) yields bit-identical totals.  Within a batch everything is
vectorized across trials, with early exit as soon as a trial's verdict
is decided.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import (
    DEGENERACY_RTOL,
    MIN_GAUSSIAN_NORM,
    cofactor_normals,
    complement_table,
    subset_table,
)
from .hemisphere import (
    DEFAULT_TOL,
    Configuration,
    GeneralPositionViolation,
    RetriesExhaustedError,
    is_equator_balanced,
)

BATCH_SIZE = 8192
_MAX_RESAMPLE_ROUNDS = 100
_MASK64 = (1 << 64) - 1

_PENDING, _BALANCED, _UNBALANCED, _RESAMPLE = 0, 1, 2, 3


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Outcome of an estimation run.

    inv_p_hat and precision_3sigma are None when no trial succeeded.
    precision_3sigma = 3 * trials / successes^1.5 is the half-width of
    the three-sigma confidence interval for 1/p propagated from the
    binomial error on the success count.
    """

    dim: int
    n: int
    trials: int
    successes: int
    p_hat: float
    sigma_p: float
    inv_p_hat: Optional[float]
    precision_3sigma: Optional[float]
    seed: int
    elapsed_seconds: float


def precision_check(trials: int, successes: int) -> float:
    """Three-sigma half-width for 1/p implied by a success count."""
    if successes <= 0:
        raise ValueError("precision is undefined without at least one success")
    if trials < successes:
        raise ValueError(f"successes {successes} exceed trials {trials}")
    return 3.0 * trials / successes**1.5


def _draw_configs(rng: np.random.Generator, count: int, dim: int, n: int) -> np.ndarray:
    """count normalized configurations of n points on S^dim.

    Gaussian rows with norm below the safe threshold are redrawn in
    row-major order, so the consumed stream is a pure function of the
    generator state.
    """
    x = rng.standard_normal((count, n, dim + 1))
    norms = np.linalg.norm(x, axis=2)
    while True:
        bad = np.nonzero(norms < MIN_GAUSSIAN_NORM)
        if bad[0].size == 0:
            break
        fresh = rng.standard_normal((bad[0].size, dim + 1))
        x[bad] = fresh
        norms[bad] = np.linalg.norm(fresh, axis=1)
    return x / norms[..., None]


def _evaluate_batch(points: np.ndarray, dim: int, n: int, tol: float) -> np.ndarray:
    """Verdict per configuration: balanced, unbalanced, or resample.

    Mirrors the scalar balance check exactly: subsets in lexicographic
    order, degenerate subsets skipped, and each trial decided at its
    first offending subset, with an on-circle point taking precedence
    over an imbalance (those trials must be resampled, not counted).
    """
    count = points.shape[0]
    status = np.full(count, _PENDING, dtype=np.int8)
    if n <= dim + 1:
        status[:] = _BALANCED
        return status
    subsets = subset_table(n, dim)
    comp = complement_table(n, dim)
    rest_width = comp.shape[1]
    active = np.arange(count)
    for j in range(subsets.shape[0]):
        rows = points[active[:, None], subsets[j][None, :], :]
        normals = cofactor_normals(rows)
        norms = np.linalg.norm(normals, axis=1)
        degenerate = norms <= DEGENERACY_RTOL
        rest = np.einsum("aj,akj->ak", normals, points[active[:, None], comp[j][None, :], :])
        thr = (tol * norms)[:, None]
        pos = np.count_nonzero(rest > thr, axis=1)
        neg = np.count_nonzero(rest < -thr, axis=1)
        onc = rest_width - pos - neg
        needs_resample = ~degenerate & (onc > 0)
        unbalanced = ~degenerate & (onc == 0) & (np.abs(pos - neg) >= 2)
        if needs_resample.any():
            status[active[needs_resample]] = _RESAMPLE
        if unbalanced.any():
            status[active[unbalanced]] = _UNBALANCED
        active = active[~(needs_resample | unbalanced)]
        if active.size == 0:
            break
    status[active] = _BALANCED
    return status


def _batch_successes(dim: int, n: int, seed: int, batch_index: int, size: int, tol: float) -> int:
    """Balanced-trial count for one batch, reproducible from (seed, index)."""
    rng = np.random.Generator(np.random.Philox(key=[seed & _MASK64, batch_index]))
    successes = 0
    todo = size
    for _ in range(_MAX_RESAMPLE_ROUNDS):
        x = _draw_configs(rng, todo, dim, n)
        status = _evaluate_batch(x, dim, n, tol)
        successes += int(np.count_nonzero(status == _BALANCED))
        todo = int(np.count_nonzero(status == _RESAMPLE))
        if todo == 0:
            return successes
    raise RetriesExhaustedError(
        f"trials kept hitting degeneracies after {_MAX_RESAMPLE_ROUNDS} resample rounds"
    )


def _run_batch_range(args) -> int:
    """Worker entry: sum of batch successes for a contiguous index range."""
    dim, n, seed, start, stop, trials, tol = args
    total = 0
    for b in range(start, stop):
        size = min(BATCH_SIZE, trials - b * BATCH_SIZE)
        total += _batch_successes(dim, n, seed, b, size, tol)
    return total


def trial(dim: int, n: int, rng: np.random.Generator, tol: float = DEFAULT_TOL,
          max_retries: int = 100) -> bool:
    """Single balance trial on a fresh uniform configuration.

    Configurations violating general position are resampled rather than
    counted either way.
    """
    for _ in range(max_retries):
        pts = _draw_configs(rng, 1, dim, n)[0]
        try:
            return is_equator_balanced(Configuration(dim, pts), tol).balanced
        except GeneralPositionViolation:
            continue
    raise RetriesExhaustedError(f"no usable configuration in {max_retries} attempts")


def estimate(dim: int, n: int, trials: int, seed: int = 0, workers: int = 1,
             tol: float = DEFAULT_TOL) -> MonteCarloEstimate:
    """Estimate the probability that n uniform points on S^dim are balanced.

    The success total is a pure function of (dim, n, trials, seed, tol);
    the workers argument only distributes whole batches across processes.
    """
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    if n < 1:
        raise ValueError(f"point count must be >= 1, got {n}")
    if trials < 1:
        raise ValueError(f"trial count must be >= 1, got {trials}")
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    if seed < 0:
        raise ValueError(f"seed must be >= 0, got {seed}")

    start = time.perf_counter()
    n_batches = -(-trials // BATCH_SIZE)
    if workers == 1:
        successes = _run_batch_range((dim, n, seed, 0, n_batches, trials, tol))
    else:
        bounds = np.linspace(0, n_batches, workers + 1).astype(int)
        jobs = [
            (dim, n, seed, int(a), int(b), trials, tol)
            for a, b in zip(bounds[:-1], bounds[1:])
            if b > a
        ]
        with multiprocessing.Pool(processes=len(jobs)) as pool:
            successes = sum(pool.map(_run_batch_range, jobs))
    elapsed = time.perf_counter() - start

    p_hat = successes / trials
    sigma_p = float(np.sqrt(p_hat * (1.0 - p_hat) / trials))
    return MonteCarloEstimate(
        dim=dim,
        n=n,
        trials=trials,
        successes=successes,
        p_hat=p_hat,
        sigma_p=sigma_p,
        inv_p_hat=trials / successes if successes else None,
        precision_3sigma=precision_check(trials, successes) if successes else None,
        seed=seed,
        elapsed_seconds=elapsed,
    )
