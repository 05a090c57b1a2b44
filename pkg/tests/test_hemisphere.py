"""Hemisphere maxima, equator balance, and open-hemisphere searches."""

import numpy as np
import pytest

from hemibalance.constructions import antipodal_config, vandermonde_config
from hemibalance.hemisphere import (
    Configuration,
    GeneralPositionViolation,
    best_open_hemisphere,
    closed_bound,
    find_avoiding_pole,
    is_equator_balanced,
    max_closed_hemisphere,
)


def random_config(dim, n, rng):
    pts = rng.standard_normal((n, dim + 1))
    pts /= np.linalg.norm(pts, axis=1)[:, None]
    return Configuration(dim, pts)


def random_rotation(d, rng):
    q, r = np.linalg.qr(rng.standard_normal((d, d)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, [0, 1]] = q[:, [1, 0]]
    return q


def recount(points, pole, tol=1e-9):
    return int(np.count_nonzero(points @ pole >= -tol))


def test_closed_bound_values():
    assert closed_bound(2, 1) == 1
    assert closed_bound(2, 2) == 2
    assert closed_bound(2, 6) == 4
    assert closed_bound(1, 5) == 3
    assert closed_bound(3, 7) == 5
    assert closed_bound(4, 4) == 4


def test_octahedron_report():
    # +-e1, +-e2, +-e3: subset {e1, e2} has both partners on its circle
    pts = np.array(
        [
            [1.0, 0, 0],
            [-1.0, 0, 0],
            [0, 1.0, 0],
            [0, -1.0, 0],
            [0, 0, 1.0],
            [0, 0, -1.0],
        ]
    )
    c = Configuration(2, pts)
    report = max_closed_hemisphere(c)
    assert report.max_count == 5
    assert report.witness_subset == (0, 2)
    assert np.allclose(report.witness_pole, [0, 0, 1])
    assert report.degenerate_subsets == 3
    assert recount(pts, report.witness_pole) == 5
    with pytest.raises(GeneralPositionViolation) as err:
        is_equator_balanced(c)
    assert err.value.subset == (0, 2)
    assert err.value.on_circle == (1, 3)


def test_low_dimensional_span_branch():
    # four points on the z = 0 equator of S^2: every subset circle is that
    # same equator, and the whole set fits one closed hemisphere
    ang = np.array([0.3, 1.4, 2.9, 4.4])
    pts = np.stack([np.cos(ang), np.sin(ang), np.zeros(4)], axis=1)
    report = max_closed_hemisphere(Configuration(2, pts))
    assert report.max_count == 4
    assert report.witness_subset == ()
    assert recount(pts, report.witness_pole) == 4


def test_bound_and_balance_equivalence():
    rng = np.random.default_rng(10)
    for _ in range(250):
        dim = int(rng.integers(1, 5))
        n = int(rng.integers(dim, dim + 7))
        c = random_config(dim, n, rng)
        bound = closed_bound(dim, n)
        report = max_closed_hemisphere(c)
        assert report.max_count >= bound
        verdict = is_equator_balanced(c)
        assert verdict.balanced == (report.max_count == bound)


def test_rotation_invariance():
    rng = np.random.default_rng(11)
    for dim in (1, 2, 3):
        q = random_rotation(dim + 1, rng)
        for _ in range(30):
            n = int(rng.integers(dim + 1, dim + 6))
            c = random_config(dim, n, rng)
            rotated = Configuration(dim, c.points @ q.T)
            assert max_closed_hemisphere(rotated).max_count == max_closed_hemisphere(c).max_count
            assert is_equator_balanced(rotated).balanced == is_equator_balanced(c).balanced


def test_permutation_invariance():
    rng = np.random.default_rng(12)
    for _ in range(50):
        dim = int(rng.integers(1, 4))
        n = int(rng.integers(dim + 1, dim + 6))
        c = random_config(dim, n, rng)
        perm = rng.permutation(n)
        shuffled = Configuration(dim, c.points[perm])
        assert max_closed_hemisphere(shuffled).max_count == max_closed_hemisphere(c).max_count
        assert is_equator_balanced(shuffled).balanced == is_equator_balanced(c).balanced


def test_witness_soundness():
    rng = np.random.default_rng(13)
    for _ in range(100):
        dim = int(rng.integers(1, 5))
        n = int(rng.integers(dim + 1, dim + 7))
        c = random_config(dim, n, rng)
        report = max_closed_hemisphere(c)
        assert recount(c.points, report.witness_pole) == report.max_count


def test_randomized_pole_domination():
    # no uniformly random pole may beat the subset-circle maximum
    rng = np.random.default_rng(14)
    for dim, n in ((1, 6), (2, 7), (3, 7)):
        c = random_config(dim, n, rng)
        best = max_closed_hemisphere(c).max_count
        poles = rng.standard_normal((10000, dim + 1))
        poles /= np.linalg.norm(poles, axis=1)[:, None]
        counts = np.count_nonzero(c.points @ poles.T >= -1e-9, axis=0)
        assert int(counts.max()) <= best


def test_open_hemisphere_lower_bound():
    rng = np.random.default_rng(15)
    for dim in (1, 2, 3):
        for n in range(2, 10):
            c = random_config(dim, n, rng)
            report = best_open_hemisphere(c, rng)
            strict = int(np.count_nonzero(c.points @ report.pole > 1e-9))
            assert strict == report.count
            assert report.count >= (n + 1) // 2


def test_open_hemisphere_antipodal_sharpness():
    rng = np.random.default_rng(16)
    for dim in (1, 2, 3):
        for n in range(2, 10):
            c = antipodal_config(dim, n, rng)
            report = best_open_hemisphere(c, rng)
            assert report.count == (n + 1) // 2


def test_find_avoiding_pole():
    rng = np.random.default_rng(17)
    for _ in range(50):
        dim = int(rng.integers(1, 4))
        c = random_config(dim, int(rng.integers(1, 8)), rng)
        pole = find_avoiding_pole(c, rng)
        assert np.min(np.abs(c.points @ pole)) > 1e-9


def test_vacuous_balance():
    rng = np.random.default_rng(18)
    for dim in (1, 2, 3):
        for n in range(1, dim + 2):
            verdict = is_equator_balanced(random_config(dim, n, rng))
            assert verdict.balanced and verdict.vacuous


def test_vandermonde_meets_bound_exactly():
    for dim, n in ((1, 4), (2, 6), (3, 7)):
        c = vandermonde_config(dim, n).normalized
        assert max_closed_hemisphere(c).max_count == closed_bound(dim, n)
        assert is_equator_balanced(c).balanced


def test_configuration_validation():
    good = np.eye(3)
    Configuration(2, good)
    with pytest.raises(ValueError):
        Configuration(2, 2.0 * good)
    with pytest.raises(ValueError):
        Configuration(3, good)
    frozen = Configuration(2, good)
    with pytest.raises(ValueError):
        frozen.points[0, 0] = 5.0
