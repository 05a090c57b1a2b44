"""Kernel checks: cofactor normals, exact determinant signs, sampling."""

import numpy as np
import pytest
from scipy import stats

from hemibalance.geometry import (
    DegenerateSubsetError,
    Side,
    antipode,
    check_sphere_point,
    cofactor_normals,
    complement_table,
    exact_det_sign,
    hyperplane_normal,
    sample_uniform_point,
    side_of,
    subset_table,
)


def test_cofactor_normal_orientation():
    # appending the cofactor vector as a last row must give a positive det
    rng = np.random.default_rng(0)
    for _ in range(200):
        dim = int(rng.integers(1, 6))
        rows = rng.standard_normal((dim, dim + 1))
        c = cofactor_normals(rows)
        full = np.vstack([rows, c])
        assert np.linalg.det(full) > 0 or np.linalg.norm(c) < 1e-9


def test_cofactor_normal_is_orthogonal():
    rng = np.random.default_rng(1)
    for _ in range(200):
        dim = int(rng.integers(1, 6))
        rows = rng.standard_normal((dim, dim + 1))
        c = cofactor_normals(rows)
        assert np.max(np.abs(rows @ c)) <= 1e-9 * np.linalg.norm(c) + 1e-13


def test_cofactor_normals_batched():
    rng = np.random.default_rng(2)
    rows = rng.standard_normal((7, 5, 3, 4))
    batch = cofactor_normals(rows)
    assert batch.shape == (7, 5, 4)
    for i in range(7):
        for j in range(5):
            assert np.allclose(batch[i, j], cofactor_normals(rows[i, j]))


def test_exact_sign_antisymmetry():
    rng = np.random.default_rng(3)
    for _ in range(300):
        d = int(rng.integers(2, 7))
        m = rng.integers(-50, 51, size=(d, d))
        i, j = rng.choice(d, size=2, replace=False)
        swapped = m.copy()
        swapped[[i, j]] = swapped[[j, i]]
        assert exact_det_sign(swapped) == -exact_det_sign(m)


def test_exact_sign_matches_float_dets():
    rng = np.random.default_rng(4)
    for _ in range(300):
        d = int(rng.integers(1, 7))
        m = rng.integers(-9, 10, size=(d, d))
        det = round(float(np.linalg.det(m)))
        want = 0 if det == 0 else (1 if det > 0 else -1)
        assert exact_det_sign(m) == want


def test_exact_sign_beyond_float_precision():
    # Hilbert-like near-singular integer matrix whose det sign float loses
    base = [[10**14, 10**14 + 1], [10**14 - 1, 10**14]]
    assert exact_det_sign(base) == 1  # det = 10^28 - (10^28 - 1) = 1
    big = [[10**12, 2 * 10**12, 7], [3, 10**12, -(10**12)], [5, -7, 10**12]]
    n = np.array(big, dtype=float)
    assert exact_det_sign(big) == (1 if np.linalg.det(n) > 0 else -1)


def test_side_of_agrees_with_exact_sign():
    # float side test vs integer determinant sign on scaled-and-rounded input
    rng = np.random.default_rng(5)
    scale = 2**40
    checked = 0
    while checked < 150:
        dim = int(rng.integers(1, 5))
        rows = rng.standard_normal((dim, dim + 1))
        rows /= np.linalg.norm(rows, axis=1)[:, None]
        x = rng.standard_normal(dim + 1)
        x /= np.linalg.norm(x)
        normal = hyperplane_normal(rows)
        clearance = abs(float(normal @ x))
        if clearance <= 1e-6:
            continue
        ints = np.rint(np.vstack([rows, x]) * scale)
        sign = exact_det_sign(ints)
        side = side_of(normal, x)
        assert sign != 0
        assert side is (Side.POSITIVE if sign > 0 else Side.NEGATIVE)
        checked += 1


def test_hyperplane_normal_residual():
    rng = np.random.default_rng(6)
    for _ in range(300):
        dim = int(rng.integers(1, 6))
        rows = rng.standard_normal((dim, dim + 1))
        rows /= np.linalg.norm(rows, axis=1)[:, None]
        try:
            normal = hyperplane_normal(rows)
        except DegenerateSubsetError:
            continue
        assert abs(np.linalg.norm(normal) - 1.0) <= 1e-12
        assert np.max(np.abs(rows @ normal)) <= 1e-10


def test_hyperplane_normal_rejects_degenerate():
    rows = np.array([[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0]])
    with pytest.raises(DegenerateSubsetError):
        hyperplane_normal(rows)


def test_sample_uniform_point_basics():
    rng = np.random.default_rng(7)
    for dim in (1, 2, 3, 5):
        pts = np.array([sample_uniform_point(dim, rng) for _ in range(200)])
        assert pts.shape == (200, dim + 1)
        assert np.max(np.abs(np.linalg.norm(pts, axis=1) - 1.0)) <= 1e-12


def test_sample_rotation_invariance_ks():
    # distribution of <R x, e1> must match that of <x, e1>
    rng = np.random.default_rng(8)
    dim = 2
    draws = 100000
    x = rng.standard_normal((draws, dim + 1))
    x /= np.linalg.norm(x, axis=1)[:, None]
    y = rng.standard_normal((draws, dim + 1))
    y /= np.linalg.norm(y, axis=1)[:, None]
    a = rng.standard_normal((dim + 1, dim + 1))
    q, r = np.linalg.qr(a)
    q = q * np.sign(np.diag(r))
    stat = stats.ks_2samp(x @ q[:, 0], y[:, 0]).statistic
    critical = 1.628 * np.sqrt(2.0 / draws)  # 1% level, equal samples
    assert stat < critical


def test_antipode_and_check():
    rng = np.random.default_rng(9)
    x = sample_uniform_point(3, rng)
    assert np.allclose(antipode(x), -x)
    check_sphere_point(x)
    with pytest.raises(ValueError):
        check_sphere_point(1.01 * x)
    with pytest.raises(ValueError):
        check_sphere_point(x[:2], dim=3)


def test_subset_tables():
    sub = subset_table(5, 2)
    comp = complement_table(5, 2)
    assert sub.shape == (10, 2) and comp.shape == (10, 3)
    assert [tuple(r) for r in sub[:4]] == [(0, 1), (0, 2), (0, 3), (0, 4)]
    for srow, crow in zip(sub, comp):
        assert sorted(list(srow) + list(crow)) == [0, 1, 2, 3, 4]
    # lexicographic order
    as_tuples = [tuple(r) for r in sub]
    assert as_tuples == sorted(as_tuples)
