import numpy as np
import pytest
from hypothesis import given, strategies as st

from futuretube.minkowski import (DomainError, Tolerance, basis_vector, cauchy_schwarz_defect, cone_boost,
                                  eta, in_forward_cone, in_future_tube, lorentz_product, lorentz_projection,
                                  metric)
from futuretube.sampling import random_cone_vectors, random_real_pair

from conftest import counts, dims, seeds


def e(k, n=2):
    return basis_vector(n, k)


def test_product_examples():
    assert lorentz_product(e(0), e(0)) == 1
    assert lorentz_product(e(1), e(1)) == -1
    assert lorentz_product(np.array([2, 1, 0]), np.array([3, 2, 0])) == 4


def test_eta_examples():
    assert eta(e(0)) == 1
    assert eta(np.array([1.0, 1.0, 0.0])) == 0
    # bilinear, no conjugation
    assert eta(np.array([1, 1j, 0])) == 2


def test_product_dimension_mismatch():
    with pytest.raises(ValueError):
        lorentz_product(np.ones(3), np.ones(4))


@given(seeds, dims)
def test_bilinear_and_symmetric(seed, n):
    rng = np.random.default_rng(seed)
    x, x2, w = (rng.standard_normal((3, 1 + n)) + 1j * rng.standard_normal((3, 1 + n)))
    a, b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    lhs = lorentz_product(a * x + b * x2, w)
    rhs = a * lorentz_product(x, w) + b * lorentz_product(x2, w)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))
    assert abs(lorentz_product(x, w) - lorentz_product(w, x)) <= 1e-14 * max(1.0, abs(lhs))
    # the matrix form agrees with the explicit sum
    assert np.isclose(x @ metric(1 + n) @ w, lorentz_product(x, w), rtol=1e-13, atol=1e-13)


def test_cone_examples():
    assert in_forward_cone(e(0))
    assert not in_forward_cone(-e(0))
    assert not in_forward_cone(np.array([1.0, 1.0, 0.0]))


def test_cone_rejects_complex():
    with pytest.raises(DomainError):
        in_forward_cone(np.array([1, 0.5j, 0]))


def test_tube_examples():
    assert in_future_tube(1j * e(0))
    assert not in_future_tube(e(0).astype(complex))
    z = np.column_stack([1j * e(0), e(1) - 1j * e(0)])
    assert not in_future_tube(z)


def test_tube_tolerance_is_strict():
    y = np.array([1.0, 1.0 - 1e-14, 0.0])
    assert not in_future_tube(1j * y, Tolerance(abs_tol=1e-10))


def test_defect_examples():
    assert cauchy_schwarz_defect(e(0), e(0)) == 0
    assert cauchy_schwarz_defect(e(1), e(0)) == 1
    assert cauchy_schwarz_defect(np.array([2.0, 1, 0]), e(0)) == 1


def test_defect_needs_timelike():
    with pytest.raises(DomainError):
        cauchy_schwarz_defect(e(0), e(1))


@given(seeds, dims)
def test_reverse_cauchy_schwarz(seed, n):
    rng = np.random.default_rng(seed)
    x, y = random_real_pair(rng, n)
    assert cauchy_schwarz_defect(x, y) >= -1e-12
    lam = rng.uniform(-3, 3)
    scale = max(np.linalg.norm(lam * y), np.linalg.norm(y))
    assert abs(cauchy_schwarz_defect(lam * y, y)) <= 1e-10 * scale ** 4


@given(seeds, dims)
def test_projection_is_spacelike(seed, n):
    rng = np.random.default_rng(seed)
    x, y = random_real_pair(rng, n)
    p = lorentz_projection(x, y)
    assert abs(lorentz_product(p, y)) <= 1e-10 * np.linalg.norm(x) * np.linalg.norm(y)
    assert eta(p) <= 1e-10 * np.linalg.norm(x) ** 2


@given(seeds, dims, st.floats(0, 1))
def test_cone_convex_and_products_positive(seed, n, t):
    rng = np.random.default_rng(seed)
    y1, y2 = random_cone_vectors(rng, n, 2).T
    assert in_forward_cone(t * y1 + (1 - t) * y2)
    assert lorentz_product(y1, y2) > 0


def test_boost_examples():
    assert np.array_equal(cone_boost(e(0)), np.eye(3))
    assert np.array_equal(cone_boost(2 * e(0)), np.eye(3))
    g = cone_boost(np.array([np.cosh(1), np.sinh(1), 0.0]))
    expected = np.eye(3)
    expected[:2, :2] = [[np.cosh(1), -np.sinh(1)], [-np.sinh(1), np.cosh(1)]]
    assert np.allclose(g, expected, atol=1e-14)


def test_boost_outside_cone():
    with pytest.raises(DomainError):
        cone_boost(-e(0))


@given(seeds, dims)
def test_boost_properties(seed, n):
    rng = np.random.default_rng(seed)
    y = random_cone_vectors(rng, n, 1, scale=3.0)[:, 0]
    g = cone_boost(y)
    target = np.sqrt(eta(y)) * basis_vector(n, 0)
    assert np.linalg.norm(g @ y - target) <= 1e-9 * np.linalg.norm(y)
    J = metric(1 + n)
    assert np.max(np.abs(g.T @ J @ g - J)) <= 1e-10 * max(1.0, np.max(np.abs(g)) ** 2)
    assert g[0, 0] >= 1


@given(seeds, dims, counts)
def test_vectorised_forms_match_columns(seed, n, N):
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((1 + n, N)) + 1j * rng.standard_normal((1 + n, N))
    cols = [eta(z[:, j]) for j in range(N)]
    assert np.allclose(eta(z), cols, rtol=1e-14, atol=1e-14)
