import numpy as np
import pytest
from hypothesis import given, strategies as st

from futuretube import group
from futuretube.connect import (cartan_parameters, cartan_path, hi_monotonicity_check, image_imag,
                                normalize_parameters, sigma_contains, PathDegeneracyError)
from futuretube.group import CartanParams, cartan_element, cartan_matrix, epsilon
from futuretube.sampling import random_conforming_pair, random_tube_point
from futuretube.suites import negative_control_report

from conftest import seeds


def test_sigma_examples():
    rng = np.random.default_rng(0)
    w = random_tube_point(rng, 2, 3)
    assert sigma_contains(group.identity(2), w)
    assert not sigma_contains(epsilon(2), w)
    assert sigma_contains(group.random_group_element_rng(rng, 1.0, "real0", 2), w)


def test_identity_path_is_constant():
    w = 1j * np.array([[2.0], [0.1], [0.0], [0.2]])
    path = cartan_path("H0", CartanParams.identity("H0", 3), w, 16)
    assert all(np.array_equal(g.matrix, np.eye(4)) for _, g in path.samples)


def test_small_h0_path():
    rng = np.random.default_rng(3)
    w = 2j * np.tile(np.array([[1.0], [0], [0], [0]]), 3) + 0.05 * rng.standard_normal((4, 3))
    p = CartanParams.from_angles("H0", 0.2, [0.3])
    path = cartan_path("H0", p, w, 64)
    assert len(path.samples) == 64 and path.min_margin > 0
    assert np.max(np.abs(path.samples[-1][1].matrix - cartan_element(p, 3).matrix)) <= 1e-9
    assert np.allclose(cartan_parameters(path.samples[-1][1], "H0"), p.vector())


def test_path_precondition():
    # for n = 1, (a, b) = (0, 1) sends i e_0 to (0, -1), which has zero imaginary part
    w = 1j * np.array([[1.0], [0.0]])
    with pytest.raises(ValueError, match="precondition"):
        cartan_path("H0", CartanParams("H0", (0.0, 1.0), ()), w, 8)
    with pytest.raises(ValueError):
        cartan_path("H1", CartanParams.identity("H2", 2), 1j * np.eye(3)[:, :1], 8)


def test_normalisation_degeneracy():
    with pytest.raises(PathDegeneracyError):
        normalize_parameters("H0", [0.0, 0.0, 1.0, 0.0])
    with pytest.raises(PathDegeneracyError):
        normalize_parameters("H2", [1.0, 1.0])
    q = normalize_parameters("H1", [2.0, 0.0, 2.0, 1.0])
    assert q[0] ** 2 + q[1] ** 2 == pytest.approx(1)
    assert q[2] ** 2 - q[3] ** 2 == pytest.approx(1)


@pytest.mark.parametrize("variant,n", [("H0", 1), ("H0", 3), ("H1", 2), ("H1", 4), ("H2", 2), ("H2", 4)])
def test_conforming_paths(variant, n):
    rng = np.random.default_rng(n)
    for _ in range(10):
        params, w = random_conforming_pair(rng, variant, n, int(rng.integers(1, 4)))
        path = cartan_path(variant, params, w, 64)
        assert all(sigma_contains(g, w) for _, g in path.samples)
        for q in path.parameters():
            assert CartanParams.from_vector(variant, q).constraint_residual() <= 1e-9
        assert hi_monotonicity_check(variant, params, w, seed=int(rng.integers(1 << 30))).passed


@given(seeds, st.sampled_from([("H0", 3), ("H1", 2), ("H2", 4)]))
def test_image_is_linear_in_parameters(seed, case):
    variant, n = case
    rng = np.random.default_rng(seed)
    w = random_tube_point(rng, n, 2)
    size = 2 * group.cartan_rank(variant, n)
    p, q = rng.standard_normal((2, size))
    # the padding entries of psi~ are affine; compare through differences
    lhs = image_imag(variant, p + q, w) - image_imag(variant, q, w)
    rhs = image_imag(variant, p, w) - image_imag(variant, np.zeros(size), w)
    assert np.allclose(lhs, rhs, atol=1e-12)
    assert np.allclose(image_imag(variant, p, w), (cartan_matrix(variant, p, n) @ w).imag)


def test_monotonicity_identity_and_negative_control():
    w = random_tube_point(np.random.default_rng(1), 2, 2)
    assert hi_monotonicity_check("H1", CartanParams.identity("H1", 2), w, seed=3).passed
    control = negative_control_report()
    assert not control.passed and control.violations[0][0] == "shrink"


@given(seeds, st.sampled_from([2, 4]))
def test_epsilon_coset_never_meets_the_tube(seed, n):
    rng = np.random.default_rng(seed)
    w = random_tube_point(rng, n, 2)
    h = cartan_element(CartanParams.from_angles("H2", None, rng.uniform(-2, 2, n // 2)), n)
    assert not sigma_contains(h.matrix @ epsilon(n).matrix, w)
