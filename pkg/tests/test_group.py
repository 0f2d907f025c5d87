import numpy as np
import pytest
from hypothesis import given, strategies as st

from futuretube import group
from futuretube.group import (COMPLEX_SO, INVALID, REAL_SO0, REAL_SO_OTHER, CartanParams, algebra_basis,
                              algebra_labels, algebra_residual, cartan_element, cartan_matrix, combine,
                              epsilon, exp_algebra, random_group_element, real_cartan_element,
                              validate_group)
from futuretube.minkowski import in_future_tube
from futuretube.sampling import random_tube_point

from conftest import dims, seeds


def test_classification_examples():
    assert validate_group(np.eye(3)).classification == REAL_SO0
    assert validate_group(np.diag([1.0, 1, -1])).classification == INVALID
    assert validate_group(2 * np.eye(3)).classification == INVALID
    assert epsilon(2).classification == REAL_SO_OTHER
    assert epsilon(4).matrix[0, 0] == -1


def test_epsilon_shape():
    m = epsilon(4).matrix
    expected = np.diag([-1.0, 0, 0, 1, 1])
    expected[1, 2] = expected[2, 1] = 1
    assert np.array_equal(m, expected)
    with pytest.raises(ValueError):
        epsilon(3)


def test_validate_rejects_non_square():
    with pytest.raises(ValueError):
        validate_group(np.ones((2, 3)))


def test_algebra_basis():
    assert len(algebra_basis(1)) == 1
    assert np.array_equal(algebra_basis(1)[0], [[0, 1], [1, 0]])
    assert len(algebra_basis(2)) == 3
    assert algebra_labels(3) == ["B1", "B2", "B3", "R12", "R13", "R23"]
    for n in range(1, 5):
        basis = algebra_basis(n)
        assert len(basis) == n * (n + 1) // 2
        assert max(algebra_residual(b) for b in basis) == 0


def test_exp_closed_forms():
    xi = algebra_basis(2)[0]
    assert np.allclose(exp_algebra(xi, 0.0).matrix, np.eye(3))
    s = 0.7
    g = exp_algebra(xi, s).matrix
    expected = np.eye(3)
    expected[:2, :2] = [[np.cosh(s), np.sinh(s)], [np.sinh(s), np.cosh(s)]]
    assert np.allclose(g, expected, atol=1e-14)
    r = exp_algebra(algebra_basis(2)[2], np.pi / 2).matrix
    assert np.allclose(r, [[1, 0, 0], [0, 0, 1], [0, -1, 0]], atol=1e-14)


def test_exp_overflow_and_non_algebra():
    with pytest.raises(OverflowError):
        exp_algebra(algebra_basis(2)[0], 100.0)
    with pytest.raises(ValueError):
        exp_algebra(np.eye(3))


@given(seeds, dims)
def test_exp_matches_taylor_series(seed, n):
    rng = np.random.default_rng(seed)
    A = combine(rng.uniform(-0.3, 0.3, n * (n + 1) // 2), n) * (1 + 0.5j)
    term, total = np.eye(1 + n, dtype=complex), np.eye(1 + n, dtype=complex)
    for k in range(1, 40):
        term = term @ A / k
        total = total + term
    assert np.allclose(exp_algebra(A).matrix, total, atol=1e-13)


@given(seeds, dims, st.floats(-2, 2), st.floats(-2, 2))
def test_exp_additive_on_a_line(seed, n, t, s):
    rng = np.random.default_rng(seed)
    xi = combine(rng.uniform(-1, 1, n * (n + 1) // 2), n)
    lhs = exp_algebra(xi, t).matrix @ exp_algebra(xi, s).matrix
    assert np.allclose(lhs, exp_algebra(xi, t + s).matrix, atol=1e-9 * max(1, np.abs(lhs).max()))


@given(seeds, dims)
def test_random_elements(seed, n):
    g = random_group_element(seed, 0.5, "real0", n)
    assert g.classification == REAL_SO0 and g.is_real
    h = random_group_element(seed, 0.5, "complex", n)
    assert h.classification == COMPLEX_SO
    # closure under products
    gh = validate_group(g.matrix @ h.matrix)
    assert gh.valid and gh.residual <= 10 * max(g.residual, h.residual, 1e-15)


def test_random_element_scale_validation():
    with pytest.raises(ValueError):
        random_group_element(0, 0.0)
    with pytest.raises(ValueError):
        random_group_element(0, 1.0, "quaternion")


@given(seeds, dims, st.integers(1, 5))
def test_real_group_stabilises_tube(seed, n, N):
    rng = np.random.default_rng(seed)
    g = group.random_group_element_rng(rng, 1.0, "real0", n)
    z = random_tube_point(rng, n, N)
    assert in_future_tube(group.apply(g, z))


def test_apply_identity_and_mismatch():
    z = np.arange(6).reshape(3, 2) + 1j
    assert np.array_equal(group.apply(group.identity(2), z), z)
    with pytest.raises(ValueError):
        group.apply(group.identity(3), z)


# ---------------------------------------------------------------- Cartan subgroups

def test_cartan_identity_and_sigma_block():
    for variant, n in (("H0", 1), ("H0", 3), ("H1", 2), ("H2", 4)):
        h = cartan_element(CartanParams.identity(variant, n), n)
        assert np.array_equal(h.matrix, np.eye(1 + n))
    h = cartan_element(CartanParams("H0", (0.0, 1.0), ()), 1)
    assert np.array_equal(h.matrix, [[0, 1j], [1j, 0]])


def test_cartan_parity_and_constraints():
    with pytest.raises(ValueError):
        group.cartan_rank("H0", 2)
    with pytest.raises(ValueError):
        group.cartan_rank("H2", 3)
    with pytest.raises(ValueError):
        cartan_element(CartanParams("H1", (1.0, 0.5), ((1.0, 0.0),)), 4)
    with pytest.raises(ValueError):
        CartanParams("H2", (1.0, 0.0), ())


@pytest.mark.parametrize("variant,n", [("H0", 1), ("H0", 3), ("H0", 5), ("H1", 2), ("H1", 4), ("H2", 2), ("H2", 4)])
def test_cartan_elements_are_complex_lorentz_and_commute(variant, n):
    rng = np.random.default_rng(n)
    m = group.cartan_rank(variant, n)
    count = m if variant == "H2" else m - 1
    elems = []
    for _ in range(2):
        theta = None if variant == "H2" else rng.uniform(-3, 3)
        p = CartanParams.from_angles(variant, theta, rng.uniform(-1.5, 1.5, count))
        h = cartan_element(p, n)
        assert h.valid and h.residual < 1e-12
        elems.append(h.matrix)
    a, b = elems
    assert np.allclose(a @ b, b @ a, atol=1e-10)


@pytest.mark.parametrize("variant,n,pad", [("H0", 3, None), ("H1", 4, 4), ("H2", 4, 0)])
def test_cartan_matrix_is_linear(variant, n, pad):
    rng = np.random.default_rng(1)
    size = 2 * group.cartan_rank(variant, n)
    p, q = rng.standard_normal((2, size))

    def blocks(v):
        m = cartan_matrix(variant, v, n)
        if pad is not None:
            m[pad, pad] = 0
        return m

    assert np.allclose(blocks(2 * p - 3 * q), 2 * blocks(p) - 3 * blocks(q), atol=1e-14)


def test_params_round_trip():
    p = CartanParams.from_angles("H0", 0.4, [0.3, -0.2])
    assert CartanParams.from_vector("H0", p.vector()) == p
    assert p.constraint_residual() < 1e-15


def test_real_cartan_elements():
    g = real_cartan_element("H1", 0.5, [0.3], 4)
    assert g.classification == REAL_SO0
    g2 = real_cartan_element("H2", 0.0, [0.3], 2)
    assert g2.classification == REAL_SO0
    with pytest.raises(ValueError):
        real_cartan_element("H2", 0.0, [], 2)


@given(seeds, st.sampled_from([2, 4]), st.integers(1, 4))
def test_epsilon_flips_time(seed, n, N):
    rng = np.random.default_rng(seed)
    w = random_tube_point(rng, n, N)
    image = epsilon(n).matrix @ w
    assert np.all(image.imag[0] < 0)
    assert not in_future_tube(image)
