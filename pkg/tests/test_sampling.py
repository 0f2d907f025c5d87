import numpy as np
from hypothesis import given, strategies as st

from futuretube.minkowski import cone_mask, in_future_tube
from futuretube.sampling import (random_cone_vectors, random_conforming_pair, random_margin, random_tube_point,
                                 unit_ball)
from futuretube.group import cartan_element

from conftest import counts, dims, seeds


@given(seeds, dims, counts)
def test_cone_and_tube_samples(seed, n, N):
    rng = np.random.default_rng(seed)
    y = random_cone_vectors(rng, n, N, scale=5.0)
    assert y.shape == (1 + n, N) and np.all(cone_mask(y))
    assert in_future_tube(random_tube_point(rng, n, N))


def test_margin_range_and_ball():
    rng = np.random.default_rng(0)
    m = random_margin(rng, 10_000)
    assert m.min() >= 0.1 and m.max() <= 10
    assert np.all(np.linalg.norm(unit_ball(rng, 3, 1000), axis=1) <= 1)
    assert unit_ball(rng, 0, 4).shape == (4, 0)


@given(seeds, st.sampled_from([("H0", 3), ("H1", 2), ("H2", 4)]))
def test_conforming_pairs_conform(seed, case):
    variant, n = case
    rng = np.random.default_rng(seed)
    params, w = random_conforming_pair(rng, variant, n, 2)
    assert in_future_tube(w) and in_future_tube(cartan_element(params, n).matrix @ w)
