import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# the n = 2 point with a one-dimensional radical spanned by (0, 1, i)
OMEGA = np.array([0.0, 1.0, 1j])
WORKED = np.array([[2j, 1j], [1.0, 0.0], [1j, 0.0]])


@pytest.fixture
def worked():
    return WORKED.copy()


seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)
dims = st.integers(min_value=1, max_value=4)
counts = st.integers(min_value=1, max_value=5)
