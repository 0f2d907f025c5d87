"""Seeded random generation shared by the tests, suites and scripts.

Cone vectors follow one convention everywhere: the spatial part is drawn
uniformly from a ball of radius `scale`, and y_0 = sqrt(|s|^2 + m^2) with the
margin m log-uniform in [0.1, 10].
"""
from __future__ import annotations

import zlib

import numpy as np

from .group import CartanParams, cartan_element, cartan_rank, random_group_element_rng
from .minkowski import cone_mask, eta

MASK64 = (1 << 64) - 1
MARGIN_RANGE = (0.1, 10.0)


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(master: int, label: str, index: int = 0) -> int:
    """Sub-seed for case `index` of the suite named `label`."""
    h = zlib.crc32(label.encode())
    return splitmix64(splitmix64(splitmix64(master & MASK64) ^ h) ^ (index & MASK64))


def case_rng(master: int, label: str, index: int = 0) -> np.random.Generator:
    return np.random.default_rng(derive_seed(master, label, index))


def unit_ball(rng: np.random.Generator, dim: int, size=None) -> np.ndarray:
    shape = (dim,) if size is None else (size, dim)
    if dim == 0:
        return np.zeros(shape)
    g = rng.standard_normal(shape)
    g /= np.linalg.norm(g, axis=-1, keepdims=True)
    r = rng.uniform(0, 1, shape[:-1] + (1,)) ** (1.0 / dim)
    return g * r


def random_margin(rng, size=None, bounds=MARGIN_RANGE):
    lo, hi = np.log(bounds[0]), np.log(bounds[1])
    return np.exp(rng.uniform(lo, hi, size))


def random_cone_vectors(rng, n: int, count: int, scale: float = 1.0, margins=MARGIN_RANGE) -> np.ndarray:
    """(1+n, count) array of forward-cone vectors."""
    s = scale * unit_ball(rng, n, count)
    m = random_margin(rng, count, margins)
    y0 = np.sqrt(np.sum(s * s, axis=1) + m * m)
    return np.vstack([y0, s.T])


def random_tube_point(rng, n: int, N: int, scale: float = 1.0, x_scale: float = 1.0,
                      margins=MARGIN_RANGE) -> np.ndarray:
    """Random z in T^N: real parts uniform in [-x_scale, x_scale]."""
    y = random_cone_vectors(rng, n, N, scale, margins)
    x = rng.uniform(-x_scale, x_scale, (1 + n, N))
    return x + 1j * y


def random_imaginary_point(rng, n: int, N: int, scale: float = 1.0, margins=MARGIN_RANGE) -> np.ndarray:
    return 1j * random_cone_vectors(rng, n, N, scale, margins)


def random_real_pair(rng, n: int, scale: float = 1.0):
    """x arbitrary, y with eta(y) > 0 (either time orientation)."""
    y = random_cone_vectors(rng, n, 1, scale)[:, 0]
    if rng.uniform() < 0.5:
        y = -y
    x = rng.uniform(-scale, scale, 1 + n) * random_margin(rng)
    return x, y


# ---------------------------------------------------------------- constructed families

def planted_radical_point(rng, n: int, k: int, d: int, margin: float = 0.1, cond_max: float = 10.0,
                          boost_scale: float = 0.5, t_range: float = 2.0):
    """Tube point whose span has an isotropic radical of dimension exactly k.

    The radical is I = span{e_{2l-1} + i e_{2l} : l = 1..k}; the closed part lives in
    U = span{e_0, e_{2k+1}, ..., e_{2k+d-1}}, which is Lorentz-orthogonal to I and
    to its conjugate. N = d + k columns are combined through a coefficient matrix
    with condition number at most cond_max, and the result is moved by a random
    real Lorentz transformation.

    Since eta(Im(u_j + t omega_j)) = eta(Im u_j) - t^2 |beta_j|^2, the margin is
    enforced along the whole degeneration curve |t| <= t_range, not just at t = 1;
    beyond |t| = 1 tube membership of that curve is not automatic.

    Returns (z, g) where g is the applied real group matrix.
    """
    if 2 * k > n or d < 1 or 1 + 2 * k + d - 1 > n + 1:
        raise ValueError(f"cannot plant k={k}, d={d} in dimension 1+{n}")
    N = d + k
    U = np.zeros((1 + n, d))
    U[0, 0] = 1.0
    for a in range(1, d):
        U[2 * k + a, a] = 1.0
    I = np.zeros((1 + n, k), dtype=complex)
    for l in range(k):
        I[2 * l + 1, l] = 1.0
        I[2 * l + 2, l] = 1j
    while True:
        # u-coefficients: imaginary parts in the forward cone of U (signature (1, d-1))
        yu = random_cone_vectors(rng, d - 1, N, scale=1.0, margins=(0.5, 2.0))
        xu = rng.uniform(-1.0, 1.0, (d, N))
        cu = xu + 1j * yu
        eta_u = eta(yu)
        # t_range^2 |beta_j|^2 <= eta_u_j - margin keeps the curve at least margin inside
        beta = rng.standard_normal((k, N)) + 1j * rng.standard_normal((k, N))
        room = np.sqrt(np.maximum(eta_u - margin, 0.0)) / max(t_range, 1.0)
        norms = np.linalg.norm(beta, axis=0) if k else np.ones(N)
        beta = beta * (room * rng.uniform(0.3, 1.0, N) / np.maximum(norms, 1e-300))
        coeff = np.vstack([cu, beta])
        sv = np.linalg.svd(coeff, compute_uv=False)
        if sv[-1] > 0 and sv[0] / sv[-1] <= cond_max:
            break
    z = U @ cu + I @ beta
    g = random_group_element_rng(rng, boost_scale, "real0", n).matrix.real
    return g @ z, g


def random_conforming_pair(rng, variant: str, n: int, N: int, angle: float = np.pi, rapidity: float = 1.5,
                           max_tries: int = 10_000):
    """(params, w) with w in T^N and psi(params) w in T^N, by rejection."""
    m = cartan_rank(variant, n)
    count = m if variant == "H2" else m - 1
    for _ in range(max_tries):
        w = random_tube_point(rng, n, N, margins=(0.3, 3.0))
        theta = None if variant == "H2" else rng.uniform(-angle, angle)
        params = CartanParams.from_angles(variant, theta, rng.uniform(-rapidity, rapidity, count))
        h = cartan_element(params, n)
        if np.all(cone_mask((h.matrix @ w).imag)):
            return params, w
    raise RuntimeError("no conforming pair found")

