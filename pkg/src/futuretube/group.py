"""The Lorentz groups SO(1,n) over R and C, their Lie algebra, and the Cartan
subgroups H0, H1, H2 used in the orbit-connectedness argument.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .minkowski import as_config, metric

COMPLEX_SO = "complex_SO"
REAL_SO0 = "real_SO0"
REAL_SO_OTHER = "real_SO_other"
INVALID = "invalid"

EXP_NORM_CAP = 50.0


@dataclass(frozen=True)
class GroupElement:
    matrix: np.ndarray
    classification: str
    residual: float
    det: complex

    @property
    def n(self) -> int:
        return self.matrix.shape[0] - 1

    @property
    def valid(self) -> bool:
        return self.classification != INVALID

    @property
    def is_real(self) -> bool:
        return self.classification in (REAL_SO0, REAL_SO_OTHER)


def isometry_residual(matrix) -> float:
    """max |g^T J g - J|."""
    g = np.asarray(matrix)
    J = metric(g.shape[0])
    return float(np.max(np.abs(g.T @ J @ g - J)))


def validate_group(matrix, tol: float = 1e-9) -> GroupElement:
    """Classify a square matrix as an element of SO_C(1,n), SO_R(1,n)^0, the other
    component of SO_R(1,n), or as invalid. Never raises on a bad matrix."""
    g = np.array(matrix, dtype=complex)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] < 2:
        raise ValueError(f"expected a square matrix of size 1+n >= 2, got {g.shape}")
    residual = isometry_residual(g)
    det = complex(np.linalg.det(g))
    if residual > tol or abs(det - 1) > tol:
        kind = INVALID
    elif np.max(np.abs(g.imag)) <= tol:
        kind = REAL_SO0 if g[0, 0].real >= 1 - tol else REAL_SO_OTHER
    else:
        kind = COMPLEX_SO
    return GroupElement(g, kind, residual, det)


def identity(n: int) -> GroupElement:
    return validate_group(np.eye(1 + n))


def algebra_basis(n: int) -> list[np.ndarray]:
    """Generators of so(1,n): boosts e_0 e_k^T + e_k e_0^T (k = 1..n) followed by
    rotations e_k e_l^T - e_l e_k^T (1 <= k < l <= n, lexicographic)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    dim = 1 + n
    basis = []
    for k in range(1, dim):
        b = np.zeros((dim, dim))
        b[0, k] = b[k, 0] = 1.0
        basis.append(b)
    for k in range(1, dim):
        for l in range(k + 1, dim):
            r = np.zeros((dim, dim))
            r[k, l] = 1.0
            r[l, k] = -1.0
            basis.append(r)
    return basis


def algebra_labels(n: int) -> list[str]:
    labels = [f"B{k}" for k in range(1, n + 1)]
    labels += [f"R{k}{l}" for k in range(1, n + 1) for l in range(k + 1, n + 1)]
    return labels


def algebra_residual(xi) -> float:
    """max |xi^T J + J xi|; zero for elements of so(1,n)."""
    xi = np.asarray(xi)
    J = metric(xi.shape[0])
    return float(np.max(np.abs(xi.T @ J + J @ xi)))


def combine(coefficients, n: int) -> np.ndarray:
    """sum_a c_a xi_a over the fixed basis."""
    coefficients = np.asarray(coefficients)
    return np.tensordot(coefficients, np.array(algebra_basis(n)), axes=1)


def exp_algebra(xi, t: complex = 1.0, cap: float = EXP_NORM_CAP, tol: float = 1e-9) -> GroupElement:
    """exp(t xi) by scaling and squaring (Pade 13)."""
    xi = np.asarray(xi)
    if algebra_residual(xi) > 1e-10 * max(1.0, np.max(np.abs(xi))):
        raise ValueError("xi is not in so(1,n)")
    a = t * xi
    if np.linalg.norm(a, ord=np.inf) > cap:
        raise OverflowError(f"|t| * |xi| exceeds the exponential cap {cap}")
    return validate_group(expm(a.astype(complex)), tol)


def random_group_element(seed, scale: float, realness: str = "real0", n: int = 3) -> GroupElement:
    """exp(sum_a c_a xi_a) with c_a uniform in [-scale, scale]; for realness
    'complex' real and imaginary parts are drawn independently."""
    if scale <= 0:
        raise ValueError("scale must be positive")
    rng = np.random.default_rng(seed)
    return random_group_element_rng(rng, scale, realness, n)


def random_group_element_rng(rng: np.random.Generator, scale: float, realness: str, n: int) -> GroupElement:
    d = n * (n + 1) // 2
    c = rng.uniform(-scale, scale, d)
    if realness == "complex":
        c = c + 1j * rng.uniform(-scale, scale, d)
    elif realness != "real0":
        raise ValueError(f"unknown realness {realness!r}")
    g = exp_algebra(combine(c, n))
    if realness == "real0":
        # discard round-off imaginary parts so downstream tests see a real matrix
        g = validate_group(g.matrix.real)
    return g


def apply(g, z) -> np.ndarray:
    """Act on every column of z by matrix multiplication."""
    m = g.matrix if isinstance(g, GroupElement) else np.asarray(g)
    z = as_config(z)
    if m.shape != (z.shape[0], z.shape[0]):
        raise ValueError(f"dimension mismatch: group {m.shape}, point {z.shape}")
    return m @ z


# ---------------------------------------------------------------- Cartan subgroups

@dataclass(frozen=True)
class CartanParams:
    """Parameters (a, b) on the circle and (c_j, d_j) on the right hyperbola branch.

    `circle` is None for H2.
    """
    variant: str
    circle: tuple[float, float] | None
    hyperbolas: tuple[tuple[float, float], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.variant not in ("H0", "H1", "H2"):
            raise ValueError(f"unknown Cartan variant {self.variant!r}")
        if (self.circle is None) != (self.variant == "H2"):
            raise ValueError("circle block is present exactly for H0 and H1")

    @classmethod
    def from_angles(cls, variant: str, theta: float | None, rapidities) -> "CartanParams":
        circle = None if variant == "H2" else (float(np.cos(theta)), float(np.sin(theta)))
        hyps = tuple((float(np.cosh(s)), float(np.sinh(s))) for s in rapidities)
        return cls(variant, circle, hyps)

    @classmethod
    def identity(cls, variant: str, n: int) -> "CartanParams":
        m = cartan_rank(variant, n)
        count = m if variant == "H2" else m - 1
        return cls(variant, None if variant == "H2" else (1.0, 0.0), ((1.0, 0.0),) * count)

    def vector(self) -> np.ndarray:
        """Flatten to (a, b, c_1, d_1, ...) in R^{2m} (no circle entries for H2)."""
        parts = [] if self.circle is None else [self.circle]
        return np.array(parts + list(self.hyperbolas), dtype=float).ravel()

    @classmethod
    def from_vector(cls, variant: str, p) -> "CartanParams":
        p = np.asarray(p, dtype=float).reshape(-1, 2)
        if variant == "H2":
            return cls(variant, None, tuple(map(tuple, p)))
        return cls(variant, tuple(p[0]), tuple(map(tuple, p[1:])))

    def constraint_residual(self) -> float:
        res = 0.0
        if self.circle is not None:
            a, b = self.circle
            res = abs(a * a + b * b - 1)
        for c, d in self.hyperbolas:
            res = max(res, abs(c * c - d * d - 1))
            if c <= 0:
                res = max(res, np.inf)
        return float(res)


def cartan_rank(variant: str, n: int) -> int:
    """m with n = 2m-1 (H0) or n = 2m (H1, H2); raises on parity mismatch."""
    if variant == "H0":
        if n % 2 != 1:
            raise ValueError("H0 needs odd n = 2m-1")
        return (n + 1) // 2
    if variant in ("H1", "H2"):
        if n % 2 != 0 or n < 2:
            raise ValueError(f"{variant} needs even n = 2m >= 2")
        return n // 2
    raise ValueError(f"unknown Cartan variant {variant!r}")


def _block_slots(variant: str, n: int):
    """Index pairs of the circle block (or None) and of each hyperbolic block."""
    m = cartan_rank(variant, n)
    if variant == "H2":
        return None, [(2 * j - 1, 2 * j) for j in range(1, m + 1)]
    return (0, 1), [(2 * j, 2 * j + 1) for j in range(1, m)]


def cartan_matrix(variant: str, p, n: int) -> np.ndarray:
    """The linear map psi~(p): block-diagonal matrix with blocks
    [[a, ib], [ib, a]] and [[c, -id], [id, c]]; p need not satisfy the constraints."""
    circle_slot, hyp_slots = _block_slots(variant, n)
    p = np.asarray(p, dtype=float).reshape(-1, 2)
    expected = len(hyp_slots) + (circle_slot is not None)
    if p.shape[0] != expected:
        raise ValueError(f"{variant} with n={n} needs {expected} parameter pairs, got {p.shape[0]}")
    h = np.eye(1 + n, dtype=complex)
    pairs = iter(p)
    if circle_slot is not None:
        a, b = next(pairs)
        i, k = circle_slot
        h[i, i] = h[k, k] = a
        h[i, k] = h[k, i] = 1j * b
    for (i, k), (c, d) in zip(hyp_slots, pairs):
        h[i, i] = h[k, k] = c
        h[i, k] = -1j * d
        h[k, i] = 1j * d
    return h


def cartan_element(params: CartanParams, n: int, tol: float = 1e-12) -> GroupElement:
    """Element of the imaginary part H_I of the Cartan subgroup."""
    res = params.constraint_residual()
    if res > tol:
        raise ValueError(f"Cartan parameters violate their constraints (residual {res:.3g})")
    return validate_group(cartan_matrix(params.variant, params.vector(), n))


def real_cartan_element(variant: str, rapidity: float, angles, n: int) -> GroupElement:
    """Element of H_R: a real boost in the (0,1)-plane (absent for H2) and real
    rotations in the planes of the SO(2) blocks."""
    circle_slot, hyp_slots = _block_slots(variant, n)
    angles = list(angles)
    if len(angles) != len(hyp_slots):
        raise ValueError(f"expected {len(hyp_slots)} rotation angles")
    h = np.eye(1 + n)
    if circle_slot is not None:
        i, k = circle_slot
        h[i, i] = h[k, k] = np.cosh(rapidity)
        h[i, k] = h[k, i] = np.sinh(rapidity)
    for (i, k), phi in zip(hyp_slots, angles):
        h[i, i] = h[k, k] = np.cos(phi)
        h[i, k] = -np.sin(phi)
        h[k, i] = np.sin(phi)
    return validate_group(h)


def epsilon(n: int) -> GroupElement:
    """The second double-coset representative for H2: diag(-1, swap, Id_{n-2})."""
    if n % 2 != 0 or n < 2:
        raise ValueError("epsilon exists for even n >= 2")
    e = np.eye(1 + n)
    e[0, 0] = -1.0
    e[1:3, 1:3] = [[0.0, 1.0], [1.0, 0.0]]
    return validate_group(e)

