"""Minkowski space C^{1+n} with the bilinear Lorentz form.

Vectors are 1-D numpy arrays of length 1+n. A configuration point
z = (z_1, ..., z_N) is a complex array of shape (1+n, N) whose columns are the
z_j. Nothing here conjugates: the form is bilinear, not Hermitian.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Tolerance:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = Tolerance()


class DomainError(ValueError):
    """Input lies outside the domain where an operation is defined."""


def signature(dim: int) -> np.ndarray:
    """Diagonal of J = diag(1, -1, ..., -1) for C^{dim}."""
    d = -np.ones(dim)
    d[0] = 1.0
    return d


def metric(dim: int) -> np.ndarray:
    return np.diag(signature(dim))


def basis_vector(n: int, k: int) -> np.ndarray:
    e = np.zeros(1 + n)
    e[k] = 1.0
    return e


def as_vector(v) -> np.ndarray:
    v = np.asarray(v)
    if v.ndim != 1 or v.shape[0] < 2:
        raise ValueError(f"expected a vector of length 1+n >= 2, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector has non-finite entries")
    return v


def as_config(z) -> np.ndarray:
    """Validate and return z as a complex (1+n, N) array."""
    z = np.asarray(z, dtype=complex)
    if z.ndim == 1:
        z = z[:, None]
    if z.ndim != 2 or z.shape[0] < 2 or z.shape[1] < 1:
        raise ValueError(f"configuration point must have shape (1+n, N) with n, N >= 1, got {z.shape}")
    if not np.all(np.isfinite(z)):
        raise ValueError("configuration point has non-finite entries")
    return z


def lorentz_product(x, w):
    """x . w = x_0 w_0 - x_1 w_1 - ... - x_n w_n.

    Works column-wise when given (1+n, N) arrays of equal shape.
    """
    x = np.asarray(x)
    w = np.asarray(w)
    if x.shape[0] != w.shape[0]:
        raise ValueError(f"dimension mismatch: {x.shape[0]} vs {w.shape[0]}")
    return x[0] * w[0] - np.sum(x[1:] * w[1:], axis=0)


def eta(v):
    """Quadratic form eta(v) = v . v (column-wise for 2-D input)."""
    return lorentz_product(v, v)


def _require_real(y):
    y = np.asarray(y)
    if np.iscomplexobj(y):
        if np.any(y.imag != 0):
            raise DomainError("expected a real vector")
        y = y.real
    return y.astype(float)


def in_forward_cone(y, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Strict membership in C = {eta(y) > 0, y_0 > 0}; the boundary counts as outside."""
    y = _require_real(as_vector(y))
    return bool(eta(y) > tol.abs_tol and y[0] > tol.abs_tol)


def cone_mask(y, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Vectorised cone test over the columns of a real (1+n, N) array."""
    y = np.asarray(y, dtype=float)
    return (eta(y) > tol.abs_tol) & (y[0] > tol.abs_tol)


def in_future_tube(z, tol: Tolerance = DEFAULT_TOL) -> bool:
    z = as_config(z)
    return bool(np.all(cone_mask(z.imag, tol)))


def cauchy_schwarz_defect(x, y) -> float:
    """(x.y)^2 - eta(x) eta(y), nonnegative whenever eta(y) > 0.

    Vanishes exactly when x and y are linearly dependent.
    """
    x = _require_real(x)
    y = _require_real(y)
    ey = eta(y)
    if np.any(ey <= 0):
        raise DomainError("cauchy_schwarz_defect needs eta(y) > 0")
    return lorentz_product(x, y) ** 2 - eta(x) * ey


def lorentz_projection(x, y) -> np.ndarray:
    """Component of x Lorentz-orthogonal to the timelike y; its eta is <= 0."""
    x = _require_real(x)
    y = _require_real(y)
    ey = eta(y)
    if ey <= 0:
        raise DomainError("projection needs eta(y) > 0")
    return x - (lorentz_product(x, y) / ey) * y


def cone_boost(y, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Real boost g in SO(1,n)^0 with g y = sqrt(eta(y)) e_0.

    Boosts along the spatial direction of y; identity when y is already on the
    time axis.
    """
    y = _require_real(as_vector(y))
    if not in_forward_cone(y, tol):
        raise DomainError("cone_boost needs y in the open forward cone")
    dim = y.shape[0]
    root = np.sqrt(eta(y))
    spatial = y[1:]
    s = np.linalg.norm(spatial)
    g = np.eye(dim)
    if s == 0.0:
        return g
    u = spatial / s
    ch = y[0] / root
    sh = s / root
    g[0, 0] = ch
    g[0, 1:] = -sh * u
    g[1:, 0] = -sh * u
    g[1:, 1:] += (ch - 1.0) * np.outer(u, u)
    return g
