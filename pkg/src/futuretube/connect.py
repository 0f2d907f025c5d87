"""Connectedness of Sigma_H(w) = {h in H : h w in T^N} for the imaginary parts
H_I of the Cartan subgroups.

An element of H_I is parametrised by p = (a, b, c_1, d_1, ...) with a^2 + b^2 = 1
and c_j^2 - d_j^2 = 1, c_j > 0. For h = psi(p) in Sigma_H(w) the straight segment
q(t) = e + t (p - e) from the identity parameters e is renormalised blockwise
back onto the constraint set, giving a path from Id to h inside Sigma_H(w).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .group import CartanParams, GroupElement, apply, cartan_element, cartan_matrix
from .minkowski import DEFAULT_TOL, Tolerance, as_config, cone_mask, eta, in_future_tube


class SigmaContainmentError(RuntimeError):
    """A sampled path element left Sigma_H(w)."""

    def __init__(self, t: float, margin: float):
        super().__init__(f"path element at t={t:.6g} maps w outside T^N (margin {margin:.3g})")
        self.t = t
        self.margin = margin


class PathDegeneracyError(ValueError):
    """A block of q(t) cannot be normalised."""

    def __init__(self, t: float, block: int):
        super().__init__(f"block {block} of q(t) degenerates at t={t:.6g}")
        self.t = t
        self.block = block


def sigma_contains(g, w, tol: Tolerance = DEFAULT_TOL) -> bool:
    return in_future_tube(apply(g, w), tol)


def tube_margin(z) -> float:
    """min over columns of min(eta(Im z_j), Im z_j0); positive iff z is in T^N."""
    y = np.asarray(z).imag
    return float(np.min(np.minimum(eta(y), y[0])))


def image_imag(variant: str, p, w) -> np.ndarray:
    """Im(psi~(p) w_k) for all k; linear in p."""
    w = as_config(w)
    return (cartan_matrix(variant, p, w.shape[0] - 1) @ w).imag


def normalize_parameters(variant: str, q, tol: float = 1e-12, t: float = float("nan")) -> np.ndarray:
    """Divide the circle pair by its Euclidean norm and each hyperbolic pair (c, d)
    by sqrt(c^2 - d^2)."""
    q = np.asarray(q, dtype=float).reshape(-1, 2).copy()
    start = 0
    if variant != "H2":
        r = np.hypot(*q[0])
        if r <= tol:
            raise PathDegeneracyError(t, 0)
        q[0] /= r
        start = 1
    for j in range(start, q.shape[0]):
        c, d = q[j]
        e = c * c - d * d
        if e <= tol or c <= 0:
            raise PathDegeneracyError(t, j)
        q[j] /= np.sqrt(e)
    return q.ravel()


@dataclass
class CartanPath:
    variant: str
    start_params: CartanParams
    end_params: CartanParams
    sample_count: int
    samples: list = field(default_factory=list)     # (t, GroupElement)
    min_margin: float = np.inf

    def parameters(self) -> np.ndarray:
        """Parameter vectors along the path, one row per sample."""
        return np.array([cartan_parameters(g, self.variant) for _, g in self.samples])


def cartan_parameters(g: GroupElement, variant: str) -> np.ndarray:
    """Read (a, b, c_1, d_1, ...) back off an H_I matrix."""
    m = g.matrix
    n = m.shape[0] - 1
    out = []
    if variant == "H2":
        slots = [(2 * j - 1, 2 * j) for j in range(1, n // 2 + 1)]
    else:
        out.append((m[0, 0].real, m[0, 1].imag))
        slots = [(2 * j, 2 * j + 1) for j in range(1, (n + 1) // 2)]
    out += [(m[i, i].real, m[k, i].imag) for i, k in slots]
    return np.array(out).ravel()


def cartan_path(variant: str, end_params: CartanParams, w, sample_count: int = 64,
                tol: Tolerance = DEFAULT_TOL) -> CartanPath:
    """Path t -> psi(normalised e + t (p - e)) from Id to h = psi(p) inside Sigma_H(w).

    Raises ValueError when h w is not in T^N, PathDegeneracyError when a block
    cannot be normalised, and SigmaContainmentError if a sample leaves Sigma_H(w).
    """
    if sample_count < 2:
        raise ValueError("sample_count must be >= 2")
    if end_params.variant != variant:
        raise ValueError("end parameters belong to another Cartan variant")
    w = as_config(w)
    n = w.shape[0] - 1
    if not in_future_tube(w, tol):
        raise ValueError("w must lie in T^N")
    h = cartan_element(end_params, n)
    if not sigma_contains(h, w, tol):
        raise ValueError("precondition violated: h w is not in T^N")
    start = CartanParams.identity(variant, n)
    e = start.vector()
    p = end_params.vector()
    path = CartanPath(variant, start, end_params, sample_count)
    for t in np.linspace(0.0, 1.0, sample_count):
        q = normalize_parameters(variant, e + t * (p - e), t=float(t))
        g = cartan_element(CartanParams.from_vector(variant, q), n, tol=1e-9)
        margin = tube_margin(apply(g, w))
        if not sigma_contains(g, w, tol):
            raise SigmaContainmentError(float(t), margin)
        path.min_margin = min(path.min_margin, margin)
        path.samples.append((float(t), g))
    return path


@dataclass
class MonotonicityReport:
    checked: int
    violations: list = field(default_factory=list)   # (kind, block, factor)

    @property
    def passed(self) -> bool:
        return not self.violations


R_GRID = np.linspace(0.1, 1.0, 10)
S_GRID = np.linspace(1.0, 4.0, 7)


def hi_monotonicity_check(variant: str, params: CartanParams, w, seed=None,
                          r_grid=R_GRID, s_grid=S_GRID, tol: Tolerance = DEFAULT_TOL) -> MonotonicityReport:
    """Check that Im(psi~(p) w_k) stays in C when a hyperbolic pair is shrunk by
    r in (0, 1] or the circle pair is stretched by s >= 1.

    With a seed, ten random r and s values are added to the grids. Passing
    r values above 1 turns this into a negative control.
    """
    w = as_config(w)
    n = w.shape[0] - 1
    h = cartan_element(params, n)
    if not sigma_contains(h, w, tol):
        raise ValueError("precondition violated: h w is not in T^N")
    r_grid = np.asarray(r_grid, dtype=float)
    s_grid = np.asarray(s_grid, dtype=float)
    if seed is not None:
        rng = np.random.default_rng(seed)
        r_grid = np.concatenate([r_grid, rng.uniform(1e-3, 1.0, 10)])
        s_grid = np.concatenate([s_grid, 1.0 + rng.exponential(2.0, 10)])
    p = params.vector().reshape(-1, 2)
    first_hyp = 0 if variant == "H2" else 1
    report = MonotonicityReport(0)

    def check(kind, block, factor):
        q = p.copy()
        q[block] *= factor
        report.checked += 1
        if not np.all(cone_mask(image_imag(variant, q, w), tol)):
            report.violations.append((kind, block, float(factor)))

    for j in range(first_hyp, p.shape[0]):
        for r in r_grid:
            check("shrink", j, r)
    if variant != "H2":
        for s in s_grid:
            check("stretch", 0, s)
    return report
