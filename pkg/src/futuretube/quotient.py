"""The invariant quotient z -> z^T J z, isotropic radicals and closed orbits.

Rank decisions use one convention throughout: a singular value counts when it
exceeds rel_tol times a reference scale. For the column span of z the reference
is the largest singular value of z; for the Gram matrix it is the square of that
value, so that both ranks in the closed-orbit test are judged on the same scale.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .minkowski import DEFAULT_TOL, Tolerance, as_config, signature

ABS_FLOOR = 1e-13
PAIRING_COND_MAX = 1e12


class RankDecisionWarning(UserWarning):
    """A singular value sits within a decade of the rank threshold."""


class DegenerateRadicalError(ValueError):
    """The pairing r . conj(r') on the radical is singular.

    This cannot happen for points of the future tube, where every nonzero
    isotropic vector w of the span has w . conj(w) < 0.
    """


@dataclass(frozen=True)
class RankDecision:
    rank: int
    threshold: float
    ambiguous: bool


def rank_decision(singular_values, reference: float, tol: Tolerance = DEFAULT_TOL) -> RankDecision:
    s = np.asarray(singular_values, dtype=float)
    smax = float(s.max()) if s.size else 0.0
    thr = max(tol.rel_tol * reference, ABS_FLOOR * smax)
    rank = int(np.sum(s > thr))
    ambiguous = bool(thr > 0 and np.any((s > thr / 10) & (s <= thr * 10)))
    return RankDecision(rank, thr, ambiguous)


def numeric_rank(M, tol: Tolerance = DEFAULT_TOL, scale: float | None = None) -> int:
    """Number of singular values above rel_tol * scale (scale defaults to the largest one)."""
    s = np.linalg.svd(np.atleast_2d(M), compute_uv=False)
    reference = (s.max() if s.size else 0.0) if scale is None else scale
    return rank_decision(s, reference, tol).rank


def gram_quotient(z) -> np.ndarray:
    """pi_C(z) = z^T J z, the matrix of all products z_k . z_j."""
    z = as_config(z)
    M = (z.T * signature(z.shape[0])) @ z
    return 0.5 * (M + M.T)


def span_dimension(z, tol: Tolerance = DEFAULT_TOL) -> int:
    return numeric_rank(as_config(z), tol)


def _span_scale(z) -> float:
    s = np.linalg.svd(z, compute_uv=False)
    return float(s[0]) if s.size else 0.0


def gram_rank(z, tol: Tolerance = DEFAULT_TOL) -> int:
    z = as_config(z)
    return numeric_rank(gram_quotient(z), tol, scale=_span_scale(z) ** 2)


@dataclass(frozen=True)
class Radical:
    basis: np.ndarray          # (1+n, k), orthonormal columns spanning L(z)^0
    span_dim: int
    gram_rank: int
    ambiguous: bool

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def radical(z, tol: Tolerance = DEFAULT_TOL) -> Radical:
    """Isotropic radical of the span L(z).

    B spans L(z) (leading left singular vectors of z); the kernel of the
    restricted form B^T J B, lifted by B, is the radical.
    """
    z = as_config(z)
    dim = z.shape[0]
    U, s, _ = np.linalg.svd(z, full_matrices=False)
    smax = float(s[0]) if s.size else 0.0
    span = rank_decision(s, smax, tol)
    gram_s = np.linalg.svd(gram_quotient(z), compute_uv=False)
    gram = rank_decision(gram_s, smax ** 2, tol)
    ambiguous = span.ambiguous or gram.ambiguous
    k = span.rank - gram.rank
    if k < 0:
        ambiguous = True
        k = 0
    B = U[:, :span.rank]
    basis = np.zeros((dim, 0), dtype=complex)
    if k > 0:
        restricted = (B.T * signature(dim)) @ B
        _, rs, rvh = np.linalg.svd(restricted)
        # the kernel must sit below the same threshold that decided the Gram rank
        if rs[-k:].max() > 10 * gram.threshold:
            ambiguous = True
        basis = B @ rvh[-k:].conj().T
    if ambiguous:
        warnings.warn("rank decision is within a decade of the threshold", RankDecisionWarning, stacklevel=2)
    return Radical(basis, span.rank, gram.rank, ambiguous)


def radical_basis(z, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    return radical(z, tol).basis


def is_orbit_closed(z, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Closed complex orbit iff dim L(z) == rank pi_C(z), i.e. the radical is trivial."""
    r = radical(z, tol)
    return r.span_dim == r.gram_rank


@dataclass(frozen=True)
class IsotropicSplit:
    radical: np.ndarray        # (1+n, k)
    u: np.ndarray              # columns in W, perpendicular to the radical and its conjugate
    omega: np.ndarray          # columns in the radical
    pairing_condition: float
    ambiguous: bool = False


def isotropic_split(z, tol: Tolerance = DEFAULT_TOL) -> IsotropicSplit:
    """Write z_j = u_j + omega_j with omega_j in L(z)^0 and u_j . r = u_j . conj(r) = 0."""
    z = as_config(z)
    rad = radical(z, tol)
    R = rad.basis
    if rad.dim == 0:
        return IsotropicSplit(R, z.copy(), np.zeros_like(z), 1.0, rad.ambiguous)
    sig = signature(z.shape[0])
    Rbar = R.conj()
    G = (R.T * sig) @ Rbar                  # G[l, k] = r_l . conj(r_k)
    # the basis is orthonormal, so |G| <= 1 and 1 / s_min(G) measures how close
    # the pairing is to singular (np.linalg.cond would report 1 for any 1x1 G)
    s_min = float(np.linalg.svd(G, compute_uv=False).min())
    cond = 1.0 / s_min if s_min > 0 else np.inf
    if not np.isfinite(cond) or cond > PAIRING_COND_MAX:
        raise DegenerateRadicalError(
            f"pairing on the radical is singular (condition {cond:.3g}); "
            "the point is not in the future tube, where r . conj(r) < 0 for every radical vector")
    rhs = (Rbar.T * sig) @ z                # rhs[k, j] = z_j . conj(r_k)
    coeffs = np.linalg.solve(G.T, rhs)
    omega = R @ coeffs
    return IsotropicSplit(R, z - omega, omega, cond, rad.ambiguous)


def gamma_scale(split: IsotropicSplit, t: complex) -> np.ndarray:
    """Columns u_j + t omega_j: the one-parameter group scaling the radical by t."""
    return split.u + t * split.omega


def closed_orbit_representative(z, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """The t -> 0 limit u of the degeneration, a point of the unique closed orbit
    in the orbit closure of z."""
    return isotropic_split(z, tol).u
