"""The exhaustion rho(z) = sum_j 1/eta(Im z_j) of T^N, its moment map and the
rho-minimising flow along complex orbits, extended-tube membership witnesses,
slice normalisation, and the bound chains behind the exhaustion property.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm
from scipy.optimize import minimize

from . import group
from .minkowski import (DEFAULT_TOL, DomainError, Tolerance, as_config, cone_boost,
                        cone_mask, eta, in_future_tube, lorentz_product, signature)
from .quotient import gram_quotient, is_orbit_closed
from .sampling import case_rng, random_tube_point


def _tube_imag(z, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    z = as_config(z)
    y = z.imag
    if not np.all(cone_mask(y, tol)):
        raise DomainError("point is outside the future tube T^N")
    return y


def rho(z, tol: Tolerance = DEFAULT_TOL) -> float:
    y = _tube_imag(z, tol)
    return float(np.sum(1.0 / eta(y)))


def rho_gradient(z, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """d rho / d y, column j equal to -2 eta(y_j)^-2 J y_j (rho does not depend on x)."""
    y = _tube_imag(z, tol)
    sig = signature(y.shape[0])[:, None]
    return -2.0 * sig * y / eta(y) ** 2


def levi_blocks(z, tol: Tolerance = DEFAULT_TOL) -> list[np.ndarray]:
    """Complex Hessian d^2 rho / dz dzbar, one (1+n)x(1+n) block per column:
    (8 eta^-3 (Jy)(Jy)^T - 2 eta^-2 J) / 4."""
    y = _tube_imag(z, tol)
    sig = signature(y.shape[0])
    blocks = []
    for yj in y.T:
        e = eta(yj)
        Jy = sig * yj
        blocks.append(0.25 * (8.0 / e ** 3 * np.outer(Jy, Jy) - 2.0 / e ** 2 * np.diag(sig)))
    return blocks


def levi_eigenvalues(z, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    return np.concatenate([np.linalg.eigvalsh(b) for b in levi_blocks(z, tol)])


def levi_min_eigenvalue(z, tol: Tolerance = DEFAULT_TOL) -> float:
    return float(levi_eigenvalues(z, tol).min())


def moment_component(z, xi, tol: Tolerance = DEFAULT_TOL) -> float:
    """mu_xi(z) = d/dt rho(exp(i t xi) z) at t = 0.

    Along exp(i t xi) the imaginary part moves as y_j + t xi x_j, so
    mu_xi = sum_j -2 eta(y_j)^-2 y_j . (xi x_j).
    """
    z = as_config(z)
    y = _tube_imag(z, tol)
    v = np.asarray(xi, dtype=float) @ z.real
    return float(np.sum(-2.0 * lorentz_product(y, v) / eta(y) ** 2))


def moment_map(z, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Coefficients mu_a = mu_{xi_a}(z) over the fixed so(1,n) basis (boosts, then rotations)."""
    z = as_config(z)
    y = _tube_imag(z, tol)
    n = z.shape[0] - 1
    x = z.real
    w = -2.0 * (signature(1 + n)[:, None] * y) / eta(y) ** 2      # J y_j scaled
    # mu_a = sum_j w_j^T xi_a x_j = <xi_a, sum_j w_j x_j^T>
    S = w @ x.T
    basis = np.array(group.algebra_basis(n))
    return np.einsum("aij,ij->a", basis, S)


# ---------------------------------------------------------------- flow

@dataclass(frozen=True)
class FlowOptions:
    step0: float = 0.1
    mu_tol: float = 1e-6
    max_iter: int = 5000
    min_step: float = 1e-14
    direction: str = "lbfgs"      # or "gradient": plain -mu with every search starting at step0
    memory: int = 10
    max_move: float = 5.0         # cap on |s xi| for one step


@dataclass
class FlowResult:
    final_point: np.ndarray
    accumulated_group: group.GroupElement
    converged: bool
    iterations: int
    trace: list = field(default_factory=list)     # (iteration, rho, |mu|)
    message: str = ""

    @property
    def final_rho(self) -> float:
        return self.trace[-1][1]

    @property
    def final_mu_norm(self) -> float:
        return self.trace[-1][2]


def _two_loop(mu, pairs):
    """L-BFGS inverse-Hessian estimate applied to mu."""
    q = mu.copy()
    alphas = []
    for s, y in reversed(pairs):
        a = (s @ q) / (y @ s)
        alphas.append(a)
        q -= a * y
    if pairs:
        s, y = pairs[-1]
        q *= (s @ y) / (y @ y)
    for (s, y), a in zip(pairs, reversed(alphas)):
        b = (y @ q) / (y @ s)
        q += s * (a - b)
    return q


def _expm_minus_identity(A) -> np.ndarray:
    """exp(A) - I without cancellation for small A."""
    if np.linalg.norm(A, ord=np.inf) > 0.1:
        return expm(A) - np.eye(A.shape[0])
    term = A.copy()
    total = A.copy()
    for k in range(2, 16):
        term = term @ A / k
        total += term
    return total


def _line_search(z, d, current, s, opts, tol):
    """Halve s until exp(i s xi) z stays in T^N and rho strictly drops.

    The change of rho is evaluated from the displacement dz = (exp(i s xi) - I) z,
    as sum_j -(eta(y_j + dy_j) - eta(y_j)) / (eta(y_j) eta(y_j + dy_j)); near a
    minimum this resolves decreases far below the rounding level of rho itself.
    """
    n = z.shape[0] - 1
    s = min(s, opts.max_move / np.linalg.norm(d))
    xi = group.combine(d, n)
    y = z.imag
    eta_old = eta(y)
    while s >= opts.min_step:
        E = _expm_minus_identity(1j * s * xi)
        dz = E @ z
        candidate = z + dz
        if np.all(np.isfinite(candidate)) and in_future_tube(candidate, tol):
            dy = dz.imag
            d_eta = lorentz_product(dy, 2 * y + dy)
            change = float(np.sum(-d_eta / (eta_old * eta(candidate.imag))))
            if change < 0:
                return s, np.eye(1 + n) + E, candidate, current + change
        s *= 0.5
    return None


def minimize_rho_on_orbit(z, opts: FlowOptions = FlowOptions(), tol: Tolerance = DEFAULT_TOL) -> FlowResult:
    """Minimise rho over the complex orbit through z inside T^N.

    Each step is z <- exp(i s xi) z. With direction="gradient", xi = -sum_a mu_a xi_a
    and the step starts at opts.step0. The default "lbfgs" preconditions mu by an
    L-BFGS estimate built from moment-map differences in the fixed basis (the
    group action identifies all tangent spaces with the algebra); the trial step
    is then 1. In both cases the step is halved until rho decreases and the
    iterate stays in T^N.

    Critical points exist only on closed orbits, so on a non-closed orbit the
    result is never reported as converged even when |mu| falls below mu_tol.
    """
    if opts.direction not in ("lbfgs", "gradient"):
        raise ValueError(f"unknown flow direction {opts.direction!r}")
    z = as_config(z).copy()
    n = z.shape[0] - 1
    current = rho(z, tol)
    closed = is_orbit_closed(z, tol)
    acc = np.eye(1 + n, dtype=complex)
    trace = []
    pairs = []
    mu = moment_map(z, tol)
    for it in range(opts.max_iter + 1):
        mu_norm = float(np.linalg.norm(mu))
        trace.append((it, current, mu_norm))
        if mu_norm <= opts.mu_tol:
            if not closed:
                return FlowResult(z, group.validate_group(acc), False, it, trace,
                                  "moment map below tolerance on a non-closed orbit: "
                                  "rho approaches its infimum without attaining it")
            return FlowResult(z, group.validate_group(acc), True, it, trace, "moment map vanished")
        if it == opts.max_iter:
            break
        if opts.direction == "lbfgs":
            d = -_two_loop(mu, pairs)
            if d @ mu >= 0:
                d, pairs = -mu, []
        else:
            d = -mu
        found = _line_search(z, d, current, 1.0 if pairs else opts.step0, opts, tol)
        if found is None and pairs:
            # stale curvature pairs: fall back to the plain moment direction
            pairs, d = [], -mu
            found = _line_search(z, d, current, opts.step0, opts, tol)
        if found is None:
            return FlowResult(z, group.validate_group(acc), False, it, trace,
                              f"line search failed below step {opts.min_step:g}")
        s, step, candidate, value = found
        mu_new = moment_map(candidate, tol)
        if opts.direction == "lbfgs":
            ds, dy = s * d, mu_new - mu
            if ds @ dy > 1e-16 * (ds @ ds):
                pairs = (pairs + [(ds, dy)])[-opts.memory:]
        z, current, acc, mu = candidate, value, step @ acc, mu_new
    return FlowResult(z, group.validate_group(acc), False, opts.max_iter, trace,
                      f"no convergence within {opts.max_iter} iterations")


# ---------------------------------------------------------------- membership

MEMBER = "member"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class MembershipOptions:
    starts: int = 16
    margin: float = 1e-3
    seed: int = 0
    start_scale: float = 1.0
    box: float = 4.0
    maxiter: int = 400


@dataclass(frozen=True)
class MembershipVerdict:
    status: str
    witness: group.GroupElement | None
    residual: float

    @property
    def member(self) -> bool:
        return self.status == MEMBER


def tube_violation(w, margin: float) -> float:
    """sum_j h(margin - eta(y_j)) + h(margin - y_j0) with h(s) = max(0, s)^2."""
    y = np.asarray(w).imag
    a = np.maximum(0.0, margin - eta(y))
    b = np.maximum(0.0, margin - y[0])
    return float(np.sum(a * a + b * b))


class _Found(Exception):
    def __init__(self, g):
        self.g = g


def membership_certify(z, opts: MembershipOptions = MembershipOptions(),
                       tol: Tolerance = DEFAULT_TOL) -> MembershipVerdict:
    """Search for g = exp(iA) exp(B) with g z in T^N.

    Multi-start local minimisation of the tube violation over the real
    coordinates of A and B. Returns "member" with a verified witness or
    "unknown"; it never claims non-membership.
    """
    z = as_config(z)
    n = z.shape[0] - 1
    basis = np.array(group.algebra_basis(n))
    d = basis.shape[0]

    def element(params):
        A = np.tensordot(params[:d], basis, axes=1)
        B = np.tensordot(params[d:], basis, axes=1)
        return expm(1j * A) @ expm(B)

    def accept(g):
        w = g @ z
        return tube_violation(w, opts.margin) == 0.0 and in_future_tube(w, tol)

    if accept(np.eye(1 + n)):
        return MembershipVerdict(MEMBER, group.identity(n), 0.0)

    # optimise against a doubled margin so the iterates land strictly inside
    def objective(params):
        g = element(params)
        if accept(g):
            raise _Found(g)
        return tube_violation(g @ z, 2 * opts.margin)

    rng = np.random.default_rng(opts.seed)
    best = np.inf
    bounds = [(-opts.box, opts.box)] * (2 * d)
    for k in range(opts.starts):
        x0 = np.zeros(2 * d) if k == 0 else rng.uniform(-opts.start_scale, opts.start_scale, 2 * d)
        try:
            res = minimize(objective, x0, method="L-BFGS-B", bounds=bounds,
                           options={"maxiter": opts.maxiter})
        except _Found as hit:
            g = group.validate_group(hit.g)
            return MembershipVerdict(MEMBER, g, 0.0)
        best = min(best, float(res.fun))
    return MembershipVerdict(UNKNOWN, None, best)


# ---------------------------------------------------------------- slice and exhaustion

def slice_normalize(z, tol: Tolerance = DEFAULT_TOL):
    """Real boost g with Im(g z)_1 on the positive time axis; returns (g, g z)."""
    y = _tube_imag(z, tol)
    g = group.validate_group(cone_boost(y[:, 0], tol))
    return g, group.apply(g, z)


@dataclass(frozen=True)
class ExhaustionBounds:
    """Bounds implied by |eta(x) - eta(y)| <= M and |x . y| <= M for x + iy in T."""
    M: float
    xy_max: float
    eta_y_max: float
    eta_x_max: float
    eta_x_min: float

    @staticmethod
    def pair_mixed_max(M1: float, M2: float) -> float:
        """|x_1 . x_2| and |y_1 . y_2| given single-copy bound M1 and sum bound M2."""
        return 1.5 * max(M1, M2)

    @property
    def single_max(self) -> float:
        """One constant bounding |x . y|, |eta(x)| and eta(y)."""
        return max(self.xy_max, self.eta_y_max, self.eta_x_max, -self.eta_x_min)


def exhaustion_bounds(M: float) -> ExhaustionBounds:
    if M < 0:
        raise ValueError("M must be nonnegative")
    # eta(y)(eta(y) - M) <= eta(x) eta(y) <= (x . y)^2 <= M^2
    eta_y = M * (1 + np.sqrt(5.0)) / 2
    return ExhaustionBounds(M, M, eta_y, eta_y + M, -M)


@dataclass
class AuditReport:
    samples: int
    accepted: int
    supremum: float | None
    half_supremum: float | None
    stable: bool
    bound_violations: int
    checks: dict = field(default_factory=dict)
    message: str = ""


def _bound_violations(z, gram_bound: float, r: float, normalized) -> dict:
    """Per-sample inequalities; returns the worst slack of each (positive = violated)."""
    x, y = z.real, z.imag
    N = z.shape[1]
    single = exhaustion_bounds(gram_bound)
    # |z_j . z_j| <= gram_bound bounds both |eta(x)-eta(y)| and 2|x.y|
    slack = {
        "xy": float(np.max(np.abs(lorentz_product(x, y)) - single.xy_max)),
        "eta_y": float(np.max(eta(y) - single.eta_y_max)),
        "eta_x": float(np.max(np.maximum(eta(x) - single.eta_x_max, single.eta_x_min - eta(x)))),
    }
    # eta(z_1 + z_2) = G11 + G22 + 2 G12 is bounded by 4 gram_bound
    M1 = single.single_max
    M2 = exhaustion_bounds(4 * gram_bound).single_max
    pair = ExhaustionBounds.pair_mixed_max(M1, M2)
    worst = -np.inf
    for j in range(N):
        for k in range(j + 1, N):
            worst = max(worst, abs(lorentz_product(x[:, j], x[:, k])) - pair,
                        abs(lorentz_product(y[:, j], y[:, k])) - pair)
    slack["pair"] = float(worst) if N > 1 else -np.inf
    # the normalised first column is t e_0 with 1/r <= t^2 <= eta_y_max
    y1 = normalized.imag[:, 0]
    t2 = y1[0] ** 2
    slack["slice_axis"] = float(np.max(np.abs(y1[1:])) - 1e-9 * abs(y1[0])) if y1.size > 1 else -np.inf
    slack["slice_lower"] = float(1.0 / r - t2 - 1e-12 * t2)
    slack["slice_upper"] = float(t2 - single.eta_y_max * (1 + 1e-12))
    return slack


def exhaustion_audit(gram_bound: float, r: float, samples: int, seed: int, n: int = 2, N: int = 2,
                     scale: float = 0.5, x_scale: float = 1.0) -> AuditReport:
    """Empirical check that {|pi_C| <= gram_bound, rho <= r} is bounded modulo the real group.

    Samples T^N, keeps the points passing the filter, slice-normalises them and
    records the largest Euclidean norm of the normalised representative, once
    over the first half of the samples and once over all of them.
    """
    if r <= 0 or gram_bound <= 0:
        raise ValueError("r and gram_bound must be positive")
    norms = []
    halves = []
    worst = {}
    violations = 0
    for k in range(samples):
        rng = case_rng(seed, "exhaustion", k)
        z = random_tube_point(rng, n, N, scale=scale, x_scale=x_scale)
        if np.max(np.abs(gram_quotient(z))) > gram_bound or rho(z) > r:
            continue
        _, w = slice_normalize(z)
        norm = float(np.linalg.norm(w))
        norms.append(norm)
        halves.append(k < samples // 2)
        slack = _bound_violations(z, gram_bound, r, w)
        if max(slack.values()) > 0:
            violations += 1
        for key, v in slack.items():
            worst[key] = max(worst.get(key, -np.inf), v)
    if not norms:
        return AuditReport(samples, 0, None, None, False, 0, {},
                           "no sample passed the filter")
    norms = np.array(norms)
    sup = float(norms.max())
    half = norms[np.array(halves)]
    half_sup = float(half.max()) if half.size else None
    stable = bool(np.isfinite(sup) and half_sup is not None and abs(sup - half_sup) < 0.2 * half_sup)
    return AuditReport(samples, len(norms), sup, half_sup, stable, violations, worst)
