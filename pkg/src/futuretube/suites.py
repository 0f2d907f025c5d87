"""Named verification suites. Each binds one mathematical statement to a seeded,
replayable batch of numerical checks.

Case k of suite s draws its randomness from case_rng(seed, s, k), so results do
not depend on how the cases are distributed over worker threads.
"""
from __future__ import annotations

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from . import group
from .connect import (SigmaContainmentError, PathDegeneracyError, cartan_path, hi_monotonicity_check,
                      sigma_contains)
from .io import config_point_to_json, group_to_json
from .kaehler import (FlowOptions, MembershipOptions, exhaustion_audit, levi_eigenvalues, levi_min_eigenvalue,
                      membership_certify, minimize_rho_on_orbit, moment_map, rho)
from .minkowski import DEFAULT_TOL, Tolerance, cauchy_schwarz_defect, eta, in_future_tube, lorentz_product
from .quotient import gram_quotient, gram_rank, isotropic_split, numeric_rank, radical
from .sampling import (case_rng, derive_seed, planted_radical_point, random_cone_vectors, random_conforming_pair,
                       random_tube_point)

MAX_FAILURE_DUMPS = 10
PLANTED_LABEL = "planted-radical"
GAMMA_TIMES = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0)
CONCAVITY_TIMES = np.linspace(-2.0, 2.0, 11)


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by all suites. `samples=None` means the suite's own default;
    n and N default to the suite's sampling range when None."""
    seed: int = 0
    tol: Tolerance = DEFAULT_TOL
    n: int | None = None
    N: int | None = None
    samples: int | None = None
    r: float = 10.0
    gram_bound: float = 10.0
    starts: int = 16
    max_iter: int = 5000
    threads: int = 1

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        for name in ("n", "N", "samples"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"{name} must be positive")
        for name in ("r", "gram_bound", "starts", "max_iter", "threads"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def threads_from_env(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get("LTK_THREADS", default)))
    except ValueError:
        return default


@dataclass
class Check:
    name: str
    passed: bool
    measured: float
    threshold: float
    cases: int = 0
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "measured": self.measured,
               "threshold": self.threshold, "cases": self.cases}
        out.update(self.detail)
        return out


@dataclass
class SuiteResult:
    suite: str
    checks: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, measured, threshold, cases=0, **detail):
        self.checks.append(Check(name, bool(passed), float(measured), float(threshold), cases, detail))

    def dump(self, check: str, case: int, **inputs):
        if sum(f["check"] == check for f in self.failures) < MAX_FAILURE_DUMPS:
            self.failures.append({"check": check, "case": case, **inputs})

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks], "failures": self.failures}


def _map(fn, count: int, threads: int) -> list:
    """fn(k) for k = 0..count-1, returned in index order whatever the thread count."""
    if threads <= 1:
        return [fn(k) for k in range(count)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, range(count)))


def _pick(rng, fixed, lo, hi):
    return int(fixed) if fixed is not None else int(rng.integers(lo, hi + 1))


# ---------------------------------------------------------------- reverse Cauchy-Schwarz

def suite_cauchy_schwarz(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("cauchy-schwarz")
    samples = cfg.samples or 100_000
    batch = 1000
    batches = -(-samples // batch)

    def random_batch(b):
        rng = case_rng(cfg.seed, "cauchy-schwarz", b)
        n = cfg.n or 1 + b % 4
        size = min(batch, samples - b * batch)
        y = random_cone_vectors(rng, n, size)
        y *= np.where(rng.uniform(size=size) < 0.5, -1.0, 1.0)
        x = rng.uniform(-1, 1, (1 + n, size)) * np.exp(rng.uniform(np.log(0.1), np.log(10), size))
        d = cauchy_schwarz_defect(x, y)
        j = int(np.argmin(d))
        return float(d[j]), x[:, j], y[:, j]

    out = _map(random_batch, batches, cfg.threads)
    worst = min(o[0] for o in out)
    res.add("defect_nonnegative", worst >= -1e-12, worst, -1e-12, samples)
    for b, (d, x, y) in enumerate(out):
        if d < -1e-12:
            res.dump("defect_nonnegative", b, x=x, y=y, defect=d)

    rng = case_rng(cfg.seed, "cauchy-schwarz/dependent", 0)
    worst_ratio = 0.0
    dependent = 1000
    for k in range(dependent):
        n = cfg.n or 1 + k % 4
        y = random_cone_vectors(rng, n, 1)[:, 0]
        x = rng.uniform(-3, 3) * y
        scale = max(np.linalg.norm(x), np.linalg.norm(y))
        ratio = abs(float(cauchy_schwarz_defect(x, y))) / (1e-10 * scale ** 4)
        worst_ratio = max(worst_ratio, ratio)
        if ratio > 1:
            res.dump("dependent_defect", k, x=x, y=y)
    res.add("dependent_defect", worst_ratio <= 1, worst_ratio, 1.0, dependent,
            note="measured is max |defect| / (1e-10 scale^4)")
    return res


# ---------------------------------------------------------------- quotient invariance

def suite_invariance(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("invariance")
    samples = cfg.samples or 1000

    def case(k):
        rng = case_rng(cfg.seed, "invariance", k)
        n = _pick(rng, cfg.n, 1, 4)
        N = _pick(rng, cfg.N, 1, 5)
        g = group.random_group_element_rng(rng, 1.0, "complex", n)
        z = random_tube_point(rng, n, N)
        P = gram_quotient(z)
        err = float(np.max(np.abs(gram_quotient(g.matrix @ z) - P)))
        bound = 1e-9 * float(np.max(np.abs(P))) + 1e-12
        limit = min(1 + n, N)
        ranks_ok = gram_rank(z, cfg.tol) <= limit and numeric_rank(P, cfg.tol) <= limit
        return err / bound, ranks_ok, g, z

    out = _map(case, samples, cfg.threads)
    worst = max(o[0] for o in out)
    bad_rank = sum(not o[1] for o in out)
    for k, (ratio, ok, g, z) in enumerate(out):
        if ratio > 1:
            res.dump("quotient_invariant", k, group=group_to_json(g), point=config_point_to_json(z))
        if not ok:
            res.dump("rank_bound", k, point=config_point_to_json(z))
    res.add("quotient_invariant", worst <= 1, worst, 1.0, samples,
            note="measured is max error / (1e-9 |pi(z)|_max + 1e-12)")
    res.add("rank_bound", bad_rank == 0, bad_rank, 0, samples)
    return res


# ---------------------------------------------------------------- planted radicals

def planted_case(cfg: RunConfig, k: int):
    """Case k of the planted-radical family: radical dimension k mod 3."""
    rng = case_rng(cfg.seed, PLANTED_LABEL, k)
    n = cfg.n or 4
    dim = k % 3 if n >= 4 else k % (n // 2 + 1)
    d = int(rng.integers(1, n - 2 * dim + 2))
    z, _ = planted_radical_point(rng, n, dim, d, margin=0.1, t_range=max(abs(t) for t in GAMMA_TIMES))
    return rng, dim, z


def suite_radical_lemmas(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("radical-lemmas")
    samples = cfg.samples or 500

    def case(k):
        rng, dim, z = planted_case(cfg, k)
        rad = radical(z, cfg.tol)
        R = rad.basis
        vectors = [R[:, l] for l in range(rad.dim)]
        for _ in range(3 if rad.dim else 0):
            c = rng.standard_normal(rad.dim) + 1j * rng.standard_normal(rad.dim)
            vectors.append(R @ c)
        worst_eta, worst_pair = -np.inf, -np.inf
        for r in vectors:
            r = r / np.linalg.norm(r)
            worst_eta = max(worst_eta, float(eta(r.imag)))
            worst_pair = max(worst_pair, float(lorentz_product(r, r.conj()).real))
        return dim, rad, worst_eta, worst_pair, z

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        out = _map(case, samples, cfg.threads)
    wrong_dim = wrong_closed = ambiguous = 0
    worst_eta = worst_pair = -np.inf
    for k, (dim, rad, e, p, z) in enumerate(out):
        if rad.dim != dim:
            wrong_dim += 1
            res.dump("radical_dimension", k, planted=dim, found=rad.dim, point=config_point_to_json(z))
        if (rad.span_dim == rad.gram_rank) != (dim == 0):
            wrong_closed += 1
            res.dump("closed_criterion", k, planted=dim, point=config_point_to_json(z))
        if rad.ambiguous:
            ambiguous += 1
            res.dump("rank_warnings", k, point=config_point_to_json(z))
        worst_eta, worst_pair = max(worst_eta, e), max(worst_pair, p)
        if e >= -1e-6 or p >= -1e-6:
            res.dump("radical_signs", k, eta_im=e, pairing=p, point=config_point_to_json(z))
    res.add("radical_dimension", wrong_dim == 0, wrong_dim, 0, samples)
    res.add("closed_criterion", wrong_closed == 0, wrong_closed, 0, samples)
    res.add("rank_warnings", ambiguous == 0, ambiguous, 0, samples)
    res.add("eta_im_radical_negative", worst_eta < -1e-6, worst_eta, -1e-6, samples)
    res.add("radical_pairing_negative", worst_pair < -1e-6, worst_pair, -1e-6, samples)
    return res


# ---------------------------------------------------------------- degeneration

WORKED_EXAMPLE = np.array([[2j, 1j], [1.0, 0.0], [1j, 0.0]])


def suite_degeneration(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("degeneration")
    samples = cfg.samples or 500

    def case(k):
        _, dim, z = planted_case(cfg, k)
        split = isotropic_split(z, cfg.tol)
        u, w = split.u, split.omega
        P = gram_quotient(z)
        pi_err = float(np.max(np.abs(gram_quotient(u) - P)) / np.max(np.abs(P)))
        drop = rho(u) - rho(z) if dim else -np.inf
        closed = radical(u, cfg.tol)
        u_closed = closed.span_dim == closed.gram_rank
        in_tube = all(in_future_tube(u + t * w, cfg.tol) for t in GAMMA_TIMES)
        f = np.array([eta((u + t * w).imag) for t in CONCAVITY_TIMES])
        second = float(np.max(f[2:] - 2 * f[1:-1] + f[:-2])) if dim else -np.inf
        return pi_err, drop, u_closed, in_tube, second, z

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        out = _map(case, samples, cfg.threads)
    names = ("quotient_preserved", "rho_drops", "limit_closed", "curve_in_tube", "curve_concave")
    worst = {"quotient_preserved": 0.0, "rho_drops": -np.inf, "curve_concave": -np.inf}
    bad = dict.fromkeys(names, 0)
    for k, (pi_err, drop, u_closed, in_tube, second, z) in enumerate(out):
        fails = {"quotient_preserved": pi_err > 1e-8, "rho_drops": not drop < 0,
                 "limit_closed": not u_closed, "curve_in_tube": not in_tube,
                 "curve_concave": not second <= -1e-9}
        worst["quotient_preserved"] = max(worst["quotient_preserved"], pi_err)
        worst["rho_drops"] = max(worst["rho_drops"], drop)
        worst["curve_concave"] = max(worst["curve_concave"], second)
        for name, failed in fails.items():
            if failed:
                bad[name] += 1
                res.dump(name, k, point=config_point_to_json(z))
    res.add("quotient_preserved", bad["quotient_preserved"] == 0, worst["quotient_preserved"], 1e-8, samples)
    res.add("rho_drops", bad["rho_drops"] == 0, worst["rho_drops"], 0.0, samples,
            note="measured is max rho(u) - rho(z) over cases with a radical")
    res.add("limit_closed", bad["limit_closed"] == 0, bad["limit_closed"], 0, samples)
    res.add("curve_in_tube", bad["curve_in_tube"] == 0, bad["curve_in_tube"], 0, samples,
            times=list(GAMMA_TIMES))
    res.add("curve_concave", bad["curve_concave"] == 0, worst["curve_concave"], -1e-9, samples)

    split = isotropic_split(WORKED_EXAMPLE, cfg.tol)
    rz, ru = rho(WORKED_EXAMPLE), rho(split.u)
    err = max(abs(rz - 4 / 3), abs(ru - 5 / 4))
    res.add("worked_example_rho", err <= 1e-9, err, 1e-9, 1, rho_z=rz, rho_u=ru)
    return res


# ---------------------------------------------------------------- moment map

FD_STEP = 1e-5


def finite_difference_moment(z, h: float = FD_STEP) -> np.ndarray:
    """Five-point central differences of t -> rho(exp(i t xi_a) z) at t = 0."""
    n = z.shape[0] - 1
    out = []
    for xi in group.algebra_basis(n):
        f = {s: rho(expm(1j * s * h * xi) @ z) for s in (-2, -1, 1, 2)}
        out.append((8 * (f[1] - f[-1]) - (f[2] - f[-2])) / (12 * h))
    return np.array(out)


def suite_moment_fd(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("moment-fd")
    samples = cfg.samples or 200

    def case(k):
        rng = case_rng(cfg.seed, "moment-fd", k)
        n = _pick(rng, cfg.n, 1, 4)
        N = _pick(rng, cfg.N, 1, 5)
        z = random_tube_point(rng, n, N)
        mu = moment_map(z, cfg.tol)
        fd = finite_difference_moment(z)
        rel = float(np.max(np.abs(fd - mu)) / max(np.max(np.abs(mu)), 1e-300))
        zi = 1j * random_cone_vectors(rng, n, N)
        exact_zero = bool(np.all(moment_map(zi, cfg.tol) == 0))
        return rel, exact_zero, z, zi

    out = _map(case, samples, cfg.threads)
    worst = max(o[0] for o in out)
    nonzero = 0
    for k, (rel, exact_zero, z, zi) in enumerate(out):
        if rel > 1e-6:
            res.dump("finite_difference", k, point=config_point_to_json(z), relative_error=rel)
        if k < 100 and not exact_zero:
            nonzero += 1
            res.dump("zero_on_imaginary", k, point=config_point_to_json(zi))
    res.add("finite_difference", worst <= 1e-6, worst, 1e-6, samples,
            note="relative to max |mu_a| at the point", step=FD_STEP)
    res.add("zero_on_imaginary", nonzero == 0, nonzero, 0, min(samples, 100))
    return res


# ---------------------------------------------------------------- Levi form

def suite_levi(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("levi")
    samples = cfg.samples or 200

    def case(k):
        rng = case_rng(cfg.seed, "levi", k)
        n = _pick(rng, cfg.n, 1, 4)
        N = _pick(rng, cfg.N, 1, 5)
        z = random_tube_point(rng, n, N)
        return levi_min_eigenvalue(z, cfg.tol), z

    out = _map(case, samples, cfg.threads)
    worst = min(o[0] for o in out)
    for k, (lam, z) in enumerate(out):
        if not lam > 0:
            res.dump("positive_definite", k, point=config_point_to_json(z))
    res.add("positive_definite", worst > 0, worst, 0.0, samples)
    ev = np.sort(levi_eigenvalues(np.array([[1j], [0.0], [0.0]])))
    err = float(np.max(np.abs(ev - [0.5, 0.5, 1.5])))
    res.add("reference_eigenvalues", err <= 1e-10, err, 1e-10, 1, eigenvalues=ev)
    return res


# ---------------------------------------------------------------- reduction flow

def reduction_case(cfg: RunConfig, k: int):
    """z = g z0 with z0 purely imaginary; real g for even k, complex g for odd k.
    Draws of g that leave the tube are redrawn."""
    rng = case_rng(cfg.seed, "reduction", k)
    n = _pick(rng, cfg.n, 1, 4)
    N = _pick(rng, cfg.N, 1, 4)
    z0 = 1j * random_cone_vectors(rng, n, N)
    realness = "real0" if k % 2 == 0 else "complex"
    while True:
        g = group.random_group_element_rng(rng, 0.5, realness, n)
        z = g.matrix @ z0
        if in_future_tube(z, cfg.tol):
            return z0, g, z


def suite_reduction(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("reduction")
    samples = cfg.samples or 50
    opts = FlowOptions(mu_tol=1e-6, max_iter=cfg.max_iter)

    def case(k):
        z0, g, z = reduction_case(cfg, k)
        flow = minimize_rho_on_orbit(z, opts, cfg.tol)
        return flow, abs(flow.final_rho - rho(z0)), z

    out = _map(case, samples, cfg.threads)
    unconverged = 0
    worst = 0.0
    for k, (flow, gap, z) in enumerate(out):
        worst = max(worst, gap)
        if not flow.converged:
            unconverged += 1
            res.dump("flow_converges", k, point=config_point_to_json(z), message=flow.message)
        if gap > 1e-5:
            res.dump("rho_minimum", k, point=config_point_to_json(z), gap=gap)
    res.add("flow_converges", unconverged == 0, unconverged, 0, samples,
            max_iterations=max(f.iterations for f, _, _ in out))
    res.add("rho_minimum", worst <= 1e-5, worst, 1e-5, samples)
    return res


# ---------------------------------------------------------------- membership

def membership_member_case(cfg: RunConfig, k: int):
    rng = case_rng(cfg.seed, "membership", k)
    n = _pick(rng, cfg.n, 1, 4)
    N = _pick(rng, cfg.N, 1, 4)
    w = random_tube_point(rng, n, N)
    g = group.random_group_element_rng(rng, 0.5, "complex", n)
    return np.linalg.solve(g.matrix, w)


def spacelike_real_case(cfg: RunConfig, k: int):
    rng = case_rng(cfg.seed, "membership/real", k)
    n = _pick(rng, cfg.n, 1, 3)
    N = _pick(rng, cfg.N, 1, 3)
    cols = []
    while len(cols) < N:
        x = rng.uniform(-1, 1, 1 + n)
        if eta(x) < 0:
            cols.append(x)
    return np.array(cols).T.astype(complex)


def suite_membership(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("membership")
    samples = cfg.samples or 200

    def member_case(k):
        z = membership_member_case(cfg, k)
        v = membership_certify(z, MembershipOptions(starts=cfg.starts, seed=k), cfg.tol)
        witness_ok = v.witness is None or in_future_tube(v.witness.matrix @ z, cfg.tol)
        return v, witness_ok, z

    def real_case(k):
        z = spacelike_real_case(cfg, k)
        v = membership_certify(z, MembershipOptions(starts=cfg.starts, seed=k), cfg.tol)
        witness_ok = v.witness is None or in_future_tube(v.witness.matrix @ z, cfg.tol)
        return v, witness_ok, z

    out = _map(member_case, samples, cfg.threads)
    members = sum(v.member for v, _, _ in out)
    for k, (v, ok, z) in enumerate(out):
        if not v.member:
            res.dump("member_rate", k, point=config_point_to_json(z), residual=v.residual)
    rate = members / samples
    res.add("member_rate", rate >= 0.95, rate, 0.95, samples)

    # 50 spacelike real points by default; fewer when a smaller sample count is requested
    reals = _map(real_case, 50 if cfg.samples is None else min(50, samples), cfg.threads)
    zero = membership_certify(np.zeros((3, 1), dtype=complex), MembershipOptions(starts=cfg.starts), cfg.tol)
    bad = [not ok for _, ok, _ in out + reals]
    bad.append(zero.member)
    for k, (v, ok, z) in enumerate(reals):
        if not ok:
            res.dump("no_false_members", k, point=config_point_to_json(z))
    res.add("no_false_members", sum(bad) == 0, sum(bad), 0, len(bad),
            zero_status=zero.status, real_members_with_witness=sum(v.member for v, _, _ in reals))
    return res


# ---------------------------------------------------------------- Cartan paths

VARIANT_DIMS = {"H0": (1, 3), "H1": (2, 4), "H2": (2, 4)}
PATH_SAMPLES = 64


def suite_cartan_path(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("cartan-path")
    per_variant = cfg.samples or 100

    def case(args):
        variant, k = args
        rng = case_rng(cfg.seed, f"cartan-path/{variant}", k)
        dims = VARIANT_DIMS[variant]
        n = cfg.n if cfg.n is not None and cfg.n % 2 == dims[0] % 2 else dims[k % 2]
        N = _pick(rng, cfg.N, 1, 3)
        params, w = random_conforming_pair(rng, variant, n, N)
        h = group.cartan_element(params, n)
        out = {"variant": variant, "params": params.vector(), "w": w}
        try:
            path = cartan_path(variant, params, w, PATH_SAMPLES, cfg.tol)
        except (SigmaContainmentError, PathDegeneracyError) as exc:
            out.update(path_ok=False, error=str(exc), endpoint=np.inf, constraint=np.inf)
        else:
            out.update(path_ok=len(path.samples) == PATH_SAMPLES,
                       endpoint=float(np.max(np.abs(path.samples[-1][1].matrix - h.matrix))),
                       constraint=float(max(group.CartanParams.from_vector(variant, q).constraint_residual()
                                            for q in path.parameters())),
                       margin=path.min_margin)
        mono_seed = derive_seed(cfg.seed, f"cartan-path/{variant}/monotonicity", k)
        mono = hi_monotonicity_check(variant, params, w, seed=mono_seed, tol=cfg.tol)
        out["monotonicity"] = len(mono.violations)
        return out

    jobs = [(v, k) for v in VARIANT_DIMS for k in range(per_variant)]
    out = _map(lambda i: case(jobs[i]), len(jobs), cfg.threads)
    failed_paths = sum(not o["path_ok"] for o in out)
    endpoint = max(o["endpoint"] for o in out)
    constraint = max(o["constraint"] for o in out)
    mono = sum(o["monotonicity"] for o in out)
    for k, o in enumerate(out):
        if not o["path_ok"] or o["endpoint"] > 1e-9 or o["monotonicity"]:
            res.dump("paths", k, variant=o["variant"], params=o["params"], w=config_point_to_json(o["w"]))
    res.add("paths_in_sigma", failed_paths == 0, failed_paths, 0, len(out), samples_per_path=PATH_SAMPLES)
    res.add("endpoint_fidelity", endpoint <= 1e-9, endpoint, 1e-9, len(out))
    res.add("constraints_along_path", constraint <= 1e-9, constraint, 1e-9, len(out))
    res.add("monotonicity", mono == 0, mono, 0, len(out))

    # epsilon reverses the time component and H2 elements keep it, so h epsilon w is never in the tube
    rng = case_rng(cfg.seed, "cartan-path/epsilon", 0)
    hits = 0
    for k in range(100):
        n = (2, 4)[k % 2]
        w = random_tube_point(rng, n, _pick(rng, cfg.N, 1, 3))
        params = group.CartanParams.from_angles("H2", None, rng.uniform(-1.5, 1.5, n // 2))
        g = group.cartan_element(params, n).matrix @ group.epsilon(n).matrix
        hits += sigma_contains(g, w, cfg.tol)
    res.add("epsilon_coset_empty", hits == 0, hits, 0, 100)

    control = negative_control_report(cfg.tol)
    res.add("negative_control_detected", not control.passed, len(control.violations), 1, 1)
    return res


def negative_control_report(tol: Tolerance = DEFAULT_TOL):
    """Stretching a hyperbolic pair by r = 3 must push this configuration out of the tube.

    w = i e_0 + e_2 and (c, d) = (cosh s, sinh s) with sinh s = 1/2 give
    Im(psi~ w) = (1, -d, 0); after scaling d becomes 3/2 and eta turns negative.
    """
    w = np.array([[1j], [0.0], [1.0]])
    s = np.arcsinh(0.5)
    params = group.CartanParams.from_angles("H2", None, [s])
    return hi_monotonicity_check("H2", params, w, r_grid=[3.0], s_grid=[], tol=tol)


# ---------------------------------------------------------------- exhaustion

def suite_exhaustion(cfg: RunConfig) -> SuiteResult:
    res = SuiteResult("exhaustion")
    samples = cfg.samples or 10_000
    rep = exhaustion_audit(cfg.gram_bound, cfg.r, samples, cfg.seed, n=cfg.n or 2, N=cfg.N or 2)
    finite = rep.supremum is not None and bool(np.isfinite(rep.supremum))
    res.add("accepted_samples", rep.accepted > 0, rep.accepted, 1, samples)
    res.add("supremum_finite", finite, rep.supremum if finite else np.inf, np.inf, rep.accepted)
    change = abs(rep.supremum - rep.half_supremum) / rep.half_supremum if finite and rep.half_supremum else np.inf
    res.add("supremum_stable", rep.stable, change, 0.2, rep.accepted,
            supremum=rep.supremum, half_supremum=rep.half_supremum)
    res.add("bound_chain", rep.bound_violations == 0, rep.bound_violations, 0, rep.accepted,
            worst_slack=rep.checks)
    return res


SUITES = {
    "cauchy-schwarz": suite_cauchy_schwarz,
    "invariance": suite_invariance,
    "radical-lemmas": suite_radical_lemmas,
    "degeneration": suite_degeneration,
    "moment-fd": suite_moment_fd,
    "levi": suite_levi,
    "reduction": suite_reduction,
    "membership": suite_membership,
    "cartan-path": suite_cartan_path,
    "exhaustion": suite_exhaustion,
}


def run_suite(name: str, cfg: RunConfig) -> list[SuiteResult]:
    """Run one suite, or every suite for name == 'all'."""
    if name == "all":
        return [fn(cfg) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [SUITES[name](cfg)]
