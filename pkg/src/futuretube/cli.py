"""Command-line interface: one subcommand per computation plus `verify <suite>`.

Every command prints a JSON object. Exit codes: 0 success, 1 suite failure
or contradiction, 2 usage or input error, 3 numerical degeneracy.
"""
from __future__ import annotations

import argparse
import sys
import warnings
from datetime import datetime, timezone

import numpy as np

from . import __version__, group, io
from .connect import PathDegeneracyError, SigmaContainmentError, cartan_path, tube_margin
from .kaehler import (FlowOptions, MembershipOptions, exhaustion_audit, exhaustion_bounds, levi_eigenvalues,
                      membership_certify, minimize_rho_on_orbit, moment_map, rho, slice_normalize)
from .minkowski import DomainError, Tolerance, cone_boost, eta, in_forward_cone, in_future_tube, lorentz_product
from .quotient import (DegenerateRadicalError, RankDecisionWarning, gamma_scale, gram_quotient, isotropic_split,
                       numeric_rank, radical)
from .suites import SUITES, RunConfig, run_suite, threads_from_env

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _tol(args) -> Tolerance:
    return Tolerance(args.tol_abs, args.tol_rel)


def _point(args):
    return io.read_config_point(io.load_json(args.input))


def _complex(c) -> dict:
    return {"re": float(np.real(c)), "im": float(np.imag(c))}


# ---------------------------------------------------------------- commands

def cmd_eta(args):
    doc = io.load_json(args.input)
    if isinstance(doc, dict) and "N" in doc:
        z = io.read_config_point(doc)
        return {"eta": [_complex(v) for v in eta(z)]}
    return {"eta": _complex(eta(io.read_vector(doc)))}


def cmd_product(args):
    doc = io.load_json(args.input)
    x = io.read_vector(io._require(doc, "x"))
    y = io.read_vector(io._require(doc, "y"))
    if x.shape != y.shape:
        raise io.FormatError("y", "dimension differs from x")
    return {"product": _complex(lorentz_product(x, y))}


def cmd_cone(args):
    v = io.read_vector(io.load_json(args.input))
    if np.any(v.imag != 0):
        raise io.FormatError("im", "cone membership is defined for real vectors")
    y = v.real
    inside = in_forward_cone(y, _tol(args))
    out = {"in_cone": bool(inside), "eta": float(eta(y))}
    if inside:
        out["boost"] = io.group_to_json(group.validate_group(cone_boost(y, _tol(args))))
    return out


def cmd_tube(args):
    z = _point(args)
    return {"in_tube": bool(in_future_tube(z, _tol(args))), "margin": tube_margin(z)}


def cmd_quotient(args):
    G = gram_quotient(_point(args))
    return {"gram_re": G.real, "gram_im": G.imag}


def cmd_rank(args):
    doc = io.load_json(args.input)
    if isinstance(doc, dict) and "matrix_re" in doc:
        return {"rank": numeric_rank(io.read_matrix(doc), _tol(args))}
    rad = radical(io.read_config_point(doc), _tol(args))
    return {"span": rad.span_dim, "gram_rank": rad.gram_rank, "rank_warning": rad.ambiguous}


def cmd_radical(args):
    rad = radical(_point(args), _tol(args))
    return {"dim": rad.dim, "basis_re": rad.basis.real, "basis_im": rad.basis.imag,
            "rank_warning": rad.ambiguous}


def cmd_closed(args):
    rad = radical(_point(args), _tol(args))
    return {"closed": rad.span_dim == rad.gram_rank, "span": rad.span_dim, "gram_rank": rad.gram_rank,
            "rank_warning": rad.ambiguous}


def cmd_degenerate(args):
    z = _point(args)
    split = isotropic_split(z, _tol(args))
    out = {"u": io.config_point_to_json(split.u), "omega": io.config_point_to_json(split.omega),
           "t": args.t, "point": io.config_point_to_json(gamma_scale(split, args.t)),
           "radical_dim": split.radical.shape[1], "pairing_condition": split.pairing_condition,
           "rank_warning": split.ambiguous}
    if in_future_tube(z, _tol(args)):
        out["rho_z"] = rho(z)
        out["rho_u"] = rho(split.u)
    return out


def cmd_rho(args):
    return {"rho": rho(_point(args), _tol(args))}


def cmd_levi(args):
    ev = np.sort(levi_eigenvalues(_point(args), _tol(args)))
    return {"min_eigenvalue": float(ev[0]), "eigenvalues": ev}


def cmd_moment(args):
    z = _point(args)
    return {"basis": group.algebra_labels(z.shape[0] - 1), "mu": moment_map(z, _tol(args))}


def cmd_minimize(args):
    z = _point(args)
    opts = FlowOptions(step0=args.step0, mu_tol=args.mu_tol, max_iter=args.max_iter, direction=args.direction)
    res = minimize_rho_on_orbit(z, opts, _tol(args))
    stride = max(1, len(res.trace) // 50)
    trace = res.trace[::stride] + ([res.trace[-1]] if (len(res.trace) - 1) % stride else [])
    return {"converged": res.converged, "iterations": res.iterations, "message": res.message,
            "rho_initial": res.trace[0][1], "rho_final": res.final_rho, "mu_norm": res.final_mu_norm,
            "final_point": io.config_point_to_json(res.final_point),
            "group": io.group_to_json(res.accumulated_group),
            "trace": [{"iteration": i, "rho": r, "mu_norm": m} for i, r, m in trace]}


def cmd_certify(args):
    z = _point(args)
    opts = MembershipOptions(starts=args.starts, margin=args.margin, seed=args.seed)
    v = membership_certify(z, opts, _tol(args))
    out = {"status": v.status, "residual": v.residual}
    if v.witness is not None:
        out["witness"] = io.group_to_json(v.witness)
        out["image"] = io.config_point_to_json(v.witness.matrix @ z)
    return out


def cmd_slice(args):
    g, w = slice_normalize(_point(args), _tol(args))
    return {"group": io.group_to_json(g), "point": io.config_point_to_json(w)}


def cmd_bounds(args):
    b = exhaustion_bounds(args.M)
    out = {"M": b.M, "xy_max": b.xy_max, "eta_y_max": b.eta_y_max, "eta_x_max": b.eta_x_max,
           "eta_x_min": b.eta_x_min, "single_max": b.single_max}
    if args.M2 is not None:
        out["pair_mixed_max"] = b.pair_mixed_max(args.M, args.M2)
    return out


def cmd_path(args):
    doc = io.load_json(args.input)
    variant = io._require(doc, "variant")
    if variant not in ("H0", "H1", "H2"):
        raise io.FormatError("variant", "expected H0, H1 or H2")
    w = io.read_config_point(io._require(doc, "point"))
    p = io._require(doc, "params")
    try:
        hyps = tuple(tuple(float(v) for v in pair) for pair in io._require(p, "hyperbolas"))
        circle = None if variant == "H2" else tuple(float(v) for v in io._require(p, "circle"))
        params = group.CartanParams(variant, circle, hyps)
    except (TypeError, ValueError) as exc:
        raise io.FormatError("params", str(exc)) from None
    try:
        path = cartan_path(variant, params, w, args.path_samples, _tol(args))
    except SigmaContainmentError as exc:
        raise CommandError(str(exc), EXIT_FAIL) from None
    except PathDegeneracyError as exc:
        raise CommandError(str(exc), EXIT_DEGENERATE) from None
    return {"variant": variant, "min_margin": path.min_margin,
            "samples": [{"t": t, **io.group_to_json(g)} for t, g in path.samples]}


def cmd_audit(args):
    rep = exhaustion_audit(args.gram_bound, args.r, args.samples or 10_000, args.seed,
                           n=args.n or 2, N=args.N or 2)
    passed = rep.stable and rep.bound_violations == 0
    out = {"samples": rep.samples, "accepted": rep.accepted, "supremum": rep.supremum,
           "half_supremum": rep.half_supremum, "stable": rep.stable,
           "bound_violations": rep.bound_violations, "worst_slack": rep.checks, "passed": passed}
    if rep.message:
        out["message"] = rep.message
    return out, EXIT_OK if passed else EXIT_FAIL


def cmd_verify(args):
    cfg = RunConfig(seed=args.seed, tol=_tol(args), n=args.n, N=args.N, samples=args.samples,
                    r=args.r, gram_bound=args.gram_bound, starts=args.starts, max_iter=args.max_iter,
                    threads=threads_from_env())
    results = run_suite(args.suite, cfg)
    passed = all(r.passed for r in results)
    return {"suite": args.suite, "passed": passed,
            "results": [r.to_json() for r in results]}, EXIT_OK if passed else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol-abs", type=float, default=1e-10)
    common.add_argument("--tol-rel", type=float, default=1e-8)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--N", type=int, default=None)
    common.add_argument("--in", dest="input", default="-", help="input JSON file, '-' for stdin")
    common.add_argument("--out", default="-", help="output file, '-' for stdout")
    common.add_argument("--json", action="store_true", help="compact single-line JSON")

    parser = argparse.ArgumentParser(prog="futuretube", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"futuretube v{__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(fn=fn)
        return p

    add("eta", cmd_eta, "quadratic form of a vector or of each column")
    add("product", cmd_product, "bilinear form of {'x': vector, 'y': vector}")
    add("cone", cmd_cone, "forward-cone membership and the boost to the time axis")
    add("tube", cmd_tube, "future-tube membership of a configuration point")
    add("quotient", cmd_quotient, "the Gram matrix z^T J z")
    add("rank", cmd_rank, "span and Gram ranks, or the rank of a matrix")
    add("radical", cmd_radical, "isotropic radical of the column span")
    add("closed", cmd_closed, "closed-orbit test")
    p = add("degenerate", cmd_degenerate, "split z = u + omega and evaluate u + t omega")
    p.add_argument("--t", type=float, default=0.0)
    add("rho", cmd_rho, "the exhaustion sum 1/eta(Im z_j)")
    add("levi", cmd_levi, "eigenvalues of the Levi form")
    add("moment", cmd_moment, "moment map in the fixed algebra basis")
    p = add("minimize", cmd_minimize, "minimise rho along the complex orbit")
    p.add_argument("--max-iter", type=int, default=5000)
    p.add_argument("--mu-tol", type=float, default=1e-6)
    p.add_argument("--step0", type=float, default=0.1)
    p.add_argument("--direction", choices=("lbfgs", "gradient"), default="lbfgs")
    p = add("certify", cmd_certify, "search for a witness of extended-tube membership")
    p.add_argument("--starts", type=int, default=16)
    p.add_argument("--margin", type=float, default=1e-3)
    add("slice", cmd_slice, "boost the first imaginary part onto the time axis")
    p = add("bounds", cmd_bounds, "bounds implied by a Gram bound M")
    p.add_argument("--M", type=float, required=True)
    p.add_argument("--M2", type=float, default=None, help="second constant for the pair bound")
    p = add("path", cmd_path, "path from the identity to h inside Sigma_H(w)")
    p.add_argument("--path-samples", type=int, default=64)
    p = add("audit-exhaustion", cmd_audit, "empirical boundedness of rho sublevel sets")
    p.add_argument("--gram-bound", type=float, default=10.0)
    p.add_argument("--r", type=float, default=10.0)
    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--r", type=float, default=10.0)
    p.add_argument("--gram-bound", type=float, default=10.0)
    p.add_argument("--starts", type=int, default=16)
    p.add_argument("--max-iter", type=int, default=5000)
    return parser


def _envelope(args) -> dict:
    return {"command": args.command, "version": f"v{__version__}", "seed": args.seed,
            "tolerances": {"abs_tol": args.tol_abs, "rel_tol": args.tol_rel},
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds")}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    code = EXIT_OK
    try:
        if args.tol_abs <= 0 or args.tol_rel <= 0:
            raise ValueError("tolerances must be positive")
        if args.seed < 0 or args.seed >= 2 ** 64:
            raise ValueError("--seed must be a 64-bit unsigned integer")
        for name in ("samples", "n", "N"):
            v = getattr(args, name)
            if v is not None and v < 1:
                raise ValueError(f"--{name} must be positive")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RankDecisionWarning)
            result = args.fn(args)
        if isinstance(result, tuple):
            result, code = result
        if result.get("rank_warning"):
            code = EXIT_DEGENERATE
    except CommandError as exc:
        result, code = {"error": str(exc)}, exc.code
    except io.FormatError as exc:
        result, code = {"error": str(exc), "field": exc.field}, EXIT_USAGE
    except DegenerateRadicalError as exc:
        result, code = {"error": str(exc)}, EXIT_DEGENERATE
    except (DomainError, ValueError, OverflowError) as exc:
        result, code = {"error": str(exc)}, EXIT_USAGE
    report = {**_envelope(args), **result}
    io.write_output(report, args.out, None if args.json else 2)
    if "error" in result:
        print(f"futuretube {args.command}: {result['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
