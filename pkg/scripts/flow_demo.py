#!/usr/bin/env python3
"""Minimise rho along a complex orbit and print the trace.

Starts from z = g z0 with z0 purely imaginary, so the minimum is rho(z0).
"""
import argparse

import numpy as np

from futuretube import group
from futuretube.kaehler import FlowOptions, minimize_rho_on_orbit, rho
from futuretube.minkowski import in_future_tube
from futuretube.sampling import random_cone_vectors


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--N", type=int, default=3)
    ap.add_argument("--scale", type=float, default=0.5)
    ap.add_argument("--direction", choices=("lbfgs", "gradient"), default="lbfgs")
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    z0 = 1j * random_cone_vectors(rng, args.n, args.N)
    while True:
        g = group.random_group_element_rng(rng, args.scale, "complex", args.n)
        if in_future_tube(g.matrix @ z0):
            break
    res = minimize_rho_on_orbit(g.matrix @ z0, FlowOptions(direction=args.direction, max_iter=20000))
    stride = max(1, len(res.trace) // 20)
    print(f"{'iter':>6} {'rho':>22} {'|mu|':>12}")
    rows = res.trace[::stride]
    if rows[-1] is not res.trace[-1]:
        rows.append(res.trace[-1])
    for it, r, m in rows:
        print(f"{it:6d} {r:22.15g} {m:12.3e}")
    print(f"converged={res.converged} ({res.message}); rho(z0)={rho(z0):.15g}, "
          f"gap={abs(res.final_rho - rho(z0)):.2e}")


if __name__ == "__main__":
    main()
