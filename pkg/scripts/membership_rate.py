#!/usr/bin/env python3
"""Certification rate on constructed extended-tube members as the group scale grows."""
import argparse
import time

import numpy as np

from futuretube import group
from futuretube.kaehler import MembershipOptions, membership_certify
from futuretube.sampling import case_rng, random_tube_point


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=40)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--N", type=int, default=2)
    ap.add_argument("--starts", type=int, default=16)
    ap.add_argument("--scales", type=float, nargs="+", default=[0.25, 0.5, 1.0, 1.5])
    args = ap.parse_args()

    print(f"{'scale':>6} {'rate':>6} {'sec/trial':>10}")
    for scale in args.scales:
        hits = 0
        start = time.perf_counter()
        for k in range(args.trials):
            rng = case_rng(args.seed, f"membership-rate/{scale}", k)
            w = random_tube_point(rng, args.n, args.N)
            g = group.random_group_element_rng(rng, scale, "complex", args.n)
            z = np.linalg.solve(g.matrix, w)
            hits += membership_certify(z, MembershipOptions(starts=args.starts, seed=k)).member
        per = (time.perf_counter() - start) / args.trials
        print(f"{scale:6.2f} {hits / args.trials:6.2f} {per:10.3f}")


if __name__ == "__main__":
    main()
