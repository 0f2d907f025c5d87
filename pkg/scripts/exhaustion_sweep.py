#!/usr/bin/env python3
"""Empirical supremum of the slice-normalised norm over rho sublevel sets.

For each r, the audit keeps the samples with |pi(z)|_max <= gram_bound and
rho(z) <= r. The supremum should grow with r but stay finite.
"""
import argparse

from futuretube.kaehler import exhaustion_audit


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=5000)
    ap.add_argument("--gram-bound", type=float, default=10.0)
    ap.add_argument("--radii", type=float, nargs="+", default=[2.0, 5.0, 10.0, 20.0])
    args = ap.parse_args()

    print(f"{'r':>6} {'accepted':>9} {'sup':>10} {'half sup':>10} {'stable':>7} {'violations':>10}")
    for r in args.radii:
        rep = exhaustion_audit(args.gram_bound, r, args.samples, args.seed)
        if rep.supremum is None:
            print(f"{r:6.1f} {0:9d} {'-':>10} {'-':>10} {'-':>7} {'-':>10}")
            continue
        print(f"{r:6.1f} {rep.accepted:9d} {rep.supremum:10.4f} {rep.half_supremum:10.4f} "
              f"{str(rep.stable):>7} {rep.bound_violations:10d}")


if __name__ == "__main__":
    main()
