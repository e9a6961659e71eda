"""Probe whether r = sqrt(p/q) still works for arbitrary polynomials when q < 2.

Runs the worst-case search at (p, q, alpha) = (0.5, 1, 2). A best critical
radius below sqrt(p/q) would be a counterexample; at or above it the slice is
consistent with the sharp radius. Nothing is asserted.
"""

import argparse
import math
import time

from bergman_hyper.inequalities import theorem_radius
from bergman_hyper.search import worst_case_search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--q", type=float, default=1.0)
    ap.add_argument("--alpha", type=float, default=2.0)
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--restarts", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    start = time.perf_counter()
    res = worst_case_search(
        args.p, args.q, args.alpha, args.degree, args.restarts, seed=args.seed, workers=args.workers
    )
    sharp = math.sqrt(args.p / args.q)
    print(f"(p, q, alpha) = ({args.p}, {args.q}, {args.alpha}), degree {args.degree}, {args.restarts} restarts")
    print(f"sqrt(p/q)            = {sharp:.6f}")
    print(f"proven radius        = {theorem_radius(args.p, args.q, args.alpha):.6f}")
    print(f"best r_crit          = {res.best_r_crit:.6f}")
    print(f"best - sqrt(p/q)     = {res.best_r_crit - sharp:+.2e}")
    print(f"best function        = {res.best_function.literal}")
    print(f"evaluations          = {res.evaluations}, {time.perf_counter() - start:.0f}s")


if __name__ == "__main__":
    main()
