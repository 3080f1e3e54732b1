"""Kernel evaluations and wall time versus N for both engines.

    python scripts/scaling.py --max-n 16384 --theta 0.7
"""

import argparse
import sys
import time

from pairwise_acoustics.allpairs import KernelConfig, all_pairs
from pairwise_acoustics.barneshut import barnes_hut
from pairwise_acoustics.harness import synth_bodies


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=256)
    ap.add_argument("--max-n", type=int, default=8192)
    ap.add_argument("--theta", type=float, default=0.7)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--skip-exact-above", type=int, default=16384)
    args = ap.parse_args()

    k = KernelConfig(theta=args.theta)
    print(f"{'n':>7} {'bh evals':>12} {'ratio':>6} {'bh s':>8} {'exact s':>8}")
    n, prev = args.min_n, None
    while n <= args.max_n:
        bodies = synth_bodies(n, 0)
        t0 = time.perf_counter()
        evals = barnes_hut(bodies, k, args.threads).evaluations
        bh_s = time.perf_counter() - t0
        exact_s = float("nan")
        if n <= args.skip_exact_above:
            t0 = time.perf_counter()
            all_pairs(bodies, k, args.threads)
            exact_s = time.perf_counter() - t0
        ratio = evals / prev if prev else float("nan")
        print(f"{n:7d} {evals:12d} {ratio:6.3f} {bh_s:8.3f} {exact_s:8.3f}")
        prev, n = evals, 2 * n
    return 0


if __name__ == "__main__":
    sys.exit(main())
