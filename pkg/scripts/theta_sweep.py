"""Error and work of the Barnes-Hut engine across opening thresholds.

    python scripts/theta_sweep.py --n 2000 --seeds 5 --out sweep.csv
"""

import argparse
import csv
import sys

import numpy as np

from pairwise_acoustics.allpairs import KernelConfig
from pairwise_acoustics.harness import run_benchmark, synth_bodies


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--dist", choices=["uniform", "clustered"], default="uniform")
    ap.add_argument("--thetas", default="0,0.1,0.2,0.3,0.5,0.7,1.0,1.5,2.0")
    ap.add_argument("--out", help="CSV path; table goes to stdout when omitted")
    args = ap.parse_args()

    thetas = [float(t) for t in args.thetas.split(",")]
    rows = []
    for seed in range(args.seeds):
        bodies = synth_bodies(args.n, seed, args.dist)
        for r in run_benchmark(bodies, KernelConfig(), thetas, seed=seed):
            rows.append((r.theta, seed, r.mean_rel_force_err, r.max_rel_force_err,
                         r.spearman_amplitude_rank, r.bh_node_evals / r.exact_pair_evals,
                         r.bh_wall_s, r.exact_wall_s))

    header = ["theta", "seed", "mean_rel_force_err", "max_rel_force_err", "spearman",
              "work_fraction", "bh_wall_s", "exact_wall_s"]
    if args.out:
        with open(args.out, "w", newline="") as fh:
            csv.writer(fh).writerows([header, *rows])
    arr = np.array(rows)
    print(f"{'theta':>6} {'mean err':>10} {'max err':>10} {'spearman':>9} {'work':>7}")
    for t in thetas:
        sel = arr[arr[:, 0] == t]
        print(f"{t:6.2f} {sel[:, 2].mean():10.3e} {sel[:, 3].max():10.3e} "
              f"{sel[:, 4].min():9.5f} {sel[:, 5].mean():7.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
