"""Command-line entry point.

Exit codes: 0 success, 2 invalid arguments, 3 input/format error,
4 numeric or degenerate-input error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import io
from .allpairs import KernelConfig, all_pairs
from .barneshut import build_tree, compute_force, compute_mass_distribution, dump_tree
from .errors import (
    DegenerateInputError,
    InvalidArgumentError,
    NoUsableInputError,
    OutOfBoundsError,
    SingularMatrixError,
    UnsupportedFormatError,
)
from .features import embed
from .harness import extract_features, pipeline, run_benchmark, synth_bodies, write_embedding
from .regression import fit_ridge

EXIT_OK, EXIT_ARGS, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3, 4


def _thetas(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad theta list {text!r}")


def _kernel_args(p: argparse.ArgumentParser, theta: bool = False):
    p.add_argument("--g", type=float, default=1.0)
    p.add_argument("--eps", type=float, default=1e-3)
    p.add_argument("--threads", type=int, default=1)
    if theta:
        p.add_argument("--theta", type=float, default=0.5)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pairwise-acoustics")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="write a synthetic bodies CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dist", choices=["uniform", "clustered"], default="uniform")
    p.add_argument("--out", required=True)

    p = sub.add_parser("embed", help="WAV directory -> features and bodies CSVs")
    p.add_argument("--wav-dir", required=True)
    p.add_argument("--out-prefix", required=True)
    p.add_argument("--event-threshold", type=float, default=0.5)

    p = sub.add_parser("exact", help="exact all-pairs results CSV")
    p.add_argument("--bodies", required=True)
    _kernel_args(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("bh", help="Barnes-Hut results CSV")
    p.add_argument("--bodies", required=True)
    _kernel_args(p, theta=True)
    p.add_argument("--out", required=True)
    p.add_argument("--dump-tree")

    p = sub.add_parser("bench", help="exact-vs-Barnes-Hut report JSON")
    p.add_argument("--bodies", required=True)
    p.add_argument("--thetas", type=_thetas, required=True)
    _kernel_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("fit", help="ridge regression weights CSV")
    p.add_argument("--data", required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--outputs", type=int, default=1)
    p.add_argument("--out", required=True)

    p = sub.add_parser("pipeline", help="WAV directory -> all CSV/JSON artifacts")
    p.add_argument("--wav-dir", required=True)
    p.add_argument("--out-prefix", required=True)
    _kernel_args(p, theta=True)
    return parser


def _run(args) -> int:
    cmd = args.command
    if cmd == "synth":
        io.write_bodies(args.out, synth_bodies(args.n, args.seed, args.dist))
    elif cmd == "embed":
        files, records, errors = extract_features(args.wav_dir, args.event_threshold)
        write_embedding(args.out_prefix, files, records, embed(records))
        for path, msg in errors:
            print(f"warning: {path}: {msg}", file=sys.stderr)
    elif cmd == "exact":
        k = KernelConfig(args.g, args.eps)
        io.write_result(args.out, all_pairs(io.read_bodies(args.bodies), k, args.threads))
    elif cmd == "bh":
        k = KernelConfig(args.g, args.eps, args.theta)
        bodies = io.read_bodies(args.bodies)
        tree = build_tree(bodies)
        compute_mass_distribution(tree.root)
        io.write_result(args.out, compute_force(tree, bodies, k, args.threads))
        if args.dump_tree:
            with open(args.dump_tree, "w") as fh:
                fh.write(dump_tree(tree))
    elif cmd == "bench":
        k = KernelConfig(args.g, args.eps)
        reports = run_benchmark(io.read_bodies(args.bodies), k, args.thetas, args.seed, args.threads)
        io.write_reports(args.out, reports)
    elif cmd == "fit":
        io.write_weights(args.out, fit_ridge(io.read_dataset(args.data, args.outputs), args.lam))
    elif cmd == "pipeline":
        k = KernelConfig(args.g, args.eps, args.theta)
        res = pipeline(args.wav_dir, args.out_prefix, k, args.threads)
        for path, msg in res.errors:
            print(f"warning: {path}: {msg}", file=sys.stderr)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_ARGS
    try:
        return _run(args)
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except (UnsupportedFormatError, OutOfBoundsError, NoUsableInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DegenerateInputError, SingularMatrixError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
