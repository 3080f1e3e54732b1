"""Synthetic inputs, exact-vs-approximate benchmarking, and the WAV pipeline."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.stats import rankdata

from . import io
from .allpairs import InteractionResult, KernelConfig, all_pairs
from .barneshut import DEFAULT_MAX_DEPTH, build_tree, compute_force, compute_mass_distribution
from .errors import DegenerateInputError, InvalidArgumentError, NoUsableInputError, UnsupportedFormatError
from .features import Body, average_spectrum, embed, spectral_features, time_features
from .rng import SplitMix64

log = logging.getLogger(__name__)

N_BLOBS = 8
BLOB_SIGMA = 0.03


@dataclass
class BenchReport:
    n: int
    theta: float
    exact_pair_evals: int
    bh_node_evals: int
    exact_wall_s: float
    bh_wall_s: float
    max_rel_force_err: float
    mean_rel_force_err: float
    mean_rel_amplitude_err: float
    spearman_amplitude_rank: float
    seed: int


def synth_bodies(n: int, seed: int, distribution: str = "uniform") -> list[Body]:
    """Seeded bodies in the unit square with masses uniform in [0.1, 1.0].

    ``clustered`` draws 8 blob centers uniformly, assigns each body a blob at
    random and offsets it by N(0, 0.03^2) per axis, clipped to the square.
    """
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    rng = SplitMix64(seed)
    if distribution == "uniform":
        pos = rng.uniform(2 * n).reshape(n, 2)
    elif distribution == "clustered":
        centers = rng.uniform(2 * N_BLOBS).reshape(N_BLOBS, 2)
        blob = (rng.next_u64(n) % np.uint64(N_BLOBS)).astype(np.int64)
        pos = np.clip(centers[blob] + rng.normal(2 * n, std=BLOB_SIGMA).reshape(n, 2), 0.0, 1.0)
    else:
        raise InvalidArgumentError(f"unknown distribution {distribution!r}")
    mass = rng.uniform(n, 0.1, 1.0)
    return [Body(i, pos[i], float(mass[i])) for i in range(n)]


def spearman(a, b) -> float:
    a, b = np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64)
    ra, rb = rankdata(a), rankdata(b)
    if np.array_equal(ra, rb):
        return 1.0
    if ra.std() == 0 or rb.std() == 0:
        return 0.0
    return float(np.clip(np.corrcoef(ra, rb)[0, 1], -1.0, 1.0))


def relative_errors(approx: InteractionResult, exact: InteractionResult):
    """Per-body relative force and amplitude errors, denominators floored at 1e-12."""
    f_err = np.linalg.norm(approx.force - exact.force, axis=1) / np.maximum(
        np.linalg.norm(exact.force, axis=1), 1e-12
    )
    a_err = np.abs(approx.amplitude - exact.amplitude) / np.maximum(np.abs(exact.amplitude), 1e-12)
    return f_err, a_err


def benchmark(
    bodies: Sequence[Body],
    k: KernelConfig,
    thetas: Sequence[float],
    seed: int = 0,
    workers: int = 1,
    max_depth: int = DEFAULT_MAX_DEPTH,
):
    """Like :func:`run_benchmark` but also returns the engine results.

    Returns ``(reports, exact, approximations)`` with one approximation per theta.
    """
    if len(thetas) == 0:
        raise InvalidArgumentError("need at least one theta")
    n = len(bodies)
    t0 = time.perf_counter()
    exact = all_pairs(bodies, k, workers)
    exact_s = time.perf_counter() - t0

    reports, approxs = [], []
    for theta in thetas:
        kt = replace(k, theta=float(theta))
        t0 = time.perf_counter()
        tree = build_tree(bodies, max_depth)
        compute_mass_distribution(tree.root)
        approx = compute_force(tree, bodies, kt, workers)
        bh_s = time.perf_counter() - t0
        f_err, a_err = relative_errors(approx, exact)
        reports.append(BenchReport(
            n=n,
            theta=float(theta),
            exact_pair_evals=n * (n - 1),
            bh_node_evals=approx.evaluations,
            exact_wall_s=exact_s,
            bh_wall_s=bh_s,
            max_rel_force_err=float(f_err.max()),
            mean_rel_force_err=float(f_err.mean()),
            mean_rel_amplitude_err=float(a_err.mean()),
            spearman_amplitude_rank=spearman(approx.amplitude, exact.amplitude),
            seed=int(seed),
        ))
        approxs.append(approx)
        log.info("theta=%.3g mean_rel_force_err=%.3e evals=%d", theta, f_err.mean(), approx.evaluations)
    return reports, exact, approxs


def run_benchmark(
    bodies: Sequence[Body],
    k: KernelConfig,
    thetas: Sequence[float],
    seed: int = 0,
    workers: int = 1,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> list[BenchReport]:
    """Run the exact engine once as the oracle, then Barnes-Hut once per theta.

    ``seed`` is only recorded in the report; ``k.theta`` is ignored.
    """
    return benchmark(bodies, k, thetas, seed, workers, max_depth)[0]


@dataclass
class PipelineResult:
    files: list[Path]
    records: list
    bodies: list[Body]
    exact: InteractionResult
    approx: InteractionResult
    report: BenchReport
    errors: list[tuple[Path, str]] = field(default_factory=list)
    outputs: dict[str, Path] = field(default_factory=dict)


def extract_features(wav_dir, event_threshold: float = 0.5):
    """Load every ``*.wav`` in ``wav_dir`` (sorted by name) and compute its features.

    Returns ``(files, records, errors)``; unreadable files land in ``errors``.
    """
    wav_dir = Path(wav_dir)
    if not wav_dir.is_dir():
        raise FileNotFoundError(f"not a directory: {wav_dir}")
    paths = sorted(wav_dir.glob("*.wav"))
    files, records, errors = [], [], []
    for p in paths:
        try:
            sig = io.load_wav(p)
            rec = (spectral_features(average_spectrum(sig)), time_features(sig, event_threshold))
        except (UnsupportedFormatError, DegenerateInputError, InvalidArgumentError, OSError) as exc:
            log.warning("skipping %s: %s", p, exc)
            errors.append((p, str(exc)))
            continue
        files.append(p)
        records.append(rec)
    if not records:
        raise NoUsableInputError(f"no loadable WAV files in {wav_dir} ({len(errors)} failed)")
    return files, records, errors


def write_embedding(prefix, files, records, bodies) -> dict[str, Path]:
    prefix = str(prefix)
    out = {
        "features": Path(prefix + "_features.csv"),
        "bodies": Path(prefix + "_bodies.csv"),
        "files": Path(prefix + "_files.csv"),
    }
    ids = [b.id for b in bodies]
    io.write_features(out["features"], ids, records)
    io.write_bodies(out["bodies"], bodies)
    io._write_rows(out["files"], ["id", "file"], [[i, p.name] for i, p in zip(ids, files)])
    return out


def pipeline(
    wav_dir,
    out_prefix=None,
    k: KernelConfig = KernelConfig(),
    workers: int = 1,
    event_threshold: float = 0.5,
) -> PipelineResult:
    """WAV directory -> features -> bodies -> exact and Barnes-Hut results (at ``k.theta``)."""
    files, records, errors = extract_features(wav_dir, event_threshold)
    bodies = embed(records)
    (report,), exact, (approx,) = benchmark(bodies, k, [k.theta], workers=workers)
    result = PipelineResult(files, records, bodies, exact, approx, report, errors)
    if out_prefix is not None:
        result.outputs = write_embedding(out_prefix, files, records, bodies)
        prefix = str(out_prefix)
        result.outputs["exact"] = Path(prefix + "_exact.csv")
        result.outputs["bh"] = Path(prefix + "_bh.csv")
        result.outputs["report"] = Path(prefix + "_report.json")
        io.write_result(result.outputs["exact"], exact)
        io.write_result(result.outputs["bh"], approx)
        io.write_reports(result.outputs["report"], [report])
    return result
