import dataclasses

import numpy as np
import pytest

from pairwise_acoustics import io
from pairwise_acoustics.allpairs import KernelConfig
from pairwise_acoustics.errors import InvalidArgumentError, NoUsableInputError
from pairwise_acoustics.harness import benchmark, pipeline, run_benchmark, spearman, synth_bodies

WALL = ("exact_wall_s", "bh_wall_s")


def without_wall(report):
    return {k: v for k, v in dataclasses.asdict(report).items() if k not in WALL}


@pytest.mark.parametrize("dist", ["uniform", "clustered"])
def test_synth_bodies_deterministic_and_bounded(dist):
    a, b = synth_bodies(500, 9, dist), synth_bodies(500, 9, dist)
    pa = np.array([x.position for x in a])
    assert pa.tobytes() == np.array([x.position for x in b]).tobytes()
    assert [x.mass for x in a] == [x.mass for x in b]
    assert np.all((0 <= pa) & (pa <= 1))
    masses = np.array([x.mass for x in a])
    assert np.all((0.1 <= masses) & (masses <= 1.0))
    assert synth_bodies(500, 10, dist)[0].position.tolist() != a[0].position.tolist()


def test_synth_single_and_invalid():
    (b,) = synth_bodies(1, 0)
    assert b.id == 0 and b.mass > 0
    with pytest.raises(InvalidArgumentError):
        synth_bodies(0, 0)
    with pytest.raises(InvalidArgumentError):
        synth_bodies(5, 0, "gaussian")


def test_uniform_mean_position():
    # per-axis sd of the mean is sqrt(1/12/1e4) = 0.0029; 3 sd = 0.0087
    p = np.array([b.position for b in synth_bodies(10_000, 123)])
    assert np.all(np.abs(p.mean(axis=0) - 0.5) <= 0.02)


def test_clustered_is_clumpy():
    p = np.array([b.position for b in synth_bodies(4000, 5, "clustered")])
    occupied = np.unique((p * 20).astype(int).clip(0, 19), axis=0).shape[0]
    assert occupied < 150  # uniform would touch nearly all 400 cells


def test_spearman():
    assert spearman([1, 2, 3], [10, 20, 30]) == 1.0
    assert spearman([1, 2, 3], [3, 2, 1]) == -1.0
    assert spearman([5.0], [7.0]) == 1.0


def test_benchmark_theta_zero():
    (r,) = run_benchmark(synth_bodies(400, 1), KernelConfig(), [0.0], seed=1)
    assert r.max_rel_force_err <= 1e-9 and r.spearman_amplitude_rank == 1.0
    assert r.exact_pair_evals == 400 * 399 == r.bh_node_evals
    assert r.seed == 1


def test_benchmark_error_grows_with_theta():
    wins = 0
    for seed in range(10):
        lo, hi = run_benchmark(synth_bodies(600, seed), KernelConfig(), [0.5, 1.5], seed=seed)
        wins += lo.mean_rel_force_err <= hi.mean_rel_force_err
        assert lo.bh_node_evals > hi.bh_node_evals
    assert wins >= 9


def test_benchmark_determinism_and_exact_independence():
    bodies = synth_bodies(300, 4, "clustered")
    a = run_benchmark(bodies, KernelConfig(), [0.4, 0.9], seed=4)
    b = run_benchmark(bodies, KernelConfig(), [0.4, 0.9], seed=4)
    assert [without_wall(r) for r in a] == [without_wall(r) for r in b]
    _, ex1, _ = benchmark(bodies, KernelConfig(), [0.1])
    _, ex2, _ = benchmark(bodies, KernelConfig(), [2.0, 0.3, 0.0])
    assert np.array_equal(ex1.force, ex2.force) and np.array_equal(ex1.amplitude, ex2.amplitude)


def test_benchmark_needs_theta():
    with pytest.raises(InvalidArgumentError):
        run_benchmark(synth_bodies(5, 0), KernelConfig(), [])


def test_pipeline_three_tones(wav_dir, tmp_path):
    d = wav_dir([1500.0, 300.0, 3200.0], [0.3, 0.6, 0.45])
    res = pipeline(d, tmp_path / "out")
    xs = [b.position[0] for b in res.bodies]
    assert len(set(xs)) == 3
    assert np.argsort(xs).tolist() == [1, 0, 2]
    for key in ("features", "bodies", "files", "exact", "bh", "report"):
        assert res.outputs[key].exists()
    assert len(io.read_bodies(res.outputs["bodies"])) == 3
    (report,) = io.read_reports(res.outputs["report"])
    assert report.n == 3


def test_pipeline_empty_dir(tmp_path):
    with pytest.raises(NoUsableInputError):
        pipeline(tmp_path)
    with pytest.raises(FileNotFoundError):
        pipeline(tmp_path / "missing")


def test_pipeline_partial_failure(wav_dir):
    d = wav_dir([500.0, 2000.0])
    (d / "corrupt.wav").write_bytes(b"RIFF\x00\x00")
    res = pipeline(d)
    assert len(res.bodies) == 2
    assert len(res.errors) == 1 and res.errors[0][0].name == "corrupt.wav"
