"""Synthesize a directory of tone bursts and run the full WAV pipeline on it.

    python scripts/wav_demo.py --out-dir demo/ --count 16
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from pairwise_acoustics.allpairs import KernelConfig
from pairwise_acoustics.harness import pipeline
from pairwise_acoustics.io import write_wav
from pairwise_acoustics.signal_core import Signal


def burst(freq, amp, fs=16000, dur_s=0.5, start_s=0.1, burst_s=0.25):
    n = int(fs * dur_s)
    x = np.zeros(n)
    a, b = int(start_s * fs), int((start_s + burst_s) * fs)
    t = np.arange(a, b) / fs
    x[a:b] = amp * np.sin(2 * np.pi * freq * t) * np.hanning(b - a)
    return Signal(x, fs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", required=True)
    ap.add_argument("--count", type=int, default=16)
    ap.add_argument("--theta", type=float, default=0.5)
    args = ap.parse_args()

    out = Path(args.out_dir)
    wavs = out / "wav"
    wavs.mkdir(parents=True, exist_ok=True)
    freqs = np.geomspace(200.0, 6000.0, args.count)
    amps = np.random.default_rng(0).uniform(0.2, 0.9, args.count)
    for i, (f, a) in enumerate(zip(freqs, amps)):
        write_wav(wavs / f"burst_{i:02d}_{int(f)}hz.wav", burst(f, a))

    res = pipeline(wavs, out / "run", KernelConfig(theta=args.theta))
    print(f"{'file':<24} {'x':>6} {'y':>6} {'mass':>6} {'amp exact':>10} {'amp bh':>10}")
    for p, b, ae, ab in zip(res.files, res.bodies, res.exact.amplitude, res.approx.amplitude):
        print(f"{p.name:<24} {b.position[0]:6.3f} {b.position[1]:6.3f} {b.mass:6.3f} {ae:10.3f} {ab:10.3f}")
    print(f"spearman {res.report.spearman_amplitude_rank:.4f}, "
          f"mean rel force err {res.report.mean_rel_force_err:.3e}")
    for key, path in res.outputs.items():
        print(f"{key}: {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
