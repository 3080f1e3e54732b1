import numpy as np
import pytest

from pairwise_acoustics.io import write_wav
from pairwise_acoustics.rng import SplitMix64
from pairwise_acoustics.signal_core import Signal

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Records one PASS/FAIL line per acceptance criterion, printed after the run."""

    def record(name: str, ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def tone_burst(freq_hz, amp=0.5, fs=16000, dur_s=0.5, start_s=0.1, burst_s=0.25, noise=1e-4, seed=0):
    n = int(fs * dur_s)
    t = np.arange(n) / fs
    x = np.zeros(n)
    a, b = int(start_s * fs), int((start_s + burst_s) * fs)
    x[a:b] = amp * np.sin(2 * np.pi * freq_hz * t[a:b]) * np.hanning(b - a)
    x += SplitMix64(seed).normal(n, std=noise)
    return Signal(x, fs)


@pytest.fixture
def wav_dir(tmp_path):
    """Factory writing tone bursts as WAV files into a fresh directory."""

    def make(freqs, amps=None, **kw):
        d = tmp_path / "wavs"
        d.mkdir(exist_ok=True)
        amps = amps or [0.5] * len(freqs)
        for i, (f, a) in enumerate(zip(freqs, amps)):
            write_wav(d / f"burst_{i:02d}.wav", tone_burst(f, a, seed=i, **kw))
        return d

    return make
