"""Scalar signal features and the 2-D point-mass embedding used by the engines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DegenerateInputError, InvalidArgumentError
from .signal_core import Signal, Spectrum, WindowKind, WindowSpec, frame_signal, stft

EVENT_FRAME_S = 0.010
SNR_CAP_DB = 99.0
MASS_FLOOR = 1e-6


@dataclass(frozen=True)
class TimeFeatures:
    duration_s: float
    snr_db: float
    event_count: int
    rms_energy: float


@dataclass(frozen=True)
class SpectralFeatures:
    centroid_hz: float
    bandwidth_hz: float


@dataclass
class Body:
    """A point model: feature-plane position, mass, and result accumulators."""

    id: int
    position: np.ndarray
    mass: float
    force: np.ndarray = field(default_factory=lambda: np.zeros(2))
    amplitude: float = 0.0

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=np.float64).reshape(2)
        self.force = np.asarray(self.force, dtype=np.float64).reshape(2)
        if not np.all(np.isfinite(self.position)):
            raise InvalidArgumentError(f"body {self.id}: position must be finite")
        if not self.mass > 0:
            raise InvalidArgumentError(f"body {self.id}: mass must be positive, got {self.mass}")

    def reset(self):
        self.force = np.zeros(2)
        self.amplitude = 0.0


def time_features(signal: Signal, event_threshold: float = 0.5) -> TimeFeatures:
    """Duration, RMS energy, and a frame-RMS burst detector.

    The signal is cut into non-overlapping 10 ms frames. A frame is an event
    frame when its RMS exceeds ``event_threshold`` times the loudest frame's
    RMS; ``event_count`` is the number of maximal runs of event frames. SNR
    is the event/non-event mean power ratio in dB, clamped to +-99 dB
    (+99 when every frame is an event frame, -99 when none is).
    """
    if len(signal) == 0:
        raise InvalidArgumentError("empty signal")
    if not 0 < event_threshold < 1:
        raise InvalidArgumentError(f"event_threshold must be in (0, 1), got {event_threshold}")
    x = signal.samples
    rms = float(np.sqrt(np.mean(x * x)))

    frame_len = max(1, int(round(EVENT_FRAME_S * signal.sample_rate_hz)))
    frames = frame_signal(signal, frame_len, frame_len)
    if frames.shape[0] == 0:
        frames = x[None, :]
    power = np.mean(frames * frames, axis=1)
    frame_rms = np.sqrt(power)
    peak = frame_rms.max()
    active = frame_rms > event_threshold * peak if peak > 0 else np.zeros(power.size, bool)

    # rising edges of the 0/1 activity mask count maximal runs
    edges = np.diff(np.concatenate([[0], active.astype(np.int8)]))
    event_count = int(np.count_nonzero(edges == 1))

    if not active.any():
        snr = -SNR_CAP_DB
    elif active.all():
        snr = SNR_CAP_DB
    else:
        noise = power[~active].mean()
        snr = 10.0 * np.log10(power[active].mean() / noise) if noise > 0 else SNR_CAP_DB
        snr = float(np.clip(snr, -SNR_CAP_DB, SNR_CAP_DB))
    return TimeFeatures(signal.duration_s, float(snr), event_count, rms)


def spectral_features(spectrum: Spectrum) -> SpectralFeatures:
    """Magnitude-weighted mean and spread of frequency over bins ``0 .. N//2``."""
    half = spectrum.source_length // 2 + 1
    mag = np.abs(np.asarray(spectrum.bins)[:half])
    total = mag.sum()
    if not total > 0:
        raise DegenerateInputError("spectrum has no energy in [0, Nyquist]; centroid undefined")
    freqs = np.arange(half) * spectrum.bin_width_hz
    p = mag / total
    centroid = float(p @ freqs)
    bandwidth = float(np.sqrt(p @ (freqs - centroid) ** 2))
    return SpectralFeatures(centroid, bandwidth)


def average_spectrum(signal: Signal, window_len: int = 1024, hop: int | None = None) -> Spectrum:
    """Mean Hann-windowed STFT magnitude; the spectrum fed to :func:`spectral_features`."""
    window_len = min(window_len, len(signal))
    hop = hop or max(1, window_len // 2)
    spec = stft(signal, WindowSpec(WindowKind.HANN, window_len), hop)
    mags = spec.magnitudes()
    return Spectrum(mags.mean(axis=0), signal.sample_rate_hz / window_len, window_len)


def _minmax(col: np.ndarray) -> np.ndarray:
    lo, hi = col.min(), col.max()
    if not hi > lo:
        return np.full(col.shape, 0.5)
    return np.clip((col - lo) / (hi - lo), 0.0, 1.0)


def embed(features: Sequence[tuple[SpectralFeatures, TimeFeatures]]) -> list[Body]:
    """Place each record at (centroid, bandwidth) min-max scaled to the unit square.

    Mass is RMS energy relative to the loudest record, floored at 1e-6.
    """
    if len(features) == 0:
        raise InvalidArgumentError("embed needs at least one feature record")
    centroid = np.array([s.centroid_hz for s, _ in features], dtype=np.float64)
    bandwidth = np.array([s.bandwidth_hz for s, _ in features], dtype=np.float64)
    energy = np.array([t.rms_energy for _, t in features], dtype=np.float64)
    if not energy.max() > 0:
        raise DegenerateInputError("every record has zero RMS energy; masses undefined")
    xs, ys = _minmax(centroid), _minmax(bandwidth)
    mass = np.maximum(energy / energy.max(), MASS_FLOOR)
    return [Body(i, (xs[i], ys[i]), float(mass[i])) for i in range(len(features))]
