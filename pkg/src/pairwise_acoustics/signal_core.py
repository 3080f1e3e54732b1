"""Windowing, framing and discrete Fourier analysis of sampled waveforms.

Conventions used throughout:

* windows are *symmetric* (denominator ``L - 1``); a length-1 window is ``[1]``;
* the forward DFT is unnormalized, ``X[k] = sum_n x[n] exp(-2j*pi*k*n/N)``;
* frames that would run past the end of a signal are dropped, never padded.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgumentError


@dataclass(frozen=True)
class Signal:
    samples: np.ndarray
    sample_rate_hz: float

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1 or samples.size < 1:
            raise InvalidArgumentError("signal needs at least one sample")
        if not np.all(np.isfinite(samples)):
            raise InvalidArgumentError("signal samples must be finite")
        if not self.sample_rate_hz > 0:
            raise InvalidArgumentError(f"sample rate must be positive, got {self.sample_rate_hz}")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate_hz", float(self.sample_rate_hz))

    def __len__(self):
        return self.samples.size

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate_hz


class WindowKind(str, enum.Enum):
    RECTANGULAR = "rectangular"
    HAMMING = "hamming"
    HANN = "hann"


@dataclass(frozen=True)
class WindowSpec:
    kind: WindowKind
    length: int

    def __post_init__(self):
        object.__setattr__(self, "kind", WindowKind(self.kind))
        if int(self.length) < 1:
            raise InvalidArgumentError(f"window length must be >= 1, got {self.length}")
        object.__setattr__(self, "length", int(self.length))


@dataclass(frozen=True)
class Spectrum:
    bins: np.ndarray
    bin_width_hz: float
    source_length: int

    @property
    def frequencies_hz(self) -> np.ndarray:
        return np.arange(self.source_length) * self.bin_width_hz

    @property
    def nyquist_hz(self) -> float:
        return 0.5 * self.source_length * self.bin_width_hz


@dataclass(frozen=True)
class Spectrogram:
    frames: list[Spectrum]
    hop: int
    window: WindowSpec
    offsets: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))

    def magnitudes(self) -> np.ndarray:
        """``(n_frames, n_bins)`` array of bin magnitudes."""
        if not self.frames:
            return np.zeros((0, self.window.length))
        return np.abs(np.stack([f.bins for f in self.frames]))


def make_window(spec: WindowSpec) -> np.ndarray:
    L = spec.length
    if L < 1:
        raise InvalidArgumentError("zero-length window")
    if L == 1 or spec.kind is WindowKind.RECTANGULAR:
        return np.ones(L)
    phase = np.cos(2.0 * np.pi * np.arange(L) / (L - 1))
    if spec.kind is WindowKind.HAMMING:
        w = 0.54 - 0.46 * phase
    else:
        w = 0.5 * (1.0 - phase)
    # cos rounding can push symmetric pairs apart by an ulp; mirror to keep exact palindromes
    half = L // 2
    w[L - half:] = w[:half][::-1]
    return np.clip(w, 0.0, 1.0)


def frame_signal(signal: Signal, frame_len: int, hop: int) -> np.ndarray:
    """Read-only ``(n_frames, frame_len)`` view; frame ``m`` starts at ``m * hop``."""
    if frame_len < 1 or hop < 1:
        raise InvalidArgumentError(f"frame_len and hop must be >= 1, got {frame_len}, {hop}")
    x = signal.samples
    if x.size < frame_len:
        return np.empty((0, frame_len))
    return np.lib.stride_tricks.sliding_window_view(x, frame_len)[::hop]


def _check_frame(frame) -> np.ndarray:
    x = np.asarray(frame)
    if x.ndim != 1 or x.size == 0:
        raise InvalidArgumentError("dft needs a non-empty 1-D frame")
    if not np.all(np.isfinite(x)):
        raise InvalidArgumentError("dft input must be finite")
    return x


def dft_direct(frame, sample_rate_hz: float = 1.0) -> Spectrum:
    """Reference O(N^2) DFT by explicit summation against the twiddle matrix."""
    x = _check_frame(frame)
    n = x.size
    idx = np.arange(n)
    # reduce k*n mod N before scaling keeps the phase argument small and exact
    twiddle = np.exp(-2j * np.pi * ((np.outer(idx, idx) % n) / n))
    return Spectrum(twiddle @ x.astype(np.complex128), sample_rate_hz / n, n)


def dft(frame, sample_rate_hz: float = 1.0) -> Spectrum:
    """Forward DFT via FFT; agrees with :func:`dft_direct` to ~1e-12 relative."""
    x = _check_frame(frame)
    return Spectrum(np.fft.fft(x), sample_rate_hz / x.size, x.size)


def synth_sinusoid(A: float, f0_hz: float, sample_rate_hz: float, n: int) -> Signal:
    if n < 1:
        raise InvalidArgumentError("n must be >= 1")
    if not 0 < f0_hz < sample_rate_hz / 2:
        raise InvalidArgumentError(
            f"f0 {f0_hz} Hz must lie strictly between 0 and Nyquist {sample_rate_hz / 2} Hz"
        )
    t = np.arange(n)
    return Signal(A * np.sin(2.0 * np.pi * f0_hz * t / sample_rate_hz), sample_rate_hz)


def stft(signal: Signal, window: WindowSpec, hop: int) -> Spectrogram:
    if hop < 1:
        raise InvalidArgumentError(f"hop must be >= 1, got {hop}")
    frames = frame_signal(signal, window.length, hop)
    w = make_window(window)
    bins = np.fft.fft(frames * w, axis=1)
    width = signal.sample_rate_hz / window.length
    spectra = [Spectrum(row, width, window.length) for row in bins]
    return Spectrogram(spectra, hop, window, np.arange(len(spectra)) * hop)
