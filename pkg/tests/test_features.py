import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairwise_acoustics.errors import DegenerateInputError, InvalidArgumentError
from pairwise_acoustics.features import (
    Body,
    SpectralFeatures,
    TimeFeatures,
    average_spectrum,
    embed,
    spectral_features,
    time_features,
)
from pairwise_acoustics.signal_core import Signal, Spectrum, dft, synth_sinusoid

FS = 1000.0  # 10 ms frames are 10 samples


def frames_signal(levels):
    """One constant-level 10-sample frame per entry of ``levels``."""
    return Signal(np.repeat(np.asarray(levels, dtype=float), 10), FS)


def test_all_zero_signal():
    tf = time_features(Signal(np.zeros(500), FS))
    assert tf.event_count == 0
    assert tf.rms_energy == 0
    assert tf.duration_s == 0.5


def test_single_burst():
    tf = time_features(frames_signal([0.01] * 20 + [1.0] * 5 + [0.01] * 20), 0.5)
    assert tf.event_count == 1
    # event power 1, floor power 1e-4
    assert tf.snr_db == pytest.approx(40.0, rel=1e-12)


def test_two_bursts_with_subthreshold_gap():
    levels = [0.0] * 5 + [1.0] * 4 + [0.3] * 3 + [0.9] * 4 + [0.0] * 5
    assert time_features(frames_signal(levels), 0.5).event_count == 2


def test_snr_caps():
    assert time_features(frames_signal([0.0] * 3 + [1.0] * 2)).snr_db == 99.0
    assert time_features(frames_signal([1.0] * 4)).snr_db == 99.0
    assert time_features(frames_signal([0.0] * 4)).snr_db == -99.0


def test_rms_energy_and_duration():
    x = np.array([3.0, -4.0] * 50)
    tf = time_features(Signal(x, 200.0))
    assert tf.rms_energy == pytest.approx(np.sqrt(12.5))
    assert tf.duration_s == pytest.approx(0.5)


def test_time_features_threshold_range():
    with pytest.raises(InvalidArgumentError):
        time_features(frames_signal([1.0]), 1.0)


@settings(max_examples=30)
@given(st.lists(st.floats(0, 1), min_size=1, max_size=40), st.floats(0.01, 100))
def test_amplitude_scaling(levels, c):
    sig = frames_signal(levels)
    base = time_features(sig)
    scaled = time_features(Signal(c * sig.samples, FS))
    assert scaled.rms_energy == pytest.approx(c * base.rms_energy, rel=1e-9, abs=1e-300)
    assert scaled.event_count == base.event_count
    assert base.event_count <= len(levels)


def test_pure_tone_centroid():
    N, k0, fs = 256, 19, 8000.0
    spec = dft(synth_sinusoid(1.0, k0 * fs / N, fs, N).samples, fs)
    sf = spectral_features(spec)
    assert sf.centroid_hz == pytest.approx(k0 * fs / N, rel=1e-9)
    assert sf.bandwidth_hz < spec.bin_width_hz * 1e-3


def test_two_tones_centroid_midpoint():
    bins = np.zeros(64, complex)
    bins[5] = bins[59] = 3.0
    bins[17] = bins[47] = 3.0j
    sf = spectral_features(Spectrum(bins, 10.0, 64))
    assert sf.centroid_hz == pytest.approx((50.0 + 170.0) / 2, rel=1e-9)
    assert sf.bandwidth_hz == pytest.approx(60.0, rel=1e-9)


def test_zero_spectrum_rejected():
    with pytest.raises(DegenerateInputError):
        spectral_features(Spectrum(np.zeros(16, complex), 1.0, 16))


@settings(max_examples=40)
@given(st.integers(2, 300), st.floats(1e-3, 1e3), st.integers(0, 2**32))
def test_spectral_scale_invariance_and_bounds(n, c, seed):
    x = np.random.default_rng(seed).standard_normal(n)
    spec = dft(x, 1000.0)
    scaled = Spectrum(c * spec.bins, spec.bin_width_hz, spec.source_length)
    a, b = spectral_features(spec), spectral_features(scaled)
    assert b.centroid_hz == pytest.approx(a.centroid_hz, rel=1e-9, abs=1e-12)
    assert b.bandwidth_hz == pytest.approx(a.bandwidth_hz, rel=1e-9, abs=1e-9)
    assert 0 <= a.centroid_hz <= spec.nyquist_hz
    assert 0 <= a.bandwidth_hz <= spec.nyquist_hz


def test_average_spectrum_tracks_tone():
    fs = 8000.0
    sig = synth_sinusoid(0.7, 1000.0, fs, 8000)
    sf = spectral_features(average_spectrum(sig, 1024))
    assert sf.centroid_hz == pytest.approx(1000.0, abs=fs / 1024)


def rec(c, bw, rms):
    return SpectralFeatures(c, bw), TimeFeatures(1.0, 0.0, 1, rms)


def test_embed_single_record():
    (b,) = embed([rec(440.0, 30.0, 0.2)])
    assert b.position.tolist() == [0.5, 0.5]
    assert b.mass == 1.0


def test_embed_endpoints():
    bodies = embed([rec(100.0, 10.0, 1.0), rec(300.0, 20.0, 1.0)])
    assert [b.position[0] for b in bodies] == [0.0, 1.0]


def test_embed_three_records():
    bodies = embed([rec(100.0, 50.0, 0.2), rec(200.0, 50.0, 0.4), rec(400.0, 50.0, 0.1)])
    # x = (c - 100) / 300; constant bandwidth -> 0.5; mass = rms / 0.4
    np.testing.assert_allclose([b.position[0] for b in bodies], [0.0, 1 / 3, 1.0], rtol=1e-15)
    assert [b.position[1] for b in bodies] == [0.5, 0.5, 0.5]
    np.testing.assert_allclose([b.mass for b in bodies], [0.5, 1.0, 0.25], rtol=1e-15)


def test_embed_mass_floor_and_errors():
    bodies = embed([rec(1.0, 1.0, 0.0), rec(2.0, 2.0, 5.0)])
    assert bodies[0].mass == 1e-6
    with pytest.raises(InvalidArgumentError):
        embed([])
    with pytest.raises(DegenerateInputError):
        embed([rec(1.0, 1.0, 0.0)])


@given(st.lists(st.tuples(st.floats(0, 8000), st.floats(0, 4000), st.floats(0, 1)), min_size=1, max_size=30))
def test_embed_stays_in_unit_square(rows):
    if max(r[2] for r in rows) <= 0:
        return
    for b in embed([rec(*r) for r in rows]):
        assert np.all((0 <= b.position) & (b.position <= 1))
        assert 0 < b.mass <= 1


def test_body_validation_and_reset():
    b = Body(3, (0.2, 0.4), 0.5)
    b.force += 1.0
    b.amplitude = 2.0
    b.reset()
    assert b.force.tolist() == [0.0, 0.0] and b.amplitude == 0.0
    with pytest.raises(InvalidArgumentError):
        Body(0, (0.1, 0.1), 0.0)
    with pytest.raises(InvalidArgumentError):
        Body(0, (np.nan, 0.1), 1.0)
