"""File formats: 16-bit mono PCM WAV, and the CSV/JSON artifacts of the CLI.

Floats are written with ``repr`` so every CSV round-trips exactly.
"""

from __future__ import annotations

import csv
import json
import wave
from dataclasses import asdict
from pathlib import Path
from typing import Sequence

import numpy as np

from .allpairs import InteractionResult
from .errors import UnsupportedFormatError
from .features import Body, SpectralFeatures, TimeFeatures
from .regression import DataSet, RidgeModel
from .signal_core import Signal

FEATURE_HEADER = ["id", "centroid_hz", "bandwidth_hz", "duration_s", "snr_db", "event_count", "rms_energy"]
BODY_HEADER = ["id", "x", "y", "mass"]
RESULT_HEADER = ["id", "fx", "fy", "amplitude"]
REPORT_SCHEMA = 1


def load_wav(path) -> Signal:
    """Read a 16-bit mono PCM WAV, scaling samples by 1/32768 into [-1, 1)."""
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"no such file: {path}")
    try:
        with wave.open(str(path), "rb") as w:
            channels, width = w.getnchannels(), w.getsampwidth()
            rate, nframes = w.getframerate(), w.getnframes()
            if channels != 1:
                raise UnsupportedFormatError(f"{path}: channels={channels}, only mono is supported")
            if width != 2:
                raise UnsupportedFormatError(f"{path}: bits={8 * width}, only 16-bit PCM is supported")
            raw = w.readframes(nframes)
    except wave.Error as exc:
        raise UnsupportedFormatError(f"{path}: format: {exc}") from exc
    except EOFError as exc:
        raise UnsupportedFormatError(f"{path}: header: truncated RIFF/WAVE header") from exc
    if len(raw) != 2 * nframes:
        raise UnsupportedFormatError(
            f"{path}: data: header declares {nframes} samples, found {len(raw) // 2}"
        )
    if nframes == 0:
        raise UnsupportedFormatError(f"{path}: data: no samples")
    samples = np.frombuffer(raw, dtype="<i2").astype(np.float64) / 32768.0
    return Signal(samples, rate)


def write_wav(path, signal: Signal):
    """Write as 16-bit mono PCM; samples are rounded and clipped to the int16 range."""
    q = np.clip(np.round(signal.samples * 32768.0), -32768, 32767).astype("<i2")
    with wave.open(str(path), "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(int(round(signal.sample_rate_hz)))
        w.writeframes(q.tobytes())


def _write_rows(path, header, rows):
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(header)
        out.writerows(rows)


def _read_rows(path, header=None):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise UnsupportedFormatError(f"{path}: empty CSV")
    if header is not None and rows[0] != header:
        raise UnsupportedFormatError(f"{path}: header {rows[0]} != expected {header}")
    return rows[0], rows[1:]


def write_features(path, ids: Sequence[int], records: Sequence[tuple[SpectralFeatures, TimeFeatures]]):
    _write_rows(path, FEATURE_HEADER, [
        [i, repr(s.centroid_hz), repr(s.bandwidth_hz), repr(t.duration_s), repr(t.snr_db),
         t.event_count, repr(t.rms_energy)]
        for i, (s, t) in zip(ids, records)
    ])


def read_features(path):
    _, rows = _read_rows(path, FEATURE_HEADER)
    ids, records = [], []
    for r in rows:
        ids.append(int(r[0]))
        records.append((
            SpectralFeatures(float(r[1]), float(r[2])),
            TimeFeatures(float(r[3]), float(r[4]), int(r[5]), float(r[6])),
        ))
    return ids, records


def write_bodies(path, bodies: Sequence[Body]):
    _write_rows(path, BODY_HEADER, [
        [b.id, repr(float(b.position[0])), repr(float(b.position[1])), repr(float(b.mass))]
        for b in bodies
    ])


def read_bodies(path) -> list[Body]:
    _, rows = _read_rows(path, BODY_HEADER)
    try:
        return [Body(int(r[0]), (float(r[1]), float(r[2])), float(r[3])) for r in rows]
    except (ValueError, IndexError) as exc:
        raise UnsupportedFormatError(f"{path}: bad body row: {exc}") from exc


def write_result(path, result: InteractionResult):
    _write_rows(path, RESULT_HEADER, [
        [int(i), repr(float(f[0])), repr(float(f[1])), repr(float(a))]
        for i, f, a in zip(result.ids, result.force, result.amplitude)
    ])


def read_result(path, evaluations: int = 0) -> InteractionResult:
    """Evaluation counts are not stored in the CSV; pass them in if known."""
    _, rows = _read_rows(path, RESULT_HEADER)
    arr = np.array([[float(x) for x in r] for r in rows]).reshape(-1, 4)
    return InteractionResult(arr[:, 0].astype(np.int64), arr[:, 1:3].copy(), arr[:, 3].copy(), evaluations)


def write_dataset(path, data: DataSet):
    header = [f"x{j}" for j in range(data.n_features)] + [f"y{j}" for j in range(data.n_outputs)]
    _write_rows(path, header, [[repr(float(v)) for v in row] for row in np.hstack([data.X, data.Y])])


def read_dataset(path, n_outputs: int) -> DataSet:
    """The last ``n_outputs`` columns are outputs; everything before them is input."""
    header, rows = _read_rows(path)
    if not 1 <= n_outputs < len(header):
        raise UnsupportedFormatError(f"{path}: cannot take {n_outputs} outputs from {len(header)} columns")
    try:
        arr = np.array([[float(x) for x in r] for r in rows], dtype=np.float64).reshape(-1, len(header))
    except ValueError as exc:
        raise UnsupportedFormatError(f"{path}: {exc}") from exc
    return DataSet(arr[:, :-n_outputs], arr[:, -n_outputs:])


def write_weights(path, model: RidgeModel):
    header = ["feature"] + [f"y{j}" for j in range(model.weights.shape[1])]
    _write_rows(path, header, [[i] + [repr(float(v)) for v in row] for i, row in enumerate(model.weights)])


def read_weights(path, lam: float = 0.0) -> RidgeModel:
    _, rows = _read_rows(path)
    return RidgeModel(np.array([[float(v) for v in r[1:]] for r in rows]), lam)


def write_reports(path, reports):
    payload = {"schema": REPORT_SCHEMA, "reports": [asdict(r) for r in reports]}
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def read_reports(path):
    from .harness import BenchReport

    payload = json.loads(Path(path).read_text())
    if payload.get("schema") != REPORT_SCHEMA:
        raise UnsupportedFormatError(f"{path}: schema {payload.get('schema')!r} != {REPORT_SCHEMA}")
    return [BenchReport(**r) for r in payload["reports"]]
