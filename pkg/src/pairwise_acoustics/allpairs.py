"""Exact all-pairs interaction engine.

For every target ``i`` the contributions of all ``j != i`` are reduced into
``amplitude[i]`` and ``force[i]``. The pair kernel is a softened
gravitational potential:

    phi_ij = g m_i m_j / sqrt(|p_j - p_i|^2 + eps^2)
    F_ij   = g m_i m_j (p_j - p_i) / (|p_j - p_i|^2 + eps^2)^(3/2)

Targets are split into contiguous spans, one per worker. Each target's row
is reduced with the same fixed-order summation whatever the span layout,
so results do not depend on the worker count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidArgumentError
from .features import Body
from .parallel import run_spans

_BLOCK = 256


@dataclass(frozen=True)
class KernelConfig:
    g: float = 1.0
    eps_soft: float = 1e-3
    theta: float = 0.5

    def __post_init__(self):
        if not self.g > 0:
            raise InvalidArgumentError(f"g must be positive, got {self.g}")
        if not self.eps_soft > 0:
            raise InvalidArgumentError(f"eps_soft must be positive, got {self.eps_soft}")
        if not self.theta >= 0:
            raise InvalidArgumentError(f"theta must be >= 0, got {self.theta}")


@dataclass
class InteractionResult:
    ids: np.ndarray
    force: np.ndarray  # (N, 2)
    amplitude: np.ndarray  # (N,)
    evaluations: int

    def apply_to(self, bodies: Sequence[Body]):
        """Copy the accumulators into ``bodies`` (matched by position in the sequence)."""
        for b, f, a in zip(bodies, self.force, self.amplitude):
            b.force = f.copy()
            b.amplitude = float(a)


def pair_kernel(dx, dy, m_target, m_source, g: float, eps_soft: float):
    """Amplitude and force on the target from a source offset by ``(dx, dy)``.

    Broadcasts over numpy arrays; shared by both engines.
    """
    r2 = dx * dx + dy * dy + eps_soft * eps_soft
    phi = g * (m_target * m_source) / np.sqrt(r2)
    c = phi / r2
    return phi, c * dx, c * dy


def calculate_similarity(i: Body, j: Body, k: KernelConfig) -> float:
    d = j.position - i.position
    phi, _, _ = pair_kernel(d[0], d[1], i.mass, j.mass, k.g, k.eps_soft)
    return float(phi)


def adjust_amplitude(i: Body, j: Body, similarity: float, k: KernelConfig):
    """Returns ``(d_amplitude, d_force)`` for target ``i`` from source ``j``."""
    d = j.position - i.position
    r2 = d @ d + k.eps_soft * k.eps_soft
    return float(similarity), similarity / r2 * d


def as_arrays(bodies: Sequence[Body]):
    ids = np.array([b.id for b in bodies], dtype=np.int64)
    pos = np.array([b.position for b in bodies], dtype=np.float64).reshape(-1, 2)
    mass = np.array([b.mass for b in bodies], dtype=np.float64)
    return ids, pos, mass


def all_pairs(bodies: Sequence[Body], k: KernelConfig, workers: int = 1) -> InteractionResult:
    if len(bodies) == 0:
        raise InvalidArgumentError("all_pairs needs at least one body")
    ids, pos, mass = as_arrays(bodies)
    n = ids.size
    force = np.zeros((n, 2))
    amp = np.zeros(n)

    def rows(start: int, stop: int) -> int:
        for a in range(start, stop, _BLOCK):
            b = min(a + _BLOCK, stop)
            dx = pos[None, :, 0] - pos[a:b, None, 0]
            dy = pos[None, :, 1] - pos[a:b, None, 1]
            phi, fx, fy = pair_kernel(dx, dy, mass[a:b, None], mass[None, :], k.g, k.eps_soft)
            diag = (np.arange(b - a), np.arange(a, b))
            phi[diag] = fx[diag] = fy[diag] = 0.0
            amp[a:b] = phi.sum(axis=1)
            force[a:b, 0] = fx.sum(axis=1)
            force[a:b, 1] = fy.sum(axis=1)
        return (stop - start) * (n - 1)

    evals = run_spans(n, workers, rows)
    return InteractionResult(ids, force, amp, evals)
