"""Counter-based SplitMix64 generator.

Every draw is a pure function of ``(seed, counter)``, so streams are
bit-identical across platforms and numpy versions, and can be produced in
vectorized blocks.
"""

from __future__ import annotations

import numpy as np

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the SplitMix64 stream for ``seed``."""
    base = np.uint64(seed & _MASK64)
    k = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = base + k * _GAMMA
        z = (z ^ (z >> np.uint64(30))) * _M1
        z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


class SplitMix64:
    """Sequential facade over :func:`splitmix64` that tracks its own counter."""

    def __init__(self, seed: int):
        self.seed = int(seed)
        self.counter = 0

    def next_u64(self, count: int) -> np.ndarray:
        out = splitmix64(self.seed, self.counter, count)
        self.counter += count
        return out

    def uniform(self, count: int, low: float = 0.0, high: float = 1.0) -> np.ndarray:
        # top 53 bits -> [0, 1)
        u = (self.next_u64(count) >> np.uint64(11)).astype(np.float64) * 2.0**-53
        return low + (high - low) * u

    def normal(self, count: int, mean: float = 0.0, std: float = 1.0) -> np.ndarray:
        """Box-Muller; consumes ``2 * ceil(count / 2)`` draws."""
        pairs = (count + 1) // 2
        u1 = 1.0 - self.uniform(pairs)  # (0, 1], keeps log finite
        u2 = self.uniform(pairs)
        r = np.sqrt(-2.0 * np.log(u1))
        z = np.concatenate([r * np.cos(2 * np.pi * u2), r * np.sin(2 * np.pi * u2)])
        return mean + std * z[:count]
