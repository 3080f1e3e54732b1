"""Static span partitioning over a thread pool."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np


def spans(n: int, workers: int) -> list[tuple[int, int]]:
    """Split ``range(n)`` into at most ``workers`` contiguous, ordered spans."""
    workers = max(1, min(int(workers), n)) if n else 1
    edges = np.linspace(0, n, workers + 1).round().astype(int)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def run_spans(n: int, workers: int, fn: Callable[[int, int], int]) -> int:
    """Call ``fn(start, stop)`` for every span; returns the summed counters.

    Each call must write only its own slice of the output. Counters are
    combined in span order.
    """
    parts = spans(n, workers)
    if len(parts) <= 1:
        return sum(fn(a, b) for a, b in parts)
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        futures = [pool.submit(fn, a, b) for a, b in parts]
        return sum(f.result() for f in futures)
