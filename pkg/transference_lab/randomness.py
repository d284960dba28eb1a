"""Counter-based random streams keyed by (master seed, stream, indices).

Every consumer draws from ``numpy.random.Philox`` seeded through a
``SeedSequence`` whose spawn key names the stream and the task position, so
a task's randomness never depends on which worker ran it or in what order.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np


class Stream(IntEnum):
    SAMPLING = 0
    MU = 1
    PRUNE = 2
    LOCAL_SEARCH = 3
    MOMENTS = 4


def philox_rng(seed: int, stream: Stream | int, *indices: int) -> np.random.Generator:
    if seed < 0:
        raise ValueError("seed must be non-negative")
    key = (int(stream),) + tuple(int(index) for index in indices)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=key)))


def bernoulli_flags(rng: np.random.Generator, size: int, q: float) -> np.ndarray:
    """Independent Bernoulli(q) flags; q = 0 and q = 1 are exact."""

    if q <= 0.0:
        return np.zeros(size, dtype=bool)
    if q >= 1.0:
        return np.ones(size, dtype=bool)
    return rng.random(size) < q
