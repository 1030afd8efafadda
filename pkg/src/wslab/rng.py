"""Counter-based per-sample random streams.

Sample i of a run seeded with `seed` always draws from

    Generator(Philox(key=(seed, i)))

so the stream depends only on (seed, i): any worker pool, chunking, or
execution order reproduces identical output bit for bit.
"""

from __future__ import annotations

import numpy as np


def sample_stream(seed: int, sample_id: int) -> np.random.Generator:
    key = np.array([np.uint64(seed & 0xFFFFFFFFFFFFFFFF),
                    np.uint64(sample_id)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
