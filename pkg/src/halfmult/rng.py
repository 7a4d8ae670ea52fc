"""Seeded, counter-based randomness.

All randomized operations in this package draw from a Philox counter-based
generator keyed on (seed, stream). Philox output for a fixed key is
platform-independent, and distinct streams (e.g. one per construction
attempt) are statistically independent, so results never depend on thread
count or scheduling. Each operation documents its own draw order.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Generator keyed on (seed, stream); same key, same draw sequence."""
    key = np.array([seed & _MASK64, stream & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
