"""Seed handling.

Every randomized operation takes an integer seed and builds its own
``random.Random``; nothing touches the global RNG state. Sub-streams
(e.g. one independent randomization chain per community) are derived
from the master seed with an integer mix so that results do not depend
on execution order.
"""

from __future__ import annotations

import random

DEFAULT_SEED = 42

_MASK = (1 << 64) - 1
# splitmix64 increment / finalizer constants
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _splitmix(z: int) -> int:
    z = (z + _GOLDEN) & _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def derive_seed(master: int | None, *stream: int) -> int:
    """Derive an independent child seed from ``master`` and stream indices.

    Pure integer mixing: the result is reproducible across processes
    (no reliance on Python's salted ``hash``).
    """
    z = (DEFAULT_SEED if master is None else master) & _MASK
    for part in stream:
        z = _splitmix(z ^ (part & _MASK))
    return z


def make_rng(seed: int | None) -> random.Random:
    """Return a fresh ``random.Random`` seeded with ``seed`` (default if None)."""
    return random.Random(DEFAULT_SEED if seed is None else seed)
