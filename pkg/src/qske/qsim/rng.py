"""Seeded random sources. One source per thread of control."""

from __future__ import annotations

import numpy as np

ALGORITHM_ID = "pcg64"


class RandomSource:
    """Deterministic random stream identified by ``(seed, algorithm_id, stream)``.

    ``stream`` lets callers derive independent per-task sources from one root
    seed without sharing a generator between threads.
    """

    def __init__(self, seed: int = 0, stream: tuple[int, ...] = ()):
        if not 0 <= int(seed) < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = int(seed)
        self.stream = tuple(int(s) for s in stream)
        self.algorithm_id = ALGORITHM_ID
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=self.stream)
        self._gen = np.random.Generator(np.random.PCG64(seq))

    def __repr__(self):
        return f"RandomSource(seed={self.seed}, stream={self.stream}, algorithm_id={self.algorithm_id!r})"

    def derive(self, *key: int) -> RandomSource:
        return RandomSource(self.seed, self.stream + tuple(key))

    def random(self) -> float:
        return float(self._gen.random())

    def integers(self, low: int, high: int) -> int:
        """Uniform integer in ``[low, high)``."""
        return int(self._gen.integers(low, high))

    def bit(self) -> int:
        return self.integers(0, 2)

    def bits(self, n: int) -> tuple[int, ...]:
        return tuple(self.bit() for _ in range(n))

    def normal(self, size) -> np.ndarray:
        return self._gen.standard_normal(size)
