"""
Deterministic random number generation.

Two generators are used throughout lccvqe:

- ``SplitMix64`` drives graph generation and seed derivation. It is a tiny,
  portable 64-bit generator whose output depends only on the seed, so a graph
  generated here is the same on every platform and Python version.
  Constants: increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and
  0x94D049BB133111EB (shifts 30, 27, 31).
- ``numpy.random.Generator(PCG64(seed))`` drives simulation randomness
  (initial angles, trajectories, shots, hyperplanes) and is always seeded from
  the seed tree: experiment -> instance -> trial -> edge/evaluation, where each
  child seed is ``derive_seed(parent, *labels)``.
"""
import hashlib
from typing import List, Union

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

SeedLabel = Union[int, str]


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 generator with the few draws the generators need."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return _mix64(self._state)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased by rejection."""
        if n <= 0:
            raise ValueError("randbelow requires n > 0")
        bound = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < bound:
                return r % n

    def shuffle(self, items: List) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]


def _label_value(label: SeedLabel) -> int:
    if isinstance(label, int):
        return label & MASK64
    digest = hashlib.blake2b(str(label).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def derive_seed(parent: int, *labels: SeedLabel) -> int:
    """
    Derive a child seed from a parent seed and a path of labels.

    Example:
        trial_seed = derive_seed(experiment_seed, "gnp-n10-p0.5-s0", "trial", 3)
    """
    z = parent & MASK64
    for label in labels:
        z = _mix64(((z ^ _label_value(label)) + GOLDEN_GAMMA) & MASK64)
    return z


def numpy_rng(seed: int) -> np.random.Generator:
    """PCG64-backed numpy generator for a (derived) seed."""
    return np.random.Generator(np.random.PCG64(seed & MASK64))
