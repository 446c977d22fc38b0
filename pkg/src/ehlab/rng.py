"""Platform-independent SplitMix64 generator with counter-based per-edge streams.

Every randomized construction in the package draws from here, so a given seed
produces the same colouring on every platform and Python version.
"""

from __future__ import annotations

import hashlib

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 output finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _key(part) -> int:
    if isinstance(part, str):
        return int.from_bytes(hashlib.blake2b(part.encode(), digest_size=8).digest(), "little")
    return int(part) & MASK64


def derive(seed: int, *parts) -> int:
    """Fold `parts` (ints or strings) into a 64-bit stream key."""
    h = mix64(_key(seed) ^ 0x6A09E667F3BCC908)
    for p in parts:
        h = mix64(h + GOLDEN_GAMMA + _key(p))
    return h


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, k: int) -> int:
        """Uniform integer in range(k) by multiply-shift."""
        if k <= 0:
            raise ValueError("k must be positive")
        return (self.next_u64() * k) >> 64

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def stream(seed: int, *parts) -> SplitMix64:
    return SplitMix64(derive(seed, *parts))


def edge_word(key: int, index: int) -> int:
    """Output number `index` of the stream keyed by `key` (jump-ahead, no state)."""
    return mix64(key + (index + 1) * GOLDEN_GAMMA)


def edge_below(key: int, index: int, k: int) -> int:
    return (edge_word(key, index) * k) >> 64


def edge_unit(key: int, index: int) -> float:
    return (edge_word(key, index) >> 11) * (1.0 / (1 << 53))
