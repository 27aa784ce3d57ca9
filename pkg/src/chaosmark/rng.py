"""Bit-exact keyed randomness: FNV-1a key hashing plus a SplitMix64 stream.

Everything downstream (strategy derivation, coefficient selection) is a pure
function of a 64-bit seed, so two runs with the same key agree bit for bit
across platforms. Bounded integers use rejection sampling to stay exactly
uniform.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

_MASK64 = (1 << 64) - 1

FNV_OFFSET_BASIS = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3

_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def fnv1a64(data: bytes) -> int:
    """FNV-1a 64-bit hash of a byte string."""
    h = FNV_OFFSET_BASIS
    for byte in data:
        h ^= byte
        h = (h * FNV_PRIME) & _MASK64
    return h


def _mix64(z: int) -> int:
    z ^= z >> 30
    z = (z * _MIX1) & _MASK64
    z ^= z >> 27
    z = (z * _MIX2) & _MASK64
    z ^= z >> 31
    return z


class SplitMix64:
    """SplitMix64 stream: state advances by the 64-bit golden ratio, output is
    the mixed state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def below(self, k: int) -> int:
        """Uniform integer in [0, k) by rejection sampling."""
        if k < 1:
            raise DomainError("k must be >= 1")
        limit = ((1 << 64) // k) * k
        while True:
            v = self.next_u64()
            if v < limit:
                return v % k

    def shuffle(self, items: list) -> list:
        """In-place Fisher-Yates shuffle driven by this stream."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def _mix64_np(z):
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(_MIX1)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def keyed_permutation(seed: int, m: int) -> list:
    """Fisher-Yates permutation of range(m), bit-identical to
    SplitMix64(seed).shuffle(list(range(m))) but with the draws vectorized.

    SplitMix64's t-th output is a pure function of seed + (t+1)*golden, so all
    draws can be produced at once; the rare rejection (probability ~ m^2/2^64)
    falls back to the scalar path.
    """
    if m < 0:
        raise DomainError("m must be >= 0")
    if m < 2:
        return list(range(m))
    draws = m - 1
    with np.errstate(over="ignore"):
        states = (
            np.uint64(seed)
            + (np.arange(1, draws + 1, dtype=np.uint64)) * np.uint64(_GOLDEN)
        )
        raw = _mix64_np(states)
    bounds = np.arange(m, 1, -1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        # 2^64 mod bound, computed in wrapped uint64 arithmetic
        rem = (np.uint64(0) - bounds) % bounds
        # raw >= 2^64 - rem  <=>  raw + rem wraps past 2^64
        rejected = (raw + rem) < rem
    if bool(rejected.any()):
        items = list(range(m))
        return SplitMix64(seed).shuffle(items)
    js = (raw % bounds).tolist()
    items = list(range(m))
    i = m - 1
    for j in js:
        items[i], items[j] = items[j], items[i]
        i -= 1
    return items
