"""Seeded hash functions h_t : [N] -> [D_t] shared by encoder and decoder.

The mixing recipe is fixed bit-for-bit so that messages produced by one
implementation decode under another:

    v = seed ^ (t * 0x9E3779B97F4A7C15) ^ (i * 0xBF58476D1CE4E5B9)   (mod 2^64)
    v ^= v >> 30; v *= 0xBF58476D1CE4E5B9
    v ^= v >> 27; v *= 0x94D049BB133111EB
    v ^= v >> 31
    h = v mod D_t
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def mix64(seed: int, t: int, i: int) -> int:
    v = (seed ^ (t * GOLDEN) ^ (i * MIX1)) & MASK64
    v ^= v >> 30
    v = (v * MIX1) & MASK64
    v ^= v >> 27
    v = (v * MIX2) & MASK64
    v ^= v >> 31
    return v


@dataclass(frozen=True)
class HashCtx:
    seed: int
    level: int
    domain: int

    def __post_init__(self):
        if self.domain < 1:
            raise ValueError("hash domain must be >= 1")

    def __call__(self, i: int) -> int:
        return mix64(self.seed, self.level, i) % self.domain

    def many(self, items) -> np.ndarray:
        return hash_array(self.seed, self.level, self.domain, items)


def hash_item(ctx: HashCtx, i: int) -> int:
    return ctx(i)


def mix64_array(seed: int, t: int, items) -> np.ndarray:
    """mix64 over an array of items, in wrapping uint64 arithmetic."""
    i = np.asarray(items, dtype=np.uint64)
    base = np.uint64((seed ^ (t * GOLDEN)) & MASK64)
    with np.errstate(over="ignore"):
        v = base ^ (i * np.uint64(MIX1))
        v ^= v >> np.uint64(30)
        v *= np.uint64(MIX1)
        v ^= v >> np.uint64(27)
        v *= np.uint64(MIX2)
        v ^= v >> np.uint64(31)
    return v


def hash_array(seed: int, t: int, domain: int, items) -> np.ndarray:
    v = mix64_array(seed, t, items)
    if domain > MASK64:
        return v
    return v % np.uint64(domain)
