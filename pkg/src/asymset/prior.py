"""Priors over the item universe [N] = {1, ..., N}.

Only the decoder ever sees a prior.  Decoding needs every probability inside
[1/(4N), 1/2) (the class M), which splits [N] into T = ceil(lg lg 4N) buckets
of doubly-exponentially shrinking probability.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

SUM_TOLERANCE = 1e-9
# largest deviation from 1 that a prior file may carry before it is rejected
FILE_SUM_TOLERANCE = 1e-6
# slack for float comparisons of Huffman weights against a bit budget
WEIGHT_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Prior:
    probs: np.ndarray
    in_M: bool = False

    def __post_init__(self):
        p = np.array(self.probs, dtype=np.float64)
        if p.ndim != 1 or p.size == 0:
            raise ValueError("prior must be a non-empty vector")
        if np.any(p < 0) or not np.all(np.isfinite(p)):
            raise ValueError("probabilities must be finite and non-negative")
        if abs(p.sum() - 1.0) > SUM_TOLERANCE:
            raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
        if self.in_M:
            n = p.size
            if np.any(p < 1.0 / (4 * n)) or np.any(p >= 0.5):
                raise ValueError("prior is not in class M")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    @property
    def N(self) -> int:
        return int(self.probs.size)

    def __getitem__(self, i: int) -> float:
        """Probability of item i (1-based)."""
        return float(self.probs[i - 1])

    def __eq__(self, other):
        return (isinstance(other, Prior) and self.in_M == other.in_M
                and np.array_equal(self.probs, other.probs))


def item_set(items: Iterable[int], N: int | None = None) -> tuple[int, ...]:
    """Normalize to a sorted, deduplicated tuple, optionally range-checked."""
    s = tuple(sorted(set(int(i) for i in items)))
    if N is not None and s and (s[0] < 1 or s[-1] > N):
        bad = [i for i in s if not 1 <= i <= N]
        raise ValueError(f"items {bad} outside [1, {N}]")
    return s


def level_count(N: int) -> int:
    """T = ceil(lg lg 4N), at least 1, in exact integer arithmetic."""
    if N < 1:
        raise ValueError("N must be positive")
    T = 1
    while (1 << (1 << T)) < 4 * N:
        T += 1
    return T


def normalize_to_M(raw: Prior) -> Prior:
    """Map any prior into class M.

    Items above 1/3 are clamped to 1/3, every other item is raised to at least
    1/(2N), and the result is renormalized.  Unclamped items lose at most a
    factor 2 in code length: lg(1/out(i)) <= 2 lg(1/raw(i)).
    """
    n = raw.N
    if n < 4:
        raise ValueError("normalization into class M needs N >= 4")
    p = raw.probs
    heavy = p > 1.0 / 3.0
    q = np.where(heavy, 1.0 / 3.0, np.maximum(p, 1.0 / (2 * n)))
    q = q / q.sum()
    return Prior(q, in_M=True)


def bucket_thresholds(T: int) -> list[float]:
    """Lower bound 2^(-2^t) of each bucket t = 1..T (exact powers of two)."""
    return [math.ldexp(1.0, -(1 << t)) for t in range(1, T + 1)]


def bucket_of(mu: Prior, i: int) -> int:
    """Bucket t with 2^(-2^t) <= mu(i) < 2^(-2^(t-1))."""
    _require_M(mu)
    p = mu[i]
    for t, lo in enumerate(bucket_thresholds(level_count(mu.N)), start=1):
        if p >= lo:
            return t
    raise AssertionError("class-M prior escaped every bucket")


def buckets(mu: Prior) -> np.ndarray:
    """Bucket index of every item, as an array aligned with mu.probs."""
    _require_M(mu)
    levels = np.zeros(mu.N, dtype=np.int64)
    for t, lo in reversed(list(enumerate(bucket_thresholds(level_count(mu.N)), start=1))):
        levels[mu.probs >= lo] = t
    return levels


def _require_M(mu: Prior) -> None:
    if not mu.in_M:
        raise ValueError("prior must be certified in class M (use normalize_to_M)")


def huffman_weight(mu: Prior, S: Iterable[int]) -> float:
    """sum over i in S of lg(1/mu(i)), in bits."""
    S = item_set(S, mu.N)
    if not S:
        return 0.0
    p = mu.probs[np.array(S) - 1]
    if np.any(p <= 0):
        raise ValueError("set contains a zero-probability item")
    return float(-np.log2(p).sum())


def satisfies_huffman(mu: Prior, S: Iterable[int], m_star: float) -> bool:
    return huffman_weight(mu, S) <= m_star + WEIGHT_TOLERANCE


def entropy(mu: Prior) -> float:
    p = mu.probs[mu.probs > 0]
    return float(-(p * np.log2(p)).sum())


def sample_set(mu: Prior, k: int, seed) -> tuple[int, ...]:
    """Distinct items among k i.i.d. draws from mu (inverse-CDF sampling).

    `seed` is anything numpy.random.default_rng accepts, e.g. an int or a
    list of ints.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = np.random.default_rng(seed)
    cdf = np.cumsum(mu.probs)
    idx = np.searchsorted(cdf, rng.random(k) * cdf[-1], side="right")
    idx = np.minimum(idx, mu.N - 1)
    return item_set(idx + 1)


# Prior sources: a generator string or a file of probabilities.

def uniform(N: int) -> Prior:
    return Prior(np.full(N, 1.0 / N))


def zipf(N: int, s: float) -> Prior:
    w = 1.0 / np.arange(1, N + 1, dtype=np.float64) ** s
    return Prior(w / w.sum())


def dyadic(N: int) -> Prior:
    """(1/2, 1/4, ..., 2^-(N-1), 2^-(N-1))."""
    if N < 2:
        return Prior(np.ones(1))
    p = np.ldexp(1.0, -np.arange(1, N + 1, dtype=np.int64))
    p[-1] = p[-2]
    return Prior(p)


@dataclass
class LoadedPrior:
    prior: Prior
    source: str
    correction: float = field(default=0.0)  # input sum minus 1


def load_prior(source: str) -> LoadedPrior:
    """Parse `uniform:N`, `zipf:N:s`, `dyadic:N`, or a file path."""
    head = source.split(":", 1)[0]
    if head in ("uniform", "zipf", "dyadic") and not os.path.exists(source):
        return LoadedPrior(_generator(source), source)
    with open(source) as fh:
        return parse_prior_text(fh.read(), source)


def _generator(spec: str) -> Prior:
    parts = spec.split(":")
    try:
        if parts[0] == "uniform" and len(parts) == 2:
            return uniform(_positive(parts[1]))
        if parts[0] == "dyadic" and len(parts) == 2:
            return dyadic(_positive(parts[1]))
        if parts[0] == "zipf" and len(parts) == 3:
            return zipf(_positive(parts[1]), float(parts[2]))
    except ValueError as exc:
        raise ValueError(f"bad prior generator {spec!r}: {exc}") from None
    raise ValueError(f"bad prior generator {spec!r}")


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise ValueError("N must be positive")
    return n


def parse_prior_text(text: str, source: str = "<text>") -> LoadedPrior:
    """One probability per non-blank line; the sum is renormalized to 1."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) == 1 and ":" in lines[0]:
        return LoadedPrior(_generator(lines[0]), source)
    try:
        p = np.array([float(ln) for ln in lines], dtype=np.float64)
    except ValueError as exc:
        raise ValueError(f"{source}: {exc}") from None
    if p.size == 0:
        raise ValueError(f"{source}: empty prior")
    if np.any(p < 0) or not np.all(np.isfinite(p)):
        raise ValueError(f"{source}: probabilities must be finite and non-negative")
    total = float(p.sum())
    if abs(total - 1.0) > FILE_SUM_TOLERANCE:
        raise ValueError(f"{source}: probabilities sum to {total!r}, not 1")
    return LoadedPrior(Prior(p / total), source, total - 1.0)
