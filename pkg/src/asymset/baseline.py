"""Random linear code with maximum-likelihood list decoding.

Enc(S) = C 1_S over GF(2) for a seeded pseudorandom m x N matrix C.  Given a
priority list L of candidate sets, the decoder returns the first listed set
whose encoding matches.  Communication is near optimal; decoding costs |L|
encodings, which is exponential in m for any list worth decoding.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .hashing import GOLDEN, MASK64, MIX1, MIX2, mix64, mix64_array
from .prior import item_set

# level tag that separates code columns from the multi-level hash functions
COLUMN_TAG = 1 << 63


class NoMatch(LookupError):
    """No listed set encodes to the received word."""


@dataclass(frozen=True)
class RandomCode:
    seed: int
    m: int
    N: int

    def __post_init__(self):
        if self.m < 1 or self.N < 1:
            raise ValueError("m and N must be positive")

    @property
    def _blocks(self) -> int:
        return -(-self.m // 64)

    def column(self, i: int) -> int:
        """Column c_i as an m-bit integer: the first m bits of the block stream."""
        if not 1 <= i <= self.N:
            raise ValueError(f"item {i} outside [1, {self.N}]")
        stream = 0
        for j in range(self._blocks):
            stream = (stream << 64) | mix64(self.seed, COLUMN_TAG + j, i)
        return stream >> (64 * self._blocks - self.m)

    def columns(self) -> np.ndarray:
        """All N columns at once; requires m <= 64."""
        if self.m > 64:
            raise ValueError("vectorized columns need m <= 64")
        v = mix64_array(self.seed, COLUMN_TAG, np.arange(1, self.N + 1))
        return v >> np.uint64(64 - self.m)


def rl_encode(code: RandomCode, S: Iterable[int]) -> int:
    y = 0
    for i in item_set(S, code.N):
        y ^= code.column(i)
    return y


def ml_decode(code: RandomCode, L: Sequence[tuple[int, ...]], y: int) -> tuple[int, ...]:
    """First set in L whose encoding equals y."""
    if y < 0 or y >> code.m:
        raise ValueError(f"received word exceeds {code.m} bits")
    for S in L:
        if rl_encode(code, S) == y:
            return item_set(S)
    raise NoMatch("received word matches no listed set")


def error_bound(list_len: int, m: int) -> Fraction:
    """Per-set failure bound (|L| - 1) 2^-m."""
    _check_bound_args(list_len, m)
    return Fraction(list_len - 1, 1 << m)


def forall_error_bound(list_len: int, m: int) -> Fraction:
    """Bound |L| (|L| - 1) 2^-m on failing for any set of the list."""
    _check_bound_args(list_len, m)
    return Fraction(list_len * (list_len - 1), 1 << m)


def _check_bound_args(list_len: int, m: int) -> None:
    if list_len < 1 or m < 1:
        raise ValueError("list length and m must be positive")


def check_set_list(L: Iterable[Iterable[int]], N: int | None = None) -> list[tuple[int, ...]]:
    out = [item_set(S, N) for S in L]
    if len(set(out)) != len(out):
        raise ValueError("set list contains duplicates")
    return out


def parse_set_list(text: str, N: int | None = None) -> list[tuple[int, ...]]:
    """One set per line as comma-separated items; `{}` marks the empty set."""
    sets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("{}", "-"):
            sets.append(())
            continue
        try:
            sets.append(tuple(int(tok) for tok in line.split(",") if tok.strip()))
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse {line!r}") from None
    return check_set_list(sets, N)


def format_set_list(L: Iterable[Iterable[int]]) -> str:
    return "".join((",".join(map(str, S)) if S else "{}") + "\n" for S in L)


def _incidence(L: Sequence[tuple[int, ...]], N: int) -> np.ndarray:
    inc = np.zeros((len(L), N), dtype=bool)
    for r, S in enumerate(L):
        inc[r, np.array(S, dtype=np.int64) - 1] = True
    return inc


def list_failures(code: RandomCode, L: Sequence[tuple[int, ...]], inc=None) -> np.ndarray:
    """Boolean per listed set: does ML decoding of its encoding fail?

    Set t fails exactly when an earlier listed set shares its encoding.
    """
    if inc is None:
        inc = _incidence(L, code.N)
    cols = code.columns()
    words = np.bitwise_xor.reduce(np.where(inc, cols, np.uint64(0)), axis=1)
    seen = set()
    out = np.zeros(len(L), dtype=bool)
    for t, y in enumerate(words.tolist()):
        if y in seen:
            out[t] = True
        seen.add(y)
    return out


@dataclass
class BaselineReport:
    mode: str
    N: int
    m: int
    list_len: int
    trials: int
    bound: float
    empirical: float  # mean per-set failure rate (each) or whole-list failure rate (forall)
    worst_set_rate: float
    passed: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def run_baseline(N: int, m: int, L: Sequence[tuple[int, ...]], trials: int,
                 base_seed: int = 0, mode: str = "each") -> BaselineReport:
    """Monte-Carlo over code seeds base_seed, base_seed+1, ...

    Passes when the observed rate is within twice the analytic bound.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if mode not in ("each", "forall"):
        raise ValueError(f"unknown mode {mode!r}")
    L = check_set_list(L, N)
    inc = _incidence(L, N)
    per_set = np.zeros(len(L), dtype=np.int64)
    whole = 0
    for s in range(trials):
        fails = list_failures(RandomCode((base_seed + s) & MASK64, m, N), L, inc)
        per_set += fails
        whole += bool(fails.any())
    if mode == "each":
        bound = float(error_bound(len(L), m))
        empirical = float(per_set.mean()) / trials
        observed = float(per_set.max()) / trials
    else:
        bound = float(forall_error_bound(len(L), m))
        empirical = observed = whole / trials
    return BaselineReport(mode, N, m, len(L), trials, bound, empirical,
                          float(per_set.max()) / trials, observed <= 2 * bound)


def pair_collision_rate(N: int, m: int, S1, S2, trials: int, base_seed: int = 0) -> float:
    """Fraction of seeds under which S1 and S2 share an encoding (m <= 64)."""
    if m > 64:
        raise ValueError("m must be <= 64")
    diff = sorted(set(item_set(S1, N)) ^ set(item_set(S2, N)))
    if not diff:
        raise ValueError("sets must differ")
    seeds = (np.arange(trials, dtype=np.uint64) + np.uint64(base_seed & MASK64))
    acc = np.zeros(trials, dtype=np.uint64)
    for i in diff:
        acc ^= _column_over_seeds(seeds, i)
    acc >>= np.uint64(64 - m)
    return float(np.count_nonzero(acc == 0)) / trials


def _column_over_seeds(seeds: np.ndarray, i: int) -> np.ndarray:
    with np.errstate(over="ignore"):
        v = seeds ^ np.uint64((COLUMN_TAG * GOLDEN) & MASK64) ^ np.uint64((i * MIX1) & MASK64)
        v ^= v >> np.uint64(30)
        v *= np.uint64(MIX1)
        v ^= v >> np.uint64(27)
        v *= np.uint64(MIX2)
        v ^= v >> np.uint64(31)
    return v


def random_set_list(N: int, size: int, seed: int, max_items: int = 8) -> list[tuple[int, ...]]:
    """`size` distinct random subsets of [N] with 1..max_items items each."""
    rng = np.random.default_rng(seed)
    out: list[tuple[int, ...]] = []
    seen = set()
    while len(out) < size:
        r = int(rng.integers(1, max_items + 1))
        S = item_set(rng.choice(N, size=r, replace=False) + 1)
        if S not in seen:
            seen.add(S)
            out.append(S)
    return out
