"""Desk-scale checks of the lower bound and of the list/Huffman/entropy claims."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .prior import Prior, entropy, item_set

MAX_ENUMERATION = 10**6
MASS_TOLERANCE = 1e-12


@dataclass
class BoundReport:
    claim: str
    inputs: dict
    values: dict
    passed: bool
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"claim": self.claim, "inputs": self.inputs, "values": self.values,
                "passed": self.passed, "notes": self.notes}


# Deterministic lower bound

def colex_subsets(N: int, k: int):
    """k-subsets of [N] in colexicographic order."""
    # itertools yields lex order; colex is lex order on reversed tuples
    yield from sorted(itertools.combinations(range(1, N + 1), k),
                      key=lambda c: c[::-1])


def find_collision(encoder: Callable[[tuple[int, ...]], Hashable], N: int, k: int,
                   m: int | None = None):
    """First pair of k-subsets with equal encodings, scanning in colex order.

    Returns (earlier, later) or None when the encoder is injective on the
    k-subsets.  When 2^m < C(N, k) a pair always exists.
    """
    total = math.comb(N, k)
    if total > MAX_ENUMERATION:
        raise ValueError(f"C({N},{k}) = {total} subsets is too many to enumerate")
    seen: dict[Hashable, tuple[int, ...]] = {}
    for S in colex_subsets(N, k):
        code = encoder(S)
        if m is not None and isinstance(code, int) and not 0 <= code < (1 << m):
            raise ValueError(f"encoder output {code} is not an {m}-bit word")
        if code in seen:
            return seen[code], S
        seen[code] = S
    return None


def linear_encoder(matrix: np.ndarray) -> Callable[[tuple[int, ...]], int]:
    """Deterministic GF(2)-linear encoder from an m x N 0/1 matrix."""
    matrix = np.asarray(matrix, dtype=np.uint8) & 1
    m = matrix.shape[0]
    weights = 1 << np.arange(m - 1, -1, -1, dtype=np.int64)
    cols = [int((matrix[:, j].astype(np.int64) * weights).sum()) for j in range(matrix.shape[1])]

    def enc(S):
        y = 0
        for i in S:
            y ^= cols[i - 1]
        return y

    return enc


def random_linear_encoder(N: int, m: int, seed: int):
    rng = np.random.default_rng(seed)
    return linear_encoder(rng.integers(0, 2, size=(m, N)))


def sum_mod_encoder(m: int):
    return lambda S: sum(S) % (1 << m)


def index_encoder(N: int, k: int):
    """Injective encoder: the colex rank of the subset."""
    rank = {S: r for r, S in enumerate(colex_subsets(N, k))}
    return lambda S: rank[tuple(S)]


def uniform_union_prior(S1: Iterable[int], S2: Iterable[int], N: int) -> Prior:
    """Uniform prior on S1 u S2, padded with the smallest unused items to 2k."""
    S1, S2 = item_set(S1, N), item_set(S2, N)
    if len(S1) != len(S2):
        raise ValueError("sets must have equal size")
    k = len(S1)
    if 2 * k > N:
        raise ValueError(f"cannot pad to {2 * k} items within [1, {N}]")
    M = set(S1) | set(S2)
    for i in range(1, N + 1):
        if len(M) >= 2 * k:
            break
        M.add(i)
    probs = np.zeros(N)
    probs[np.array(sorted(M)) - 1] = 1.0 / len(M)
    return Prior(probs)


def witness_check(encoder, decoder, N: int, k: int, m: int | None = None) -> BoundReport:
    """Rebuild the impossibility witness for a deterministic scheme.

    `decoder(codeword, prior)` is any deterministic decoder.  Two colliding
    k-sets share one codeword, so under the uniform prior on their union the
    decoder must return the wrong answer for at least one of them.
    """
    pair = find_collision(encoder, N, k, m)
    inputs = {"N": N, "k": k, "m": m}
    if pair is None:
        return BoundReport("deterministic-impossibility", inputs, {"collision": None},
                           True, ["encoder is injective on k-subsets"])
    S1, S2 = pair
    mu = uniform_union_prior(S1, S2, N)
    decoded = item_set(decoder(encoder(S1), mu))
    wrong = [S for S in (S1, S2) if S != decoded]
    values = {
        "collision": [list(S1), list(S2)],
        "decoded": list(decoded),
        "misidentified": [list(S) for S in wrong],
        "error_lower_bound": 1.0 / (2 * (2 * k) ** k),
    }
    return BoundReport("deterministic-impossibility", inputs, values, len(wrong) >= 1)


# Appendix claims

def list_mass(mu: Prior) -> float:
    """prod_i (1 + mu(i)), an upper bound on sum over sets of prod mu(i); <= e."""
    return float(np.exp(np.log1p(mu.probs).sum()))


def check_list_mass(mu: Prior) -> BoundReport:
    value = list_mass(mu)
    return BoundReport("list-to-huffman", {"N": mu.N}, {"list_mass": value, "e": math.e},
                       value <= math.e + 1e-12)


@dataclass(frozen=True)
class GenericPrior:
    """A distribution over arbitrary hashable outcomes, in listed id order."""
    support: tuple[tuple[Hashable, float], ...]

    def __post_init__(self):
        probs = [p for _, p in self.support]
        if not probs or any(p <= 0 for p in probs):
            raise ValueError("probabilities must be positive")
        if abs(sum(probs) - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {sum(probs)!r}")
        ids = [o for o, _ in self.support]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate outcome ids")

    @classmethod
    def from_probs(cls, probs: Sequence[float]) -> "GenericPrior":
        return cls(tuple((j, float(p)) for j, p in enumerate(probs)))

    def entropy(self) -> float:
        p = np.array([q for _, q in self.support])
        return float(-(p * np.log2(p)).sum())


def cover_size(sigma: GenericPrior, delta: float) -> int:
    """Smallest m such that some 2^m outcomes carry mass >= 1 - delta."""
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    order = sorted(range(len(sigma.support)), key=lambda j: -sigma.support[j][1])
    acc = 0.0
    for n, j in enumerate(order, start=1):
        acc += sigma.support[j][1]
        if acc >= 1 - delta - MASS_TOLERANCE:
            return (n - 1).bit_length()
    return (len(order) - 1).bit_length()


def check_cover_entropy(sigma: GenericPrior, delta: float) -> BoundReport:
    c = cover_size(sigma, delta)
    h = sigma.entropy()
    rhs = h / delta
    return BoundReport("cover-size", {"support": len(sigma.support), "delta": delta},
                       {"cover_size": c, "entropy_over_delta": rhs,
                        "ratio": c / rhs if rhs > 0 else None},
                       c <= rhs + 1e-9)


def near_tight_family(delta: float, support: int) -> GenericPrior:
    """One atom of mass delta, the rest spread uniformly."""
    rest = (1 - delta) / (support - 1)
    return GenericPrior.from_probs([delta] + [rest] * (support - 1))


def huffman_budget(k_entropy: float, N: int, delta_h: float, eps: float) -> int:
    """Smallest integer Huffman budget whose derived entropy budget covers k H."""
    c = (0.5 / eps + 1.0 / 3.0) * math.log2(2 * N * N / delta_h) * math.log(2 / delta_h)
    scale = (1 + eps) / (1 - delta_h / (2 * N))
    return math.ceil(scale * math.ceil(k_entropy - 1e-12) + c - 1e-12)


def entropy_budget(m_h: float, N: int, delta_h: float, eps: float) -> int:
    c = (0.5 / eps + 1.0 / 3.0) * math.log2(2 * N * N / delta_h) * math.log(2 / delta_h)
    return math.floor((1 - delta_h / (2 * N)) / (1 + eps) * (m_h - c))


def huffman_tail_check(mu: Prior, k: int, delta_h: float, trials: int, seed: int,
                       eps: float = 1.0) -> BoundReport:
    """Empirical Huffman-condition rate for k i.i.d. draws from mu.

    The budget m_h is the smallest one whose derived entropy budget m_e is at
    least k H(mu); the claim then promises Pr[sum over draws of
    lg 1/mu(i) <= m_h] >= 1 - delta_h.  Weights count every draw, repeats
    included, which upper-bounds the weight of the distinct set.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not 0 < eps < 1 + 1e-12:
        raise ValueError("eps must lie in (0, 1]")
    N = mu.N
    kH = k * entropy(mu)
    m_h = huffman_budget(kH, N, delta_h, eps)
    m_e = entropy_budget(m_h, N, delta_h, eps)
    rng = np.random.default_rng(seed)
    cdf = np.cumsum(mu.probs)
    draws = np.searchsorted(cdf, rng.random((trials, k)) * cdf[-1], side="right")
    draws = np.minimum(draws, N - 1)
    with np.errstate(divide="ignore"):
        cost = -np.log2(mu.probs)
    weights = cost[draws].sum(axis=1)
    fraction = float(np.mean(weights <= m_h + 1e-9))
    sigma = math.sqrt(delta_h * (1 - delta_h) / trials)
    notes = []
    if m_e <= 0:
        notes.append("derived entropy budget is non-positive; the claim is vacuous here")
    return BoundReport(
        "huffman-to-entropy",
        {"N": N, "k": k, "delta_h": delta_h, "trials": trials, "eps": eps},
        {"k_entropy": kH, "m_h": m_h, "m_e": m_e, "fraction": fraction,
         "threshold": 1 - delta_h - 3 * sigma},
        fraction >= 1 - delta_h - 3 * sigma,
        notes,
    )
