"""The multi-level scheme: hashed Reed-Solomon syndromes, one per bucket level.

Level t hashes every item of S into [D_t] and sends the RS syndrome of the
hashed indicator vector with sparsity budget k_t.  The encoder never sees the
prior.  The decoder, which knows mu, recovers S bucket by bucket and peels
every recovered item out of the deeper levels before decoding them.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from . import gf
from .hashing import hash_array, mix64
from .prior import Prior, buckets, huffman_weight, item_set, level_count, satisfies_huffman
from .rs import DecodeFailure, RsCodec, Syndrome, decode_locators, power_sums

MAGIC = b"ASC1"
VERSION = 1
_HEADER = struct.Struct(">4sBQIIIQQ")
HEADER_SIZE = _HEADER.size
# cap on decoder restarts after a spurious item is detected
MAX_REPAIRS = 16


class SchemeError(ValueError):
    """Parameters that cannot be realized."""


class MessageFormatError(ValueError):
    """A serialized message that does not match its header."""


@dataclass(frozen=True)
class LevelParams:
    t: int
    D: int
    w: int
    k: int
    m: int

    @property
    def codec(self) -> RsCodec:
        return _codec(self.D, self.w, self.k)


_codec_cache: dict[tuple[int, int, int], RsCodec] = {}


def _codec(D: int, w: int, k: int) -> RsCodec:
    key = (D, w, k)
    if key not in _codec_cache:
        _codec_cache[key] = RsCodec(gf.canonical_spec(w), D, k)
    return _codec_cache[key]


@dataclass(frozen=True)
class SchemeParams:
    N: int
    m_star: int
    delta: Fraction
    T: int
    levels: tuple[LevelParams, ...]

    @property
    def total_bits(self) -> int:
        return sum(lv.m for lv in self.levels)

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "m_star": self.m_star,
            "delta": f"{self.delta.numerator}/{self.delta.denominator}",
            "T": self.T,
            "levels": [
                {"t": lv.t, "D": lv.D, "w": lv.w, "k": lv.k, "m": lv.m}
                for lv in self.levels
            ],
            "total_bits": self.total_bits,
        }


def parse_delta(delta) -> Fraction:
    """Accept a Fraction, an int pair, or 'NUM/DEN' text; floats are refused."""
    if isinstance(delta, float):
        raise SchemeError("delta must be an exact rational, not a float")
    if isinstance(delta, tuple):
        delta = Fraction(*delta)
    try:
        d = Fraction(delta)
    except (ValueError, ZeroDivisionError, TypeError):
        raise SchemeError(f"bad delta {delta!r}; expected NUM/DEN") from None
    if isinstance(delta, str) and "." in delta:
        raise SchemeError("delta must be written as NUM/DEN")
    if not 0 < d < 1:
        raise SchemeError(f"delta must lie in (0, 1), got {d}")
    return d


def derive_params(N: int, m_star: int, delta) -> SchemeParams:
    """Per-level (D_t, w_t, k_t, m_t) in exact integer arithmetic.

    D_t = ceil(T/delta * (2^(2*2^t) / 2 + m*^2 / 2^(2t)))
    k_t = min(ceil(m* / 2^(t-1)), ceil(4 m* / floor(lg m*)))
    w_t = ceil(lg(D_t + 1)),  m_t = 2 k_t w_t
    """
    if N < 4:
        raise SchemeError(f"N must be >= 4, got {N}")
    if m_star < 4:
        raise SchemeError(f"m_star must be >= 4, got {m_star}")
    delta = parse_delta(delta)
    p, q = delta.numerator, delta.denominator
    T = level_count(N)
    lg_m = m_star.bit_length() - 1
    k_cap = -(-4 * m_star // lg_m)
    levels = []
    for t in range(1, T + 1):
        num = T * q * ((1 << (2 * (1 << t) - 1 + 2 * t)) + m_star * m_star)
        den = p << (2 * t)
        D = -(-num // den)
        w = D.bit_length()
        if w > gf.MAX_DEGREE:
            raise SchemeError(
                f"level {t} needs GF(2^{w}); universe too large for the "
                f"{gf.MAX_DEGREE}-bit field cap")
        k = min(-(-m_star // (1 << (t - 1))), k_cap)
        if 2 * k > D:
            raise SchemeError(f"level {t}: 2k={2 * k} exceeds D={D}")
        levels.append(LevelParams(t, D, w, k, 2 * k * w))
    return SchemeParams(N, m_star, delta, T, tuple(levels))


@dataclass(frozen=True)
class Message:
    bits: int
    nbits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.nbits:
            raise ValueError("message bits exceed declared length")

    def __xor__(self, other: "Message") -> "Message":
        if self.nbits != other.nbits:
            raise ValueError("message lengths differ")
        return Message(self.bits ^ other.bits, self.nbits)

    def payload(self) -> bytes:
        """Bits packed MSB-first, zero-padded to a byte boundary."""
        nbytes = (self.nbits + 7) // 8
        return (self.bits << (8 * nbytes - self.nbits)).to_bytes(nbytes, "big")

    @classmethod
    def from_payload(cls, data: bytes, nbits: int) -> "Message":
        nbytes = (nbits + 7) // 8
        if len(data) != nbytes:
            raise MessageFormatError(
                f"payload length mismatch: {len(data)} bytes, expected {nbytes}")
        value = int.from_bytes(data, "big")
        pad = 8 * nbytes - nbits
        if value & ((1 << pad) - 1):
            raise MessageFormatError("nonzero padding bits")
        return cls(value >> pad, nbits)


def split_levels(params: SchemeParams, msg: Message) -> list[Syndrome]:
    if msg.nbits != params.total_bits:
        raise MessageFormatError(
            f"payload length mismatch: {msg.nbits} bits, expected {params.total_bits}")
    out = []
    remaining = msg.nbits
    for lv in params.levels:
        remaining -= lv.m
        block = (msg.bits >> remaining) & ((1 << lv.m) - 1)
        out.append(Syndrome.from_int(lv.codec.spec, 2 * lv.k, block))
    return out


def join_levels(params: SchemeParams, syndromes: Iterable[Syndrome]) -> Message:
    bits = 0
    for lv, syn in zip(params.levels, syndromes, strict=True):
        bits = (bits << lv.m) | syn.to_int()
    return Message(bits, params.total_bits)


def hash_position(seed: int, lv: LevelParams, i: int) -> int:
    return mix64(seed, lv.t, i) % lv.D


def _column(seed: int, lv: LevelParams, i: int) -> tuple[int, ...]:
    spec = lv.codec.spec
    x = spec.alpha_pow(hash_position(seed, lv, i))
    return power_sums(spec, x, 2 * lv.k)


def _check_items(params: SchemeParams, S) -> tuple[int, ...]:
    try:
        return item_set(S, params.N)
    except ValueError as exc:
        raise ValueError(f"item out of range: {exc}") from None


def encode(params: SchemeParams, seed: int, S: Iterable[int]) -> Message:
    """Oblivious linear encoding of S; depends on (params, seed, S) only."""
    S = _check_items(params, S)
    syndromes = []
    for lv in params.levels:
        acc = [0] * (2 * lv.k)
        for i in S:
            for j, v in enumerate(_column(seed, lv, i)):
                acc[j] ^= v
        syndromes.append(Syndrome(lv.codec.spec, tuple(acc)))
    return join_levels(params, syndromes)


def zero_message(params: SchemeParams) -> Message:
    return Message(0, params.total_bits)


def update(params: SchemeParams, seed: int, msg: Message, i: int) -> Message:
    """Toggle membership of item i in an encoded set."""
    return msg ^ encode(params, seed, [i])


@dataclass
class DecodeDiagnostics:
    level_failed: list[bool]
    level_decoded: list[int]  # positions recovered by the RS decoder per level
    level_added: list[int]  # items of B_t identified per level
    repaired: list[int] = field(default_factory=list)  # items dropped as spurious
    reencode_ok: bool = True

    @property
    def clean(self) -> bool:
        return not any(self.level_failed) and self.reencode_ok

    def as_dict(self) -> dict:
        return {
            "level_failed": list(self.level_failed),
            "level_decoded": list(self.level_decoded),
            "level_added": list(self.level_added),
            "repaired": list(self.repaired),
            "reencode_ok": self.reencode_ok,
            "clean": self.clean,
        }


def _level_locators(seed: int, lv: LevelParams, items: np.ndarray) -> np.ndarray:
    spec = lv.codec.spec
    pos = hash_array(seed, lv.t, lv.D, items)
    if spec.w <= 63:
        return gf.alpha_pow_array(spec, pos)
    return np.array([spec.alpha_pow(int(h)) for h in pos], dtype=object)


def _require_matching_prior(params: SchemeParams, mu: Prior) -> None:
    if mu.N != params.N:
        raise ValueError(f"prior covers {mu.N} items, scheme expects N={params.N}")
    if not mu.in_M:
        raise ValueError("prior must be certified in class M (use normalize_to_M)")


def decode(params: SchemeParams, seed: int, mu: Prior, msg: Message
           ) -> tuple[tuple[int, ...], DecodeDiagnostics]:
    """Recover S from its encoding using the decoder-side prior mu.

    Levels are processed in order.  At level t the residual syndrome is decoded
    and every item of bucket B_t whose hashed position appears in the decoded
    support joins the output; its columns are subtracted from all deeper
    levels.  A level whose syndrome cannot be decoded contributes nothing and
    is flagged.

    An item of B_t outside S can be picked up when a deeper item of S hashes
    onto it at level t.  Such an item is recognized once the deeper item is
    recovered, and decoding restarts with it excluded.
    """
    _require_matching_prior(params, mu)
    received = split_levels(params, msg)
    level_of = buckets(mu)
    members = [np.flatnonzero(level_of == lv.t) + 1 for lv in params.levels]

    banned: set[int] = set()
    repaired: list[int] = []
    for _ in range(MAX_REPAIRS + 1):
        found, added_at, diag = _peel(params, seed, received, members, banned)
        spurious = _spurious(params, seed, found, added_at) - banned
        if not spurious:
            break
        banned |= spurious
        repaired.extend(sorted(spurious))
    diag.repaired = repaired
    S_hat = item_set(found)
    diag.reencode_ok = encode(params, seed, S_hat) == msg
    return S_hat, diag


def _peel(params, seed, received, members, banned):
    residual = [list(s.values) for s in received]
    found: list[int] = []
    added_at: dict[int, int] = {}
    T = params.T
    diag = DecodeDiagnostics([False] * T, [0] * T, [0] * T)
    for idx, lv in enumerate(params.levels):
        codec = lv.codec
        syn = Syndrome(codec.spec, tuple(residual[idx]))
        try:
            locs = decode_locators(codec, syn)
        except DecodeFailure:
            diag.level_failed[idx] = True
            continue
        diag.level_decoded[idx] = len(locs)
        if not locs:
            continue
        cand = members[idx]
        if banned:
            cand = cand[~np.isin(cand, list(banned))]
        if cand.size == 0:
            continue
        wanted = set(locs)
        hits = [int(i) for i, x in zip(cand, _level_locators(seed, lv, cand))
                if int(x) in wanted]
        diag.level_added[idx] = len(hits)
        for i in hits:
            found.append(i)
            added_at[i] = idx
            for deeper in range(idx + 1, T):
                col = _column(seed, params.levels[deeper], i)
                res = residual[deeper]
                for j, v in enumerate(col):
                    res[j] ^= v
    return found, added_at, diag


def _spurious(params, seed, found, added_at) -> set[int]:
    """Items added at some level whose position there is shared by a deeper find."""
    out = set()
    for i in found:
        t = added_at[i]
        lv = params.levels[t]
        h = hash_position(seed, lv, i)
        for j in found:
            if added_at[j] > t and hash_position(seed, lv, j) == h:
                out.add(i)
                break
    return out


@dataclass
class RoundTripReport:
    items: tuple[int, ...]
    decoded: tuple[int, ...]
    huffman_weight: float
    huffman_ok: bool
    success: bool
    total_bits: int
    ratio: float
    diagnostics: DecodeDiagnostics


def verify_roundtrip(params: SchemeParams, seed: int, mu: Prior, S) -> RoundTripReport:
    S = _check_items(params, S)
    weight = huffman_weight(mu, S)
    S_hat, diag = decode(params, seed, mu, encode(params, seed, S))
    return RoundTripReport(
        items=S,
        decoded=S_hat,
        huffman_weight=weight,
        huffman_ok=satisfies_huffman(mu, S, params.m_star),
        success=S_hat == S,
        total_bits=params.total_bits,
        ratio=params.total_bits / max(weight, 1.0),
        diagnostics=diag,
    )


@dataclass
class ProofEvents:
    """Per-level conditions under which peeling provably succeeds."""
    bucket_collision_free: list[bool]  # h_t injective on B_t
    cross_collision_free: list[bool]  # no S_t item shares a position with S_{t+1:T}
    within_budget: list[bool]  # |S_{t:T}| <= k_t

    @property
    def hold(self) -> bool:
        return (all(self.bucket_collision_free) and all(self.cross_collision_free)
                and all(self.within_budget))


def proof_events(params: SchemeParams, seed: int, mu: Prior, S) -> ProofEvents:
    _require_matching_prior(params, mu)
    S = np.array(_check_items(params, S), dtype=np.int64)
    level_of = buckets(mu)
    s_level = level_of[S - 1] if S.size else np.zeros(0, dtype=np.int64)
    ev = ProofEvents([], [], [])
    for lv in params.levels:
        b_t = np.flatnonzero(level_of == lv.t) + 1
        h = hash_array(seed, lv.t, lv.D, b_t)
        ev.bucket_collision_free.append(np.unique(h).size == h.size)
        here = hash_array(seed, lv.t, lv.D, S[s_level == lv.t])
        deeper = hash_array(seed, lv.t, lv.D, S[s_level > lv.t])
        ev.cross_collision_free.append(not np.intersect1d(here, deeper).size)
        ev.within_budget.append(int(np.sum(s_level >= lv.t)) <= lv.k)
    return ev


# ASC1 container: header fields big-endian, then the packed payload.

def to_bytes(params: SchemeParams, seed: int, msg: Message) -> bytes:
    if msg.nbits != params.total_bits:
        raise MessageFormatError("message length does not match parameters")
    header = _HEADER.pack(MAGIC, VERSION, params.N, params.m_star,
                          params.delta.numerator, params.delta.denominator,
                          seed, msg.nbits)
    return header + msg.payload()


def from_bytes(data: bytes) -> tuple[SchemeParams, int, Message]:
    if len(data) < HEADER_SIZE:
        raise MessageFormatError(f"truncated header: {len(data)} bytes")
    magic, version, N, m_star, num, den, seed, nbits = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise MessageFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise MessageFormatError(f"unsupported version {version}")
    if den == 0:
        raise MessageFormatError("zero delta denominator")
    try:
        params = derive_params(N, m_star, Fraction(num, den))
    except SchemeError as exc:
        raise MessageFormatError(f"header parameters rejected: {exc}") from None
    if nbits != params.total_bits:
        raise MessageFormatError(
            f"payload length mismatch: header says {nbits} bits, "
            f"parameters give {params.total_bits}")
    msg = Message.from_payload(data[HEADER_SIZE:], nbits)
    return params, seed, msg
