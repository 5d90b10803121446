"""Reed-Solomon syndrome sensing of sparse binary vectors.

A binary vector with support s in [0, D) is measured by the parity-check map
of a Reed-Solomon code: position p has locator X_p = alpha^p and the syndrome
is (S_1, ..., S_2k) with S_j = sum over p in s of X_p^j.  Any support of size
at most k is recovered from its syndrome by Berlekamp-Massey followed by a
root search of the error-locator polynomial.  Error magnitudes are always 1,
so no Forney step is needed; every result is re-encoded and checked instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf import FieldElement, FieldSpec, canonical_spec

# above this domain size, decode finds roots algebraically instead of scanning
CHIEN_MAX_DOMAIN = 1 << 16


class DecodeFailure(Exception):
    """The syndrome is not the encoding of any support of size <= k."""


@dataclass(frozen=True)
class RsCodec:
    spec: FieldSpec
    D: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("sparsity budget k must be >= 1")
        if not 1 <= self.D <= self.spec.order:
            raise ValueError(f"domain size {self.D} does not fit GF(2^{self.spec.w})")
        if 2 * self.k > self.D:
            raise ValueError(f"2k = {2 * self.k} exceeds domain size {self.D}")

    @classmethod
    def for_domain(cls, D: int, k: int) -> "RsCodec":
        """Codec over the smallest canonical field with 2^w >= D + 1."""
        w = max(2, D.bit_length())
        return cls(canonical_spec(w), D, k)

    @property
    def n_syndromes(self) -> int:
        return 2 * self.k

    @property
    def bits(self) -> int:
        """Serialized syndrome length, 2k field elements of w bits each."""
        return 2 * self.k * self.spec.w


@dataclass(frozen=True)
class Syndrome:
    spec: FieldSpec
    values: tuple[int, ...]

    @property
    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(v, self.spec) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __bool__(self) -> bool:
        return any(self.values)

    def __xor__(self, other: "Syndrome") -> "Syndrome":
        return xor_syndromes(self, other)

    def to_int(self) -> int:
        """Elements concatenated, each as w bits MSB-first."""
        acc = 0
        for v in self.values:
            acc = (acc << self.spec.w) | v
        return acc

    @classmethod
    def from_int(cls, spec: FieldSpec, n: int, bits: int) -> "Syndrome":
        mask = (1 << spec.w) - 1
        values = [(bits >> (spec.w * (n - 1 - j))) & mask for j in range(n)]
        return cls(spec, tuple(values))

    @classmethod
    def zero(cls, codec: RsCodec) -> "Syndrome":
        return cls(codec.spec, (0,) * codec.n_syndromes)


def sparse_support(positions: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(positions)))


def locator(codec: RsCodec, p: int) -> FieldElement:
    _check_position(codec, p)
    return FieldElement(codec.spec.alpha_pow(p), codec.spec)


def _check_position(codec: RsCodec, p: int) -> None:
    if not 0 <= p < codec.D:
        raise ValueError(f"position {p} outside [0, {codec.D})")


def power_sums(spec: FieldSpec, x: int, n: int) -> tuple[int, ...]:
    """(x, x^2, ..., x^n)."""
    out = []
    acc = x
    for _ in range(n):
        out.append(acc)
        acc = spec.mul(acc, x)
    return tuple(out)


def encode_position(codec: RsCodec, p: int) -> Syndrome:
    _check_position(codec, p)
    x = codec.spec.alpha_pow(p)
    return Syndrome(codec.spec, power_sums(codec.spec, x, codec.n_syndromes))


def encode_locators(codec: RsCodec, locators: Iterable[int]) -> Syndrome:
    acc = [0] * codec.n_syndromes
    for x in locators:
        for j, v in enumerate(power_sums(codec.spec, x, codec.n_syndromes)):
            acc[j] ^= v
    return Syndrome(codec.spec, tuple(acc))


def encode_support(codec: RsCodec, positions: Iterable[int]) -> Syndrome:
    """Syndrome of the indicator vector of `positions` (a set; no repeats)."""
    positions = list(positions)
    for p in positions:
        _check_position(codec, p)
    return encode_locators(codec, (codec.spec.alpha_pow(p) for p in positions))


def xor_syndromes(a: Syndrome, b: Syndrome) -> Syndrome:
    if a.spec != b.spec:
        raise ValueError("syndromes live in different fields")
    if len(a) != len(b):
        raise ValueError(f"syndrome lengths differ: {len(a)} vs {len(b)}")
    return Syndrome(a.spec, tuple(x ^ y for x, y in zip(a.values, b.values)))


def berlekamp_massey(syn: Syndrome) -> list[int]:
    """Shortest connection polynomial of the syndrome sequence, low order first.

    The result has length L + 1 where L is the linear complexity; its leading
    coefficient may be zero when no support of size L explains the sequence.
    """
    f = syn.spec
    s = syn.values
    C, B = [1], [1]
    L, m, b = 0, 1, 1
    for n in range(len(s)):
        d = s[n]
        for i in range(1, L + 1):
            if i < len(C) and C[i]:
                d ^= f.mul(C[i], s[n - i])
        if d == 0:
            m += 1
            continue
        coef = f.mul(d, f.inv(b))
        T = list(C)
        if len(C) < len(B) + m:
            C.extend([0] * (len(B) + m - len(C)))
        for i, bi in enumerate(B):
            if bi:
                C[i + m] ^= f.mul(coef, bi)
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, d, 1
        else:
            m += 1
    C = C[:L + 1]
    C.extend([0] * (L + 1 - len(C)))
    return C


def poly_eval(spec: FieldSpec, poly: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(poly):
        acc = spec.mul(acc, x) ^ c
    return acc


def chien_search(codec: RsCodec, poly: Sequence[int]) -> tuple[int, ...]:
    """All p in [0, D) with poly(locator(p)^-1) == 0, by exhaustive scan.

    Evaluates the reversed polynomial at alpha^p, which has the same zeros.
    Cost is O(D * deg); this is the decoder's hotspot for large D.
    """
    f = codec.spec
    rev = _trim(list(reversed(_trim(list(poly)))))
    if len(rev) <= 1:
        return ()
    found = []
    # term[j] tracks rev[j] * alpha^(p*j)
    term = list(rev)
    steps = [f.alpha_pow(j) for j in range(len(rev))]
    for p in range(codec.D):
        acc = 0
        for t in term:
            acc ^= t
        if acc == 0:
            found.append(p)
        term = [f.mul(t, s) for t, s in zip(term, steps)]
    return tuple(found)


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


# Polynomials over GF(2^w) as coefficient lists, lowest degree first.

def _poly_mod(spec: FieldSpec, a: list[int], m: list[int]) -> list[int]:
    """a mod m for monic m."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        if lead:
            for i in range(dm):
                if m[i]:
                    a[shift + i] ^= spec.mul(lead, m[i])
        a.pop()
        _trim(a)
    return a


def _poly_divmod(spec: FieldSpec, a: list[int], m: list[int]) -> tuple[list[int], list[int]]:
    """(a div m, a mod m) for monic m."""
    a = _trim(list(a))
    dm = len(m) - 1
    q = [0] * max(0, len(a) - dm)
    while len(a) - 1 >= dm:
        lead = a[-1]
        shift = len(a) - 1 - dm
        q[shift] = lead
        if lead:
            for i in range(dm):
                if m[i]:
                    a[shift + i] ^= spec.mul(lead, m[i])
        a.pop()
        _trim(a)
    return q, a


def _monic(spec: FieldSpec, a: list[int]) -> list[int]:
    inv = spec.inv(a[-1])
    return [spec.mul(c, inv) for c in a]


def _poly_gcd(spec: FieldSpec, a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        b = _monic(spec, b)
        a, b = b, _poly_mod(spec, a, b)
    return _monic(spec, a) if a else a


def _poly_sqr_mod(spec: FieldSpec, a: list[int], m: list[int]) -> list[int]:
    # squaring is linear in characteristic 2: (sum c_i x^i)^2 = sum c_i^2 x^2i
    sq = [0] * (2 * len(a))
    for i, c in enumerate(a):
        if c:
            sq[2 * i] = spec.mul(c, c)
    return _poly_mod(spec, sq, m)


def find_roots(spec: FieldSpec, poly: Sequence[int]) -> list[int] | None:
    """Roots of `poly` if it splits into distinct linear factors, else None.

    Uses x^(2^w) = x mod f as the splitting test and then separates roots by
    gcds with Tr(beta x) for beta running over the polynomial basis; the
    trace map on a basis distinguishes any two distinct field elements.
    """
    f = _trim(list(poly))
    if not f:
        raise ValueError("zero polynomial")
    f = _monic(spec, f)
    d = len(f) - 1
    if d == 0:
        return []
    if d == 1:
        return [f[0]]
    # frob[j] = x^(2^j) mod f
    frob = [_poly_mod(spec, [0, 1], f)]
    for _ in range(spec.w):
        frob.append(_poly_sqr_mod(spec, frob[-1], f))
    if _trim(list(frob[-1])) != _trim(list(frob[0])):
        return None
    factors = [f]
    done = []
    for j in range(spec.w):
        if not factors:
            break
        beta = spec.alpha_pow(j)
        trace = [0] * d
        b = beta
        for i in range(spec.w):
            for idx, c in enumerate(frob[i]):
                if c:
                    trace[idx] ^= spec.mul(b, c)
            b = spec.mul(b, b)
        pending = []
        for g in factors:
            t = _poly_mod(spec, trace, g)
            g1 = _poly_gcd(spec, g, t) if t else []
            if g1 and 1 < len(g1) < len(g):
                g2, _ = _poly_divmod(spec, g, g1)
                parts = [g1, _monic(spec, g2)]
            else:
                parts = [g]
            for part in parts:
                (done if len(part) == 2 else pending).append(part)
        factors = pending
    if factors:
        return None
    return sorted(part[0] for part in done)


def decode_locators(codec: RsCodec, syn: Syndrome) -> tuple[int, ...]:
    """Locators X_p of the unique support of size <= k matching `syn`.

    Raises DecodeFailure when no such support exists.  The locators are not
    checked against the domain bound D; see decode for that.
    """
    _check_syndrome(codec, syn)
    if not syn:
        return ()
    lam = berlekamp_massey(syn)
    L = len(lam) - 1
    if L > codec.k:
        raise DecodeFailure(f"error locator degree {L} exceeds budget k={codec.k}")
    if lam[L] == 0:
        raise DecodeFailure("error locator has a root at zero")
    # reversed locator polynomial has the locators themselves as roots
    roots = find_roots(codec.spec, list(reversed(lam)))
    if roots is None or len(roots) != L:
        raise DecodeFailure("error locator does not split into distinct factors")
    if encode_locators(codec, roots) != syn:
        raise DecodeFailure("re-encoded support does not match the syndrome")
    return tuple(roots)


def decode(codec: RsCodec, syn: Syndrome) -> tuple[int, ...]:
    """Recover the support (size <= k) whose syndrome is `syn`.

    Above CHIEN_MAX_DOMAIN positions come from discrete logs, which raise
    ValueError in fields whose group order has a prime factor beyond
    gf.DLOG_MAX_PRIME (w = 49, 59, 61 and most w > 63).
    """
    _check_syndrome(codec, syn)
    if not syn:
        return ()
    if codec.D <= CHIEN_MAX_DOMAIN:
        lam = berlekamp_massey(syn)
        L = len(lam) - 1
        if L > codec.k:
            raise DecodeFailure(f"error locator degree {L} exceeds budget k={codec.k}")
        if lam[L] == 0:
            raise DecodeFailure("error locator has a root at zero")
        positions = chien_search(codec, lam)
        if len(positions) != L:
            raise DecodeFailure(f"found {len(positions)} roots for a degree-{L} locator")
    else:
        locs = decode_locators(codec, syn)
        positions = sparse_support(codec.spec.log(x) for x in locs)
        if any(p >= codec.D for p in positions):
            raise DecodeFailure("a recovered locator lies outside the position domain")
    if encode_support(codec, positions) != syn:
        raise DecodeFailure("re-encoded support does not match the syndrome")
    return positions


def _check_syndrome(codec: RsCodec, syn: Syndrome) -> None:
    if syn.spec != codec.spec or len(syn) != codec.n_syndromes:
        raise ValueError("syndrome does not belong to this codec")
