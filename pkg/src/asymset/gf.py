"""Arithmetic in binary extension fields GF(2^w).

Elements are w-bit integers; bit j is the coefficient of x^j in the
polynomial basis.  Every degree has one canonical modulus, the numerically
smallest primitive polynomial, so that x (the element with value 2) generates
the multiplicative group.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._field_table import ORDER_FACTORS, PRIMITIVE_MODULI

MIN_DEGREE = 2
MAX_DEGREE = 127
TABLE_MAX_DEGREE = 16
# largest prime subgroup order the baby-step giant-step log will attempt
DLOG_MAX_PRIME = 1 << 36


@dataclass(frozen=True)
class FieldSpec:
    w: int
    modulus: int

    @property
    def order(self) -> int:
        """Size of the multiplicative group, 2^w - 1."""
        return (1 << self.w) - 1

    def mul(self, a: int, b: int) -> int:
        if self.w <= TABLE_MAX_DEGREE:
            if a == 0 or b == 0:
                return 0
            exp, log = _tables(self)
            return exp[log[a] + log[b]]
        return clmul_mod(a, b, self.modulus, self.w)

    def square(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in GF(2^%d)" % self.w)
        if self.w <= TABLE_MAX_DEGREE:
            exp, log = _tables(self)
            return exp[(self.order - log[a]) % self.order]
        return _poly_inverse(a, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.w <= TABLE_MAX_DEGREE:
            exp, log = _tables(self)
            return exp[(log[a] * e) % self.order]
        e %= self.order
        if e == 0:
            return 1
        result = 1
        base = a
        while e:
            if e & 1:
                result = clmul_mod(result, base, self.modulus, self.w)
            e >>= 1
            if e:
                base = clmul_mod(base, base, self.modulus, self.w)
        return result

    def alpha_pow(self, e: int) -> int:
        """alpha^e for the canonical generator alpha = x."""
        return self.pow(2, e)

    def log(self, a: int) -> int:
        """Discrete logarithm of a to base alpha, in [0, 2^w - 1)."""
        if a == 0:
            raise ValueError("log of zero")
        if self.w <= TABLE_MAX_DEGREE:
            return _tables(self)[1][a]
        return _pohlig_hellman(self, a)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)


def clmul_mod(a: int, b: int, modulus: int, w: int) -> int:
    """Shift-and-XOR product of a and b reduced modulo `modulus` on the fly."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> w:
            a ^= modulus
    return r


@lru_cache(maxsize=None)
def _tables(spec: FieldSpec) -> tuple[list[int], list[int]]:
    n = spec.order
    exp = [0] * (2 * n)
    log = [0] * (n + 1)
    x = 1
    for i in range(n):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x >> spec.w:
            x ^= spec.modulus
    exp[n:] = exp[:n]
    return exp, log


def _poly_inverse(a: int, modulus: int) -> int:
    # extended Euclid in GF(2)[x]
    u, v = a, modulus
    g1, g2 = 1, 0
    while u != 1:
        j = u.bit_length() - v.bit_length()
        if j < 0:
            u, v, g1, g2 = v, u, g2, g1
            j = -j
        u ^= v << j
        g1 ^= g2 << j
    return g1


def _pohlig_hellman(spec: FieldSpec, a: int) -> int:
    n = spec.order
    x, mod = 0, 1
    for q in ORDER_FACTORS[spec.w]:
        if q > DLOG_MAX_PRIME:
            raise ValueError(
                f"discrete log in GF(2^{spec.w}) needs a search over a prime "
                f"subgroup of order {q}, which is too large")
        e = 0
        while n % q ** (e + 1) == 0:
            e += 1
        qe = q ** e
        # digits of log mod q^e, one base-q digit at a time
        gamma = spec.pow(2, n // q)
        r = 0
        for k in range(e):
            h = spec.mul(spec.inv(spec.pow(2, r)), a)
            h = spec.pow(h, n // q ** (k + 1))
            r += _bsgs(spec, gamma, h, q) * q ** k
        t = ((r - x) * pow(mod, -1, qe)) % qe
        x += mod * t
        mod *= qe
    return x % n


def _bsgs(spec: FieldSpec, g: int, h: int, q: int) -> int:
    if h == 1:
        return 0
    m = math.isqrt(q) + 1
    baby = {}
    e = 1
    for j in range(m):
        baby.setdefault(e, j)
        e = spec.mul(e, g)
    giant = spec.inv(spec.pow(g, m))
    y = h
    for i in range(m):
        j = baby.get(y)
        if j is not None:
            return (i * m + j) % q
        y = spec.mul(y, giant)
    raise ValueError("element is not in the subgroup")


def canonical_spec(w: int) -> FieldSpec:
    """The field of degree w with the smallest primitive modulus."""
    if not isinstance(w, int) or not MIN_DEGREE <= w <= MAX_DEGREE:
        raise ValueError(f"field degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {w!r}")
    return _canonical(w)


@lru_cache(maxsize=None)
def _canonical(w: int) -> FieldSpec:
    return FieldSpec(w, PRIMITIVE_MODULI[w])


@dataclass(frozen=True)
class FieldElement:
    value: int
    spec: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < (1 << self.spec.w):
            raise ValueError(f"{self.value} is not a {self.spec.w}-bit value")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError("operands live in different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.value ^ other.value, self.spec)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.spec.mul(self.value, other.value), self.spec)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElement(self.spec.pow(self.value, e), self.spec)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec.inv(self.value), self.spec)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF(2^{self.spec.w})({self.value})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    if not a:
        raise ZeroDivisionError("zero has no inverse")
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    """a**e for e >= 0, with power(0, 0) == 1."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return a ** e


# Vectorized helpers over uint64 arrays; valid only for w <= 63.

def mul_array(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if spec.w > 63:
        raise ValueError("vectorized arithmetic needs w <= 63")
    a, b = np.broadcast_arrays(np.asarray(a, dtype=np.uint64),
                               np.asarray(b, dtype=np.uint64))
    a, b = a.copy(), b.copy()
    r = np.zeros_like(a)
    top = np.uint64(1 << spec.w)
    mod = np.uint64(spec.modulus & ((1 << 64) - 1))
    one = np.uint64(1)
    zero = np.uint64(0)
    for _ in range(spec.w):
        r ^= np.where(b & one, a, zero)
        b >>= one
        a <<= one
        a ^= np.where(a & top, mod, zero)
    return r


@lru_cache(maxsize=None)
def _window_tables(spec: FieldSpec) -> tuple[np.ndarray, ...]:
    # row i holds alpha^(j * 256^i) for j = 0..255
    rows = []
    for i in range(-(-spec.w // 8)):
        base = spec.alpha_pow(1 << (8 * i))
        row, acc = [], 1
        for _ in range(256):
            row.append(acc)
            acc = spec.mul(acc, base)
        rows.append(np.array(row, dtype=np.uint64))
    return tuple(rows)


def alpha_pow_array(spec: FieldSpec, exps: np.ndarray) -> np.ndarray:
    """alpha^e elementwise for an array of exponents in [0, 2^w - 1)."""
    if spec.w > 63:
        raise ValueError("vectorized arithmetic needs w <= 63")
    exps = np.asarray(exps, dtype=np.uint64) % np.uint64(spec.order)
    if spec.w <= TABLE_MAX_DEGREE:
        exp = np.array(_tables(spec)[0], dtype=np.uint64)
        return exp[exps.astype(np.int64)]
    result = None
    for i, row in enumerate(_window_tables(spec)):
        digit = ((exps >> np.uint64(8 * i)) & np.uint64(0xFF)).astype(np.int64)
        term = row[digit]
        result = term if result is None else mul_array(spec, result, term)
    return result
