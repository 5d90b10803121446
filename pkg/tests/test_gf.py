import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy import GF, Poly, factorint, symbols
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from asymset import gf
from asymset._field_table import PRIMITIVE_MODULI

x = symbols("x")


def as_poly(n):
    coeffs = [int(b) for b in bin(n)[2:]]
    return Poly(coeffs, x, domain=GF(2))


def is_primitive(mod, w):
    f = [int(b) for b in bin(mod)[2:]]
    if not gf_irreducible_p(f, 2, ZZ):
        return False
    order = (1 << w) - 1
    return all(gf_pow_mod([1, 0], order // p, f, 2, ZZ) != [1] for p in factorint(order))


def sympy_mul(a, b, mod):
    r = (as_poly(a) * as_poly(b)).rem(as_poly(mod))
    return int("".join(str(int(c) % 2) for c in r.all_coeffs()), 2)


def test_canonical_small_moduli():
    assert gf.canonical_spec(3).modulus == 0b1011
    assert gf.canonical_spec(4).modulus == 0b10011
    with pytest.raises(ValueError):
        gf.canonical_spec(1)
    with pytest.raises(ValueError):
        gf.canonical_spec(gf.MAX_DEGREE + 1)


@pytest.mark.parametrize("w", range(2, 11))
def test_canonical_is_smallest_primitive(w):
    # exhaustive oracle: first primitive polynomial of degree w
    first = next(m for m in range(1 << w, 1 << (w + 1)) if is_primitive(m, w))
    assert gf.canonical_spec(w).modulus == first


@pytest.mark.parametrize("w", [16, 17, 31, 37, 63, 64, 69, 100, 127])
def test_table_moduli_are_primitive(w):
    assert is_primitive(PRIMITIVE_MODULI[w], w)


def test_scalar_examples():
    s = gf.canonical_spec(3)
    assert s.mul(3, 3) == 5
    assert s.mul(2, 4) == 3
    assert s.mul(7, 1) == 7
    assert s.inv(2) == 5
    assert s.inv(1) == 1
    with pytest.raises(ZeroDivisionError):
        s.inv(0)
    assert s.pow(2, 3) == 3
    assert s.pow(2, 7) == 1
    assert gf.canonical_spec(4).pow(9, 0) == 1


def test_element_api():
    s = gf.canonical_spec(3)
    a, b = s.element(5), s.element(0)
    assert gf.add(a, b) == a
    assert int(gf.add(a, a)) == 0
    assert int(gf.add(s.element(3), s.element(6))) == 5
    assert int(gf.mul(s.element(3), s.element(3))) == 5
    assert int(gf.inv(s.element(2))) == 5
    assert int(gf.power(s.element(2), 3)) == 3
    assert int(s.element(6) / s.element(3)) == s.mul(6, s.inv(3))
    with pytest.raises(ZeroDivisionError):
        gf.inv(s.element(0))
    with pytest.raises(ValueError):
        a + gf.canonical_spec(4).element(1)


@pytest.mark.parametrize("w", [3, 8, 16, 20, 37, 64, 127])
def test_mul_matches_sympy(w):
    s = gf.canonical_spec(w)
    rng = np.random.default_rng(w)
    for _ in range(20):
        a, b = (int(rng.integers(0, 1 << min(w, 62))) | (1 << (w - 1)) for _ in range(2))
        assert s.mul(a, b) == sympy_mul(a, b, s.modulus)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 127), st.data())
def test_field_axioms(w, data):
    s = gf.canonical_spec(w)
    a, b, c = (data.draw(st.integers(0, s.order)) for _ in range(3))
    assert s.mul(a, b) == s.mul(b, a)
    assert s.mul(a, s.mul(b, c)) == s.mul(s.mul(a, b), c)
    assert s.mul(a, b ^ c) == s.mul(a, b) ^ s.mul(a, c)
    if a:
        assert s.mul(a, s.inv(a)) == 1
    assert s.square(a) == s.mul(a, a)


@pytest.mark.parametrize("w", [2, 5, 12, 16, 20, 24, 37, 45, 63])
def test_discrete_log(w):
    s = gf.canonical_spec(w)
    rng = np.random.default_rng(w)
    for _ in range(5):
        e = int(rng.integers(0, s.order))
        assert s.log(s.alpha_pow(e)) == e
    with pytest.raises(ValueError):
        s.log(0)


@pytest.mark.parametrize("w", [3, 12, 17, 37, 63])
def test_vectorized_helpers(w):
    s = gf.canonical_spec(w)
    rng = np.random.default_rng(1)
    a = rng.integers(0, s.order + 1, 64, dtype=np.uint64)
    b = rng.integers(0, s.order + 1, 64, dtype=np.uint64)
    assert [int(v) for v in gf.mul_array(s, a, b)] == [s.mul(int(p), int(q)) for p, q in zip(a, b)]
    e = rng.integers(0, s.order, 64, dtype=np.uint64)
    assert [int(v) for v in gf.alpha_pow_array(s, e)] == [s.alpha_pow(int(q)) for q in e]


@pytest.mark.parametrize("w", [3, 4, 8, 16, 32, 63])
def test_axioms_bulk(w):
    s = gf.canonical_spec(w)
    rng = np.random.default_rng(100 + w)
    a, b, c = (rng.integers(0, s.order + 1, 10_000, dtype=np.uint64) for _ in range(3))
    mul = lambda p, q: gf.mul_array(s, p, q)
    assert np.array_equal(mul(a, b), mul(b, a))
    assert np.array_equal(mul(a, mul(b, c)), mul(mul(a, b), c))
    assert np.array_equal(mul(a, b ^ c), mul(a, b) ^ mul(a, c))
    assert np.array_equal(mul(a, np.ones_like(a)), a)
    assert np.array_equal((a ^ b) ^ b, a)
    for v in a[:200].tolist():
        if v:
            assert s.mul(v, s.inv(v)) == 1


@pytest.mark.parametrize("w", [3, 4, 8, 16, 32, 63, 100])
def test_alpha_is_primitive(w):
    s = gf.canonical_spec(w)
    order = s.order
    assert s.pow(2, order) == 1
    for p in factorint(order):
        assert s.pow(2, order // p) != 1


@pytest.mark.parametrize("w", [2, 5, 9, 16])
def test_tables_match_shift_xor(w):
    s = gf.canonical_spec(w)
    step = max(1, (1 << w) // 300)
    for a in range(0, 1 << w, step):
        for b in range(0, 1 << w, step):
            assert s.mul(a, b) == gf.clmul_mod(a, b, s.modulus, w)
