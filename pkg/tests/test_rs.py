import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from asymset import gf, rs


def codec(w, D, k):
    return rs.RsCodec(gf.canonical_spec(w), D, k)


def test_locator_examples():
    c = codec(3, 7, 1)
    assert int(rs.locator(c, 0)) == 1
    assert int(rs.locator(c, 3)) == 3
    with pytest.raises(ValueError):
        rs.locator(c, 7)


def test_encode_position_examples():
    assert rs.encode_position(codec(3, 7, 1), 3).values == (3, 5)
    assert rs.encode_position(codec(3, 7, 1), 0).values == (1, 1)
    assert rs.encode_position(codec(4, 15, 2), 1).values == (2, 4, 8, 3)


def test_encode_support_examples():
    c = codec(3, 7, 2)
    assert not rs.encode_support(c, [])
    assert rs.encode_support(codec(3, 7, 1), [3]).values == (3, 5)
    # alpha^(j) for p=0 is 1; for p=3 the powers are 3, 5, 4, 7 under x^3+x+1
    assert rs.encode_support(c, [0, 3]).values == (1 ^ 3, 1 ^ 5, 1 ^ 4, 1 ^ 7)
    assert rs.encode_support(c, [0, 3]) ^ rs.encode_support(c, [3]) == rs.encode_support(c, [0])


def test_xor_laws():
    c = codec(4, 15, 2)
    y = rs.encode_support(c, [2, 9])
    assert rs.xor_syndromes(y, rs.Syndrome.zero(c)) == y
    assert not rs.xor_syndromes(y, y)


def test_berlekamp_massey_examples():
    assert rs.berlekamp_massey(rs.Syndrome.zero(codec(3, 7, 1))) == [1]
    assert rs.berlekamp_massey(rs.encode_support(codec(3, 7, 1), [3])) == [1, 3]
    c = codec(4, 15, 2)
    lam = rs.berlekamp_massey(rs.encode_support(c, [2, 9]))
    assert len(lam) == 3
    roots = {x for x in range(1, 16) if rs.poly_eval(c.spec, lam, x) == 0}
    assert roots == {c.spec.inv(c.spec.alpha_pow(2)), c.spec.inv(c.spec.alpha_pow(9))}


def test_chien_examples():
    c = codec(3, 7, 1)
    assert rs.chien_search(c, [1]) == ()
    assert rs.chien_search(c, [1, 3]) == (3,)


def test_decode_examples():
    c = codec(4, 15, 3)
    assert rs.decode(c, rs.Syndrome.zero(c)) == ()
    assert rs.decode(c, rs.encode_support(c, [1, 7, 12])) == (1, 7, 12)
    small = codec(3, 7, 1)
    over = rs.encode_support(codec(3, 7, 1), [0]) ^ rs.encode_support(small, [3])
    try:
        out = rs.decode(small, over)
    except rs.DecodeFailure:
        pass
    else:
        assert rs.encode_support(small, out) == over and len(out) <= 1


def test_syndrome_serialization():
    c = codec(4, 15, 2)
    y = rs.encode_position(c, 1)
    assert y.to_int() == 0x2483
    assert rs.Syndrome.from_int(c.spec, 4, y.to_int()) == y
    assert c.bits == 16


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_exhaustive_small(k):
    c = codec(4, 15, k)
    for r in range(k + 1):
        for S in itertools.combinations(range(15), r):
            assert rs.decode(c, rs.encode_support(c, S)) == S


def test_over_budget_never_wrong():
    c = codec(4, 15, 2)
    for S in itertools.combinations(range(15), 3):
        y = rs.encode_support(c, S)
        try:
            out = rs.decode(c, y)
        except rs.DecodeFailure:
            continue
        assert rs.encode_support(c, out) == y


# 2^w - 1 has a prime factor above the discrete-log search cap
NO_DLOG = {49, 59, 61}


@settings(max_examples=60, deadline=None)
@given(st.integers(20, 63).filter(lambda w: w not in NO_DLOG), st.integers(1, 6), st.data())
def test_large_field_roundtrip(w, k, data):
    # exercises the algebraic root finder and the discrete log
    D = (1 << w) - 1
    c = rs.RsCodec(gf.canonical_spec(w), D, k)
    S = sorted(set(data.draw(st.lists(st.integers(0, D - 1), min_size=0, max_size=k))))
    y = rs.encode_support(c, S)
    assert rs.decode(c, y) == tuple(S)
    assert sorted(rs.decode_locators(c, y)) == sorted(c.spec.alpha_pow(p) for p in S)


@pytest.mark.parametrize("w", sorted(NO_DLOG))
def test_dlog_limit(w):
    c = rs.RsCodec(gf.canonical_spec(w), (1 << w) - 1, 2)
    y = rs.encode_support(c, [5, 99])
    assert sorted(rs.decode_locators(c, y)) == sorted(c.spec.alpha_pow(p) for p in (5, 99))
    with pytest.raises(ValueError, match="too large"):
        rs.decode(c, y)


def test_w69_locators():
    c = rs.RsCodec(gf.canonical_spec(69), 1 << 68, 2)
    locs = [c.spec.alpha_pow(p) for p in (5, 1 << 60)]
    assert sorted(rs.decode_locators(c, rs.encode_locators(c, locs))) == sorted(locs)


def test_random_noise_rejected_or_verified():
    c = codec(16, 60000, 3)
    rng = np.random.default_rng(3)
    for _ in range(40):
        y = rs.Syndrome(c.spec, tuple(int(v) for v in rng.integers(0, 1 << 16, 6)))
        try:
            out = rs.decode(c, y)
        except rs.DecodeFailure:
            continue
        assert rs.encode_support(c, out) == y


def test_codec_validation():
    with pytest.raises(ValueError):
        codec(3, 8, 1)
    with pytest.raises(ValueError):
        codec(3, 7, 0)
    with pytest.raises(ValueError):
        rs.decode(codec(3, 7, 1), rs.Syndrome.zero(codec(4, 15, 1)))
    assert rs.RsCodec.for_domain(15, 2).spec.w == 4
