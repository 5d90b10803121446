from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from asymset import prior as P


def test_prior_validation():
    with pytest.raises(ValueError):
        P.Prior([0.5, 0.4])
    with pytest.raises(ValueError):
        P.Prior([1.5, -0.5])
    with pytest.raises(ValueError):
        P.Prior([0.6, 0.2, 0.1, 0.1], in_M=True)
    mu = P.Prior([0.25] * 4, in_M=True)
    assert mu.N == 4 and mu[2] == 0.25


def test_level_count():
    assert P.level_count(16) == 3
    assert P.level_count(1024) == 4
    assert P.level_count(1 << 12) == 4
    assert P.level_count(1 << 14) == 4
    assert P.level_count((1 << 14) + 1) == 5
    for N in range(1, 5000):
        # float oracle away from exact powers
        assert P.level_count(N) == max(1, int(np.ceil(np.log2(np.log2(4 * N)) - 1e-12)))


def test_normalize_examples():
    assert np.allclose(P.normalize_to_M(P.uniform(8)).probs, 1 / 8)
    want = [Fraction(8, 17)] + [Fraction(3, 17)] * 3
    for raw in ([0.7, 0.1, 0.1, 0.1], [1, 0, 0, 0]):
        got = P.normalize_to_M(P.Prior(raw)).probs
        assert np.allclose(got, [float(f) for f in want], atol=1e-12)
    with pytest.raises(ValueError):
        P.normalize_to_M(P.uniform(3))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(0, 1), min_size=4, max_size=300).filter(lambda v: sum(v) > 0))
def test_normalize_lands_in_M(raw):
    raw = np.array(raw) / sum(raw)
    mu = P.normalize_to_M(P.Prior(raw))
    N = len(raw)
    assert mu.in_M
    assert mu.probs.min() >= 1 / (4 * N) and mu.probs.max() < 0.5
    # unclamped items lose at most a factor 2 in code length
    keep = (raw > 0) & (raw <= 1 / 3)
    assert np.all(-np.log2(mu.probs[keep]) <= 2 * -np.log2(raw[keep]) + 1e-9)


def test_buckets():
    mu = P.Prior([0.25] * 4, in_M=True)
    assert P.bucket_of(mu, 1) == 1
    mu = P.Prior([0.2] * 5, in_M=True)
    assert P.bucket_of(mu, 3) == 2
    N = 1 << 12
    probs = np.full(N, (1 - 2.0 ** -10) / (N - 1))
    probs[0] = 2.0 ** -10
    mu = P.Prior(probs, in_M=True)
    assert P.bucket_of(mu, 1) == 4
    b = P.buckets(mu)
    assert b[0] == 4 and all(b[i - 1] == P.bucket_of(mu, i) for i in range(1, 50))
    with pytest.raises(ValueError):
        P.bucket_of(P.uniform(8), 1)


def test_huffman_weight_and_entropy():
    u8 = P.Prior([1 / 8] * 8, in_M=True)
    assert P.huffman_weight(u8, [1, 2, 3]) == pytest.approx(9.0)
    assert P.huffman_weight(u8, []) == 0.0
    dy = P.Prior([0.5, 0.25, 0.125, 0.125])
    assert P.huffman_weight(dy, {1, 3}) == pytest.approx(4.0)
    assert P.satisfies_huffman(dy, {1, 3}, 4)
    assert not P.satisfies_huffman(dy, {1, 3}, 3)
    assert P.entropy(P.uniform(16)) == pytest.approx(4.0)
    assert P.entropy(P.Prior([0, 0, 1])) == 0.0
    assert P.entropy(P.Prior([0.5, 0.25, 0.25])) == pytest.approx(1.5)
    with pytest.raises(ValueError):
        P.huffman_weight(u8, [9])


def test_sample_set():
    point = P.Prior([0.0] * 6 + [1.0] + [0.0] * 3)
    assert P.sample_set(point, 5, 0) == (7,)
    assert P.sample_set(P.uniform(2), 1, 4) == P.sample_set(P.uniform(2), 1, 4)
    u = P.uniform(1000)
    assert P.sample_set(u, 10, 9) == P.sample_set(u, 10, 9)
    assert len(P.sample_set(u, 10, 9)) <= 10
    with pytest.raises(ValueError):
        P.sample_set(u, 0, 1)


def test_sampling_frequencies():
    mu = P.Prior([0.5, 0.25, 0.125, 0.125])
    counts = np.zeros(4)
    for s in range(4000):
        for i in P.sample_set(mu, 1, s):
            counts[i - 1] += 1
    assert np.allclose(counts / 4000, mu.probs, atol=0.03)


def test_generators_and_files(tmp_path):
    assert P.load_prior("uniform:10").prior.N == 10
    z = P.load_prior("zipf:100:1.0").prior
    assert z[1] / z[2] == pytest.approx(2.0)
    d = P.load_prior("dyadic:4").prior
    assert list(d.probs) == [0.5, 0.25, 0.125, 0.125]
    f = tmp_path / "p.txt"
    f.write_text("# a prior\n0.5\n0.3\n0.2000001\n")
    lp = P.load_prior(str(f))
    assert lp.prior.N == 3 and lp.correction == pytest.approx(1e-7)
    assert lp.prior.probs.sum() == pytest.approx(1.0, abs=1e-12)
    f.write_text("0.5\n0.3\n")
    with pytest.raises(ValueError):
        P.load_prior(str(f))
    f.write_text("0.5\nabc\n")
    with pytest.raises(ValueError):
        P.load_prior(str(f))
    for bad in ("uniform:0", "zipf:10", "dyadic:x"):
        with pytest.raises(ValueError):
            P.load_prior(bad)
    with pytest.raises(OSError):
        P.load_prior(str(tmp_path / "missing.txt"))
