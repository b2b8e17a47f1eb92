import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isolev.editdist import (
    DistanceMatrix,
    DuplicateWords,
    InputTooLong,
    LengthMismatch,
    NormalizedWeights,
    Weights,
    _lev_ints_numpy,
    _lev_ints_python,
    distance_matrix,
    hamming,
    lev,
    lev_oracle,
    normalize,
)
from isolev.langlib import is_subsequence

WEIGHT_GRID = [Weights(1, 1), Weights(1, 2), Weights(2, 1), Weights(1, Fraction(3, 2))]


def binary_words(max_len):
    yield ""
    for n in range(1, max_len + 1):
        for bits in range(2**n):
            yield format(bits, f"0{n}b")


def test_base_cases():
    assert lev("", "011") == 3
    assert lev("011", "") == 3
    assert lev("", "") == 0
    assert lev("0101", "0101", Weights(Fraction(7, 3), Fraction(1, 5))) == 0


def test_known_values():
    assert lev("kitten", "sitting") == 3
    assert lev("kitten", "sitting") == lev_oracle("kitten", "sitting")
    assert lev("01", "10", Weights(1, 2)) == 2
    assert lev("01", "10", Weights(1, 2)) == lev_oracle("01", "10", Weights(1, 2))
    # substitution wins while it is cheaper than an indel pair
    assert lev("0", "1", Weights(1, Fraction(1, 2))) == Fraction(1, 2)
    assert lev("0", "1", Weights(1, 3)) == 2


def test_oracle_examples():
    assert lev_oracle("0", "1") == 1
    assert lev_oracle("", "") == 0
    assert lev_oracle("01", "10") == 2


def test_oracle_rejects_long_words():
    with pytest.raises(InputTooLong):
        lev_oracle("01234567", "0")


def test_oracle_equivalence_small_sweep():
    words = list(binary_words(3))
    for w in WEIGHT_GRID:
        for u in words:
            for v in words:
                assert lev(u, v, w) == lev_oracle(u, v, w), (u, v, w)


def test_dp_engines_agree():
    rng = random.Random(4242)
    for _ in range(200):
        u = "".join(rng.choice("012") for _ in range(rng.randint(0, 30)))
        v = "".join(rng.choice("012") for _ in range(rng.randint(1, 30)))
        g = rng.randint(1, 7)
        t = rng.randint(1, 7)
        if u:
            assert _lev_ints_python(u, v, g, t) == _lev_ints_numpy(u, v, g, t)


def test_hamming():
    assert hamming("000", "011") == 2
    assert hamming("abc", "abc") == 0
    assert hamming("110010", "010110") == 2
    with pytest.raises(LengthMismatch):
        hamming("ab", "abc")


def test_normalize_examples():
    assert normalize(Weights(3, 4)) == NormalizedWeights(Fraction(4, 3), Fraction(3))
    assert normalize(Weights(1, 5)) == NormalizedWeights(Fraction(2), Fraction(1))
    assert normalize(Weights(1, 1)) == NormalizedWeights(Fraction(1), Fraction(1))


def test_weights_must_be_positive():
    with pytest.raises(ValueError):
        Weights(0, 1)
    with pytest.raises(ValueError):
        Weights(1, -2)
    with pytest.raises(TypeError):
        Weights(1.5, 1)


def test_homothety_random_pairs():
    rng = random.Random(77)
    for _ in range(150):
        gamma = Fraction(rng.randint(1, 8), rng.randint(1, 8))
        theta = Fraction(rng.randint(1, 24), rng.randint(1, 8))
        w = Weights(gamma, theta)
        nw = normalize(w)
        assert 0 < nw.theta_prime <= 2
        u = "".join(rng.choice("01") for _ in range(rng.randint(0, 10)))
        v = "".join(rng.choice("01") for _ in range(rng.randint(0, 10)))
        assert lev(u, v, w) == nw.scale * lev(u, v, Weights(1, nw.theta_prime))


def test_metric_axioms_seeded():
    rng = random.Random(555)
    for _ in range(300):
        w = Weights(Fraction(rng.randint(1, 5)), Fraction(rng.randint(1, 10), 2))
        u = "".join(rng.choice("01") for _ in range(rng.randint(0, 12)))
        v = "".join(rng.choice("01") for _ in range(rng.randint(0, 12)))
        x = "".join(rng.choice("01") for _ in range(rng.randint(0, 12)))
        assert lev(u, u, w) == 0
        if u != v:
            assert lev(u, v, w) > 0
        assert lev(u, v, w) == lev(v, u, w)
        assert lev(u, x, w) <= lev(u, v, w) + lev(v, x, w)


def test_context_and_reversal_invariance():
    rng = random.Random(99)
    for _ in range(200):
        w = Weights(1, Fraction(rng.randint(1, 4), 2))
        x = "".join(rng.choice("01") for _ in range(rng.randint(0, 8)))
        y = "".join(rng.choice("01") for _ in range(rng.randint(0, 8)))
        p = "".join(rng.choice("01") for _ in range(rng.randint(0, 5)))
        q = "".join(rng.choice("01") for _ in range(rng.randint(0, 5)))
        assert lev(p + x + q, p + y + q, w) == lev(x, y, w)
        assert lev(x[::-1], y[::-1], w) == lev(x, y, w)


def test_bounds_and_subsequence_characterisation():
    rng = random.Random(31)
    for _ in range(400):
        gamma = Fraction(rng.randint(1, 4))
        theta = gamma * Fraction(rng.randint(1, 8), 4)
        w = Weights(gamma, theta)
        u = "".join(rng.choice("01") for _ in range(rng.randint(0, 10)))
        v = "".join(rng.choice("01") for _ in range(rng.randint(0, 10)))
        d = lev(u, v, w)
        lo, hi = sorted((len(u), len(v)))
        assert d <= (theta - gamma) * lo + gamma * hi
        assert d >= gamma * (hi - lo)
        shorter, longer = (u, v) if len(u) <= len(v) else (v, u)
        assert (d == gamma * (hi - lo)) == is_subsequence(shorter, longer)


@settings(max_examples=300, deadline=None)
@given(
    st.text(alphabet="01", max_size=8),
    st.text(alphabet="01", max_size=8),
    st.text(alphabet="01", max_size=8),
)
def test_triangle_inequality_property(u, v, x):
    w = Weights(1, Fraction(3, 2))
    assert lev(u, x, w) <= lev(u, v, w) + lev(v, x, w)


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="ab", max_size=7), st.text(alphabet="ab", max_size=7))
def test_dp_matches_oracle_property(u, v):
    w = Weights(2, 3)
    assert lev(u, v, w) == lev_oracle(u, v, w)


def test_distance_matrix_single_word():
    m = distance_matrix([""])
    assert m.n == 1
    assert m.entries == ((Fraction(0),),)


def test_distance_matrix_runs_at_theta_two():
    words = ["", "0", "00", "000", "1", "11"]
    m = distance_matrix(words, Weights(1, 2))
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            if u[:1] != v[:1] and u and v:
                assert m.entry(i, j) == len(u) + len(v)
    assert m.entry(3, 5) == 5  # 000 vs 11


def test_distance_matrix_rejects_duplicates():
    with pytest.raises(DuplicateWords):
        distance_matrix(["a", "a"])


def test_matrix_validate_catches_bad_tables():
    good = distance_matrix(["", "0", "01"])
    good.validate()
    broken = DistanceMatrix(good.words, ((Fraction(0), Fraction(1), Fraction(2)),
                                         (Fraction(1), Fraction(0), Fraction(1)),
                                         (Fraction(2), Fraction(2), Fraction(0))))
    with pytest.raises(ValueError):
        broken.validate()
    lopsided = DistanceMatrix(good.words, ((Fraction(0), Fraction(9), Fraction(1)),
                                           (Fraction(9), Fraction(0), Fraction(1)),
                                           (Fraction(1), Fraction(1), Fraction(0))))
    with pytest.raises(ValueError):
        lopsided.validate()
