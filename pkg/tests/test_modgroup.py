import math
import random

import pytest

from gdsum.cosets import transversal_g1_in_g0
from gdsum.modgroup import (
    I2,
    WORD_LENGTH_K,
    Mat2,
    S,
    T,
    TSWord,
    random_gamma0,
    random_sl2,
    ts_decompose,
    ts_reconstruct,
)


def test_constructor_checks_determinant():
    with pytest.raises(ValueError):
        Mat2(1, 0, 0, 2)
    with pytest.raises(ValueError):
        Mat2(2, 0, 0, 2)


def test_products_and_inverse():
    assert Mat2(-152, 137, -81, 73) * Mat2(8, 7, 9, 8) == Mat2(17, 32, 9, 17)
    assert I2.inv() == I2
    assert S * S == -I2
    m = Mat2(5, 1, 9, 2)
    assert m * m.inv() == I2
    assert m.inv() * m == I2


def test_congruence_membership():
    m = Mat2(17, 32, 9, 17)
    assert m.in_gamma0(9) and not m.in_gamma1(9)
    g1 = Mat2(-152, 137, -81, 73)
    assert g1.in_gamma1(9)
    assert I2.in_gamma0(7) and I2.in_gamma1(7)
    assert not Mat2(1, 0, 1, 1).in_gamma0(5)


def test_ts_decompose_basics():
    assert ts_decompose(T) == TSWord(False, (1,))
    assert ts_decompose(I2) == TSWord(False, (0,))
    assert ts_decompose(-I2) == TSWord(True, (0,))
    assert ts_reconstruct(TSWord(False, (1,))) == T
    assert ts_reconstruct(TSWord(False, (0,))) == I2


def test_ts_word_regression():
    g1 = Mat2(-152, 137, -81, 73)
    w = ts_decompose(g1)
    assert w == TSWord(True, (1, -2, -2, -2, -2, -2, -2, -2, -11, -1))
    assert ts_reconstruct(w) == g1


def test_ts_word_validation():
    with pytest.raises(ValueError):
        TSWord(False, ())
    with pytest.raises(ValueError):
        TSWord(False, (1, 0, 2))
    # zeros at either end are allowed
    TSWord(False, (0, 5, 0))


def test_roundtrip_random_products():
    rng = random.Random(0)
    for _ in range(1000):
        m = random_sl2(rng, 30)
        assert ts_reconstruct(ts_decompose(m)) == m


def test_roundtrip_gamma0_members():
    rng = random.Random(1)
    t = transversal_g1_in_g0(9)
    # transversal member times a Gamma1-ish product
    for _ in range(200):
        m = rng.choice(list(t.members.values()))
        for _ in range(rng.randint(1, 8)):
            m = m * rng.choice((T, Mat2(1, -1, 0, 1), Mat2(1, 0, 9, 1)))
        assert ts_reconstruct(ts_decompose(m)) == m


def test_word_length_logarithmic():
    rng = random.Random(2)
    for _ in range(300):
        m = random_gamma0(9, rng, kmax=10**10, d_shift=1)
        w = ts_decompose(m)
        bound = WORD_LENGTH_K * math.log(abs(m.c) + 2) + WORD_LENGTH_K
        assert w.letters <= bound
    for _ in range(300):
        m = random_sl2(rng, 40)
        w = ts_decompose(m)
        assert w.letters <= WORD_LENGTH_K * math.log(abs(m.c) + 2) + WORD_LENGTH_K


def test_word_length_adversarial_ratios():
    # near-ratio-1 columns make floor quotients descend arithmetically;
    # the decomposition must still come out short and exact
    for c in (10**6, 10**9, 10**12 + 39):
        a = c - 1
        d = pow(a, -1, c)
        m = Mat2(a, (a * d - 1) // c, c, d)
        w = ts_decompose(m)
        assert ts_reconstruct(w) == m
        assert w.letters <= WORD_LENGTH_K * math.log(c + 2) + WORD_LENGTH_K


def test_determinant_preserved():
    rng = random.Random(3)
    for _ in range(100):
        m, n = random_sl2(rng, 15), random_sl2(rng, 15)
        p = m * n
        assert p.a * p.d - p.b * p.c == 1
        q = p.inv()
        assert q.a * q.d - q.b * q.c == 1


def test_decompose_deterministic():
    rng = random.Random(4)
    for _ in range(50):
        m = random_sl2(rng, 25)
        assert ts_decompose(m) == ts_decompose(m)


def test_parse():
    assert Mat2.parse("17,32;9,17") == Mat2(17, 32, 9, 17)
    assert Mat2.parse(" -152 , 137 ; -81 , 73 ") == Mat2(-152, 137, -81, 73)
    big = Mat2.parse("46741638,43234369;43234205,39990117")
    assert big.c == 43234205
    with pytest.raises(ValueError):
        Mat2.parse("1,2,3;4,5")
    with pytest.raises(ValueError):
        Mat2.parse("1,0;0")
    with pytest.raises(ValueError):
        Mat2.parse("2,0;0,2")


def test_immutability_and_hash():
    m = Mat2(1, 1, 0, 1)
    with pytest.raises(AttributeError):
        m.a = 5
    assert len({Mat2(1, 1, 0, 1), T, S}) == 2
