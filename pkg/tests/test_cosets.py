import random
from math import gcd

import pytest

from gdsum.cosets import (
    gamma0_coset_count,
    schreier_alphabet,
    sl2_coset_count,
    transversal_g1_in_g0,
    transversal_g1_in_sl2,
    u_func,
)
from gdsum.modgroup import I2, Mat2, S, T, random_sl2

LEVELS = (6, 9, 12, 28, 35)


def test_gamma0_transversal_known_members():
    t = transversal_g1_in_g0(9)
    assert t.members[1] == I2
    assert t.members[2] == Mat2(5, 1, 9, 2)
    assert t.members[4] == Mat2(7, 3, 9, 4)
    assert t.members[5] == Mat2(2, 1, 9, 5)
    assert t.members[7] == Mat2(4, 3, 9, 7)
    assert t.members[8] == Mat2(8, 7, 9, 8)
    assert len(t) == 6


def test_gamma0_transversal_structure():
    for N in LEVELS:
        t = transversal_g1_in_g0(N)
        assert len(t) == gamma0_coset_count(N)
        for d, m in t.members.items():
            assert m.d % N == d and m.c % N == 0
            assert t.key_of(m) == d


def test_sl2_coset_count_formula_matches_enumeration():
    for N in LEVELS:
        brute = sum(
            1
            for c in range(N)
            for d in range(N)
            if gcd(gcd(c, d), N) == 1
        )
        assert sl2_coset_count(N) == brute


def test_sl2_transversal_structure():
    expected = {6: 24, 9: 72, 12: 96, 28: 576, 35: 1152}
    for N in LEVELS:
        t = transversal_g1_in_sl2(N)
        assert len(t) == sl2_coset_count(N) == expected[N]
        assert t.members[(0, 1 % N)] == I2
        for key, m in t.members.items():
            assert (m.c % N, m.d % N) == key
            assert t.key_of(m) == key


def test_bar_basics():
    t = transversal_g1_in_sl2(9)
    g1 = Mat2(-152, 137, -81, 73)  # in Gamma1(9)
    assert t.bar(g1) == I2
    assert t.bar(Mat2(1, -1, 1, 0)) == t.members[(1, 0)]
    # members are their own representatives
    for m in t:
        assert t.bar(m) == m


def test_bar_t_power_cycle():
    t = transversal_g1_in_sl2(9)
    rng = random.Random(0)
    for _ in range(100):
        m = random_sl2(rng, 20)
        assert t.bar(m.mul_t_power(9)) == t.bar(m)


def test_nested_coset_law():
    t = transversal_g1_in_sl2(9)
    rng = random.Random(1)
    for _ in range(200):
        x, y = random_sl2(rng, 15), random_sl2(rng, 15)
        assert t.bar(x * y) == t.bar(t.bar(x) * y)


def test_u_func_properties():
    N = 9
    t = transversal_g1_in_sl2(N)
    rng = random.Random(2)
    # U(identity, h) = h for h in Gamma1
    h = Mat2(-152, 137, -81, 73)
    assert u_func(I2, h, t) == h
    # U(member, identity) = identity
    for m in list(t)[:10]:
        assert u_func(m, I2, t) == I2
    # U always lands in Gamma1; in particular U(bar(M), T^9)
    for _ in range(50):
        m = random_sl2(rng, 15)
        assert u_func(t.bar(m), Mat2.t_power(9), t).in_gamma1(9)
    for _ in range(200):
        x, y = random_sl2(rng, 12), random_sl2(rng, 12)
        assert u_func(x, y, t).in_gamma1(9)


def _pow(m, k):
    out = I2
    base = m if k >= 0 else m.inv()
    for _ in range(abs(k)):
        out = out * base
    return out


def test_power_product_identities():
    N = 9
    t = transversal_g1_in_sl2(N)
    rng = random.Random(3)
    for _ in range(200):
        a = random_sl2(rng, 10)
        b = rng.choice((S, T))
        k = rng.randint(1, 12)
        lhs = u_func(t.bar(a), _pow(b, k), t)
        rhs, cur = I2, a
        for _ in range(k):
            rhs = rhs * u_func(t.bar(cur), b, t)
            cur = cur * b
        assert lhs == rhs
        lhs = u_func(t.bar(a), _pow(b, -k), t)
        rhs, cur = I2, a
        for _ in range(k):
            cur = cur * b.inv()
            rhs = rhs * u_func(t.bar(cur), b, t).inv()
        assert lhs == rhs


def test_t_cycle_reduction_law():
    N = 9
    t = transversal_g1_in_sl2(N)
    rng = random.Random(4)
    for _ in range(200):
        m = random_sl2(rng, 12)
        a = rng.randint(-60, 60)
        q, r = a // N, a % N
        lhs = u_func(t.bar(m), Mat2.t_power(a), t)
        un = u_func(t.bar(m), Mat2.t_power(N), t)
        rhs = _pow(un, q) * u_func(t.bar(m), Mat2.t_power(r), t)
        assert lhs == rhs


def test_alphabet_structure():
    for N in (6, 9):
        t = transversal_g1_in_sl2(N)
        alpha = schreier_alphabet(N, t)
        assert len(alpha) == (N + 3) * len(t)
        assert alpha[((0, 1 % N), ("S", 0))] == I2
        for (key, gen), u in alpha.items():
            assert u.in_gamma1(N)
        # identity-based T entries are the plain shears
        for i in range(1, N + 1):
            assert alpha[((0, 1 % N), ("T", i))] == Mat2.t_power(i)


def test_alphabet_deterministic():
    t1 = transversal_g1_in_sl2(9)
    t2 = transversal_g1_in_sl2(9)
    a1 = schreier_alphabet(9, t1)
    a2 = schreier_alphabet(9, t2)
    assert a1 == a2


def test_alt_lift_is_valid_transversal():
    for N in (9, 12):
        t = transversal_g1_in_sl2(N, lift="least_pos")
        assert len(t) == sl2_coset_count(N)
        assert t.members[(0, 1 % N)] == I2
        for key, m in t.members.items():
            assert (m.c % N, m.d % N) == key
    with pytest.raises(ValueError):
        transversal_g1_in_sl2(9, lift="bogus")


def test_bar_requires_gamma0_membership():
    t = transversal_g1_in_g0(9)
    with pytest.raises(ValueError):
        t.bar(Mat2(1, 0, 1, 1))
