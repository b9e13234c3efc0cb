import random
from fractions import Fraction

import pytest

from gdsum.dedekind import (
    ParityWarning,
    common_order,
    crossed_hom_check,
    fast_sum,
    naive_sum,
    precompute,
    split_gamma0,
    sum_on_gamma0,
)
from gdsum.exactnum import CycElem
from gdsum.modgroup import I2, Mat2, random_gamma0


def test_naive_sum_kernel_matrix(chi3):
    assert naive_sum(chi3, chi3, Mat2(17, 32, 9, 17)) == CycElem.zero(2)


def test_naive_sum_regression_constants(chi3):
    # pinned from the oracle itself on first build
    assert naive_sum(chi3, chi3, Mat2(8, 7, 9, 8)) == CycElem.zero(2)
    assert naive_sum(chi3, chi3, Mat2(5, 1, 9, 2)) == CycElem.from_rational(
        2, Fraction(-2, 3)
    )
    assert naive_sum(chi3, chi3, Mat2(7, 3, 9, 4)) == CycElem.from_rational(
        2, Fraction(2, 3)
    )


def test_naive_sum_regression_complex_pair(chi4, chi7_56):
    # order-6 values pinned from the oracle on first build
    assert naive_sum(chi4, chi7_56, Mat2(1, 0, 28, 1)) == CycElem.zero(6)
    assert naive_sum(chi4, chi7_56, Mat2(3, 2, 28, 19)) == CycElem(
        6, [Fraction(0), Fraction(1)]
    )
    assert naive_sum(chi4, chi7_56, Mat2(5, 4, 56, 45)) == CycElem(
        6, [Fraction(-1), Fraction(1)]
    )


def test_naive_sum_rejects_nonpositive_c(chi3):
    with pytest.raises(ValueError):
        naive_sum(chi3, chi3, I2)
    with pytest.raises(ValueError):
        naive_sum(chi3, chi3, Mat2(1, 0, -9, 1))


def test_naive_sum_rejects_non_members(chi3):
    with pytest.raises(ValueError):
        naive_sum(chi3, chi3, Mat2(1, 0, 5, 1))


def test_homomorphism_on_gamma1(chi3):
    # random Gamma1(9) elements built as short generator products; only
    # triples where all three lower-left entries are oracle-valid count
    rng = random.Random(0)
    gens = [Mat2(1, 1, 0, 1), Mat2(1, -1, 0, 1), Mat2(1, 0, 9, 1), Mat2(1, 0, -9, 1)]

    def rand_gamma1():
        m = I2
        for _ in range(rng.randint(1, 6)):
            m = m * rng.choice(gens)
        return m

    done = 0
    while done < 20:
        h1, h2 = rand_gamma1(), rand_gamma1()
        if h1.c < 1 or h2.c < 1 or (h1 * h2).c < 1:
            continue
        done += 1
        assert h1.in_gamma1(9) and h2.in_gamma1(9)
        assert naive_sum(chi3, chi3, h1 * h2) == naive_sum(chi3, chi3, h1) + naive_sum(
            chi3, chi3, h2
        )


def test_crossed_homomorphism_random_pairs(chi3, chi4, chi7_56):
    for chi_a, chi_b, N in ((chi3, chi3, 9), (chi4, chi7_56, 28)):
        rng = random.Random(1)
        done = 0
        while done < 20:
            ga = random_gamma0(N, rng, kmax=8)
            gb = random_gamma0(N, rng, kmax=8)
            if (ga * gb).c < 1:
                continue
            done += 1
            assert crossed_hom_check(chi_a, chi_b, ga, gb)


def test_crossed_hom_gamma1_left_factor(chi3):
    # psi factor is 1 when the left factor is in Gamma1
    ga = Mat2(10, 1, 9, 1)
    rng = random.Random(2)
    for _ in range(10):
        gb = random_gamma0(9, rng, kmax=10)
        if (ga * gb).c < 1:
            continue
        assert naive_sum(chi3, chi3, ga * gb) == naive_sum(chi3, chi3, ga) + naive_sum(
            chi3, chi3, gb
        )


def test_sum_on_gamma0_closure(chi3):
    # negative lower-left entries agree with the inverse relation and with
    # direct crossed-homomorphism bookkeeping
    rng = random.Random(3)
    for _ in range(10):
        g = random_gamma0(9, rng, kmax=15)
        neg = -g  # c < 0
        v = sum_on_gamma0(chi3, chi3, neg)
        # S(-g) = S(-I) + psi(-I) S(g) = S(g) for this even pair
        assert v == naive_sum(chi3, chi3, g)
    # shears: S(T^b) through the oracle-valid partner
    h = Mat2(1, 0, 9, 1)
    for b in (-7, -1, 1, 2, 9, 30):
        direct = sum_on_gamma0(chi3, chi3, Mat2.t_power(b))
        partner = naive_sum(chi3, chi3, h.mul_t_power(b)) - naive_sum(chi3, chi3, h)
        assert direct == partner
    assert sum_on_gamma0(chi3, chi3, I2) == CycElem.zero(2)
    assert sum_on_gamma0(chi3, chi3, -I2) == CycElem.zero(2)


def test_precompute_structure(ctx9):
    assert len(ctx9.t_g0) == 6
    assert len(ctx9.t_sl2) == 72
    assert len(ctx9.alphabet) == (9 + 3) * 72
    assert len(ctx9.sums_alphabet) == len(ctx9.alphabet)
    assert ctx9.sums_g0[1] == CycElem.zero(2)
    assert ctx9.sums_alphabet[((0, 1), ("S", 0))] == CycElem.zero(2)
    assert ctx9.L == 2 and ctx9.parity_ok
    for u in ctx9.alphabet.values():
        assert u.in_gamma1(9)


def test_precompute_rejects_bad_characters(chi3):
    from gdsum.characters import characters_mod

    trivial = [c for c in characters_mod(3) if c.is_trivial()][0]
    with pytest.raises(ValueError):
        precompute(trivial, chi3)
    induced = [c for c in characters_mod(6) if not c.is_trivial()][0]
    with pytest.raises(ValueError):
        precompute(induced, chi3)


def test_precompute_guardrail(chi3):
    from gdsum.characters import find_character

    chi61 = find_character(61, [(2, "1/60")])
    with pytest.raises(ValueError):
        precompute(chi3, chi61)


def test_parity_warning(chi5, chi7_13):
    with pytest.warns(ParityWarning):
        precompute(chi5, chi7_13)


def test_table_consistency_spot_checks(ctx9, chi3):
    rng = random.Random(4)
    checkable = [k for k, m in ctx9.alphabet.items() if m.c >= 1]
    for key in rng.sample(checkable, 20):
        assert ctx9.sums_alphabet[key] == naive_sum(chi3, chi3, ctx9.alphabet[key])


def test_table_consistency_complex_pair(ctx28, chi4, chi7_56):
    rng = random.Random(5)
    checkable = [k for k, m in ctx28.alphabet.items() if m.c >= 1]
    for key in rng.sample(checkable, 20):
        assert ctx28.sums_alphabet[key] == naive_sum(chi4, chi7_56, ctx28.alphabet[key])


def test_derive_powers_matches_direct(chi3):
    direct = precompute(chi3, chi3, derive_powers=False)
    derived = precompute(chi3, chi3)
    assert direct.sums_alphabet == derived.sums_alphabet
    assert direct.sums_g0 == derived.sums_g0


def test_fast_sum_kernel_matrix(ctx9):
    assert fast_sum(ctx9, Mat2(17, 32, 9, 17)) == CycElem.zero(2)


def test_fast_sum_transversal_members(ctx9):
    for d, g in ctx9.t_g0.members.items():
        assert fast_sum(ctx9, g) == ctx9.sums_g0[d]


def test_fast_sum_handles_nonpositive_c(ctx9, chi3):
    rng = random.Random(6)
    for _ in range(10):
        g = random_gamma0(9, rng, kmax=10)
        # S(-gamma) computed by the fast path must satisfy the closure value
        assert fast_sum(ctx9, -g) == sum_on_gamma0(chi3, chi3, -g)
    assert fast_sum(ctx9, Mat2.t_power(5)) == sum_on_gamma0(chi3, chi3, Mat2.t_power(5))
    assert fast_sum(ctx9, I2) == CycElem.zero(2)


def test_fast_sum_rejects_non_members(ctx9):
    with pytest.raises(ValueError):
        fast_sum(ctx9, Mat2(1, 0, 5, 1))


def test_oracle_equivalence_sample(ctx9, chi3):
    rng = random.Random(7)
    for _ in range(30):
        g = random_gamma0(9, rng, kmax=200, d_shift=1)
        assert fast_sum(ctx9, g) == naive_sum(chi3, chi3, g)


def test_oracle_equivalence_complex_pair(ctx28, chi4, chi7_56):
    rng = random.Random(8)
    for _ in range(25):
        g = random_gamma0(28, rng, kmax=100, d_shift=1)
        assert fast_sum(ctx28, g) == naive_sum(chi4, chi7_56, g)


def test_transversal_independence(chi3, ctx9):
    alt = precompute(chi3, chi3, sl2_lift="least_pos")
    # the tables genuinely differ...
    assert any(
        alt.t_sl2.members[k] != ctx9.t_sl2.members[k] for k in alt.t_sl2.members
    )
    # ...but the sums do not
    rng = random.Random(9)
    for _ in range(25):
        g = random_gamma0(9, rng, kmax=300, d_shift=1)
        assert fast_sum(alt, g) == fast_sum(ctx9, g)


def test_split_gamma0(ctx9):
    rng = random.Random(10)
    for _ in range(20):
        gamma = random_gamma0(9, rng, kmax=50)
        g1, g, d_key = split_gamma0(ctx9, gamma)
        assert g1.in_gamma1(9)
        assert g == ctx9.t_g0.members[d_key]
        assert g1 * g == gamma


def test_common_order(chi3, chi4, chi5, chi7_56, chi7_13):
    assert common_order(chi3, chi3) == 2
    assert common_order(chi4, chi7_56) == 6
    assert common_order(chi5, chi7_13) == 12
    assert common_order(chi5, chi7_56) == 12
