import math
import random

import pytest

from permclass.factored import (
    ClassSizeSet,
    FactoredNatural,
    factored,
    gcd,
    lcm,
    lcm_all,
    product_nset,
)

N_A6 = [1, 40, 45, 72, 90]
# all pairwise products of N_A6, deduplicated: the 15-element set
N_PROD = [1, 40, 45, 72, 90, 1600, 1800, 2025, 2880, 3240, 3600, 4050, 5184, 6480, 8100]


def brute_products(values):
    return sorted({a * b for a in values for b in values})


@pytest.fixture(scope="module")
def n6():
    return ClassSizeSet.of_values(N_A6)


@pytest.fixture(scope="module")
def n(n6):
    return product_nset(n6, n6)


def test_factorization_round_trip():
    rng = random.Random(20240601)
    for _ in range(300):
        value = rng.randrange(1, 10**9)
        f = factored(value)
        assert math.prod(p**e for p, e in f.factors) == value
        assert f.value == value


def test_invalid_factorizations_rejected():
    with pytest.raises(ValueError):
        factored(0)
    with pytest.raises(ValueError):
        FactoredNatural(6, ((3, 1), (2, 1)))  # primes out of order
    with pytest.raises(ValueError):
        FactoredNatural(8, ((2, 2),))  # wrong value


def test_lcm_gcd_laws():
    rng = random.Random(7)
    for _ in range(200):
        a = factored(rng.randrange(1, 10**6))
        b = factored(rng.randrange(1, 10**6))
        assert lcm(a, b).value * gcd(a, b).value == a.value * b.value
        for p in (2, 3, 5, 7):
            assert lcm(a, b).p_part(p).value == max(
                a.p_part(p).value, b.p_part(p).value
            )


def test_p_part_examples():
    assert factored(72).p_part(2).value == 8
    assert factored(40).p_part(5).value == 5
    assert factored(45).p_part(2).value == 1


def test_lcm_examples():
    assert lcm(factored(1600), factored(72)).value == 14400  # 120^2
    assert lcm(factored(45), factored(40)).value == 360
    assert lcm(factored(7), factored(1)).value == 7


def test_exact_division():
    assert (factored(360) // factored(72)).value == 5
    with pytest.raises(ValueError):
        factored(10) // factored(4)


def test_product_nset_trivial():
    left = ClassSizeSet.of_values([1])
    right = ClassSizeSet.of_values([1, 5])
    assert product_nset(left, right).values == (1, 5)


def test_product_nset_of_a6(n6, n):
    assert list(n.values) == brute_products(N_A6)
    assert list(n.values) == N_PROD


def test_primes(n):
    assert n.primes() == {2, 3, 5}
    assert ClassSizeSet.of_values([1]).primes() == frozenset()
    n_a5 = ClassSizeSet.of_values([1, 12, 15, 20])
    assert n_a5.primes() == {2, 3, 5}


def test_multiples_in(n):
    assert n.multiples_in(factored(14400)) == ()
    assert [m.value for m in n.multiples_in(factored(360))] == [
        1800,
        2880,
        3240,
        3600,
        6480,
    ]
    assert len(n.multiples_in(factored(1))) == len(n)
    assert n.divides_some(factored(1))


def test_candidates_with_p_part_le(n):
    assert [m.value for m in n.with_p_part_le(2, 4)] == [1, 45, 90, 2025, 4050, 8100]
    assert [m.value for m in n.with_p_part_le(5, 1)] == [1, 72, 5184]
    assert [m.value for m in n.with_p_part_le(3, 3)] == [1, 40, 1600]
    assert n.with_p_part_le(2, 8100) == n.members


def test_coprime_pair_feasible(n):
    ok, wits = n.coprime_pair_feasible(factored(1600), factored(72))
    assert not ok and wits == ()
    ok, wits = n.coprime_pair_feasible(factored(40), factored(72))
    assert ok and [w.value for w in wits] == [1800, 2880]
    ok, wits = n.coprime_pair_feasible(factored(1), factored(72))
    assert ok and [w.value for w in wits] == [72]


def test_coprime_pair_feasible_monotone(n, n6):
    # enlarging the set never flips a feasible pair to infeasible
    for a in n6:
        for b in n6:
            small_ok, _ = n6.coprime_pair_feasible(a, b)
            big_ok, _ = n.coprime_pair_feasible(a, b)
            assert big_ok or not small_ok


def test_coprime_triple_feasible(n):
    # lcm(1800, 3600, 1800) = 3600 which is a member, so this is feasible
    ok, wits = n.coprime_triple_feasible(factored(1800), factored(3600), factored(1800))
    assert ok and [w.value for w in wits] == [3600]
    ok, wits = n.coprime_triple_feasible(factored(1800), factored(2880), factored(1800))
    assert not ok and wits == ()
    # collapsed arguments reduce to a multiples_in test
    for m in n:
        ok, _ = n.coprime_triple_feasible(m, m, m)
        assert ok == bool(n.multiples_in(m))


def test_min_group_order(n, n6):
    assert n.min_group_order().value == 129600
    assert str(n.min_group_order()) == "2^6*3^4*5^2"
    assert n6.min_group_order().value == 360
    assert ClassSizeSet.of_values([1]).min_group_order().value == 1


def test_max_p_part(n):
    assert n.max_p_part(2).value == 64
    assert n.max_p_part(3).value == 81
    assert n.max_p_part(5).value == 25
    assert n.max_p_part(7).value == 1


def test_lcm_all_matches_iterated():
    rng = random.Random(99)
    values = [factored(rng.randrange(1, 10**5)) for _ in range(20)]
    expected = 1
    for v in values:
        expected = expected * v.value // math.gcd(expected, v.value)
    assert lcm_all(values).value == expected


def test_json_serialization(n6):
    obj = n6.to_json_obj()
    assert obj["sizes"] == N_A6
    assert obj["factorizations"][1] == [[2, 3], [5, 1]]
