import random

import pytest

from permclass.permutation import (
    Permutation,
    compose,
    conjugate,
    cycle_type,
    element_order,
    format_cycles,
    inverse,
    parse_cycles,
    power,
)


def random_permutation(rng, degree):
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(tuple(images))


def order_by_iteration(p):
    """Independent oracle: multiply until the identity comes back."""
    q = p
    k = 1
    while not q.is_identity():
        q = compose(q, p)
        k += 1
    return k


def test_not_a_permutation_rejected():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_compose_identity():
    p = parse_cycles("(1,2,3)", 3)
    assert compose(Permutation.identity(3), p) == p
    assert compose(p, Permutation.identity(3)) == p


def test_compose_with_inverse_is_identity():
    rng = random.Random(11)
    for _ in range(100):
        p = random_permutation(rng, 10)
        assert compose(p, inverse(p)).is_identity()
        assert compose(inverse(p), p).is_identity()


def test_compose_hand_example():
    # (0 1 2) then (0 1): hand multiplication of the image tables gives
    # the transposition fixing point 0
    p = Permutation((1, 2, 0))
    q = Permutation((1, 0, 2))
    assert compose(p, q).images == (0, 2, 1)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_compose_associative():
    rng = random.Random(23)
    for _ in range(100):
        p, q, r = (random_permutation(rng, 8) for _ in range(3))
        assert compose(compose(p, q), r) == compose(p, compose(q, r))


def test_inverse_examples():
    assert inverse(Permutation.identity(4)).is_identity()
    assert inverse(parse_cycles("(1,2,3)", 3)) == parse_cycles("(1,3,2)", 3)


def test_inverse_involution_and_antihomomorphism():
    rng = random.Random(5)
    for _ in range(100):
        p = random_permutation(rng, 10)
        q = random_permutation(rng, 10)
        assert inverse(inverse(p)) == p
        assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


def test_element_order_examples():
    assert element_order(Permutation.identity(6)).value == 1
    assert element_order(parse_cycles("(1,2,3,4,5)", 6)).value == 5
    assert element_order(parse_cycles("(1,2)(3,4,5)", 5)).value == 6


def test_element_order_matches_iteration_oracle():
    rng = random.Random(17)
    for _ in range(60):
        p = random_permutation(rng, 9)
        assert element_order(p).value == order_by_iteration(p)


def test_power_matches_repeated_composition():
    rng = random.Random(31)
    for _ in range(40):
        p = random_permutation(rng, 8)
        q = Permutation.identity(8)
        for k in range(10):
            assert power(p, k) == q
            q = compose(q, p)
        assert power(p, -1) == inverse(p)


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(6)) == {1: 6}
    assert cycle_type(parse_cycles("(1,2,3,4,5)", 6)) == {5: 1, 1: 1}
    assert cycle_type(parse_cycles("(1,2)(3,4)", 6)) == {2: 2, 1: 2}


def test_cycle_type_invariant_under_conjugation():
    rng = random.Random(41)
    for _ in range(100):
        p = random_permutation(rng, 9)
        g = random_permutation(rng, 9)
        assert cycle_type(conjugate(p, g)) == cycle_type(p)


def test_conjugation_convention():
    # x^g = g^-1 x g
    rng = random.Random(43)
    x = random_permutation(rng, 7)
    g = random_permutation(rng, 7)
    assert conjugate(x, g) == compose(compose(inverse(g), x), g)


def test_format_examples():
    assert format_cycles(Permutation.identity(5)) == "()"
    assert format_cycles(parse_cycles("(1,2,3)(4,5)", 6)) == "(1,2,3)(4,5)"


def test_parse_format_round_trip():
    rng = random.Random(53)
    for _ in range(100):
        p = random_permutation(rng, 11)
        assert parse_cycles(format_cycles(p), 11) == p


def test_parse_canonicalizes():
    assert format_cycles(parse_cycles("(2,3,1)", 3)) == "(1,2,3)"
    assert parse_cycles(" ( 1 , 2 ) ( 3 , 4 ) ", 4) == parse_cycles("(1,2)(3,4)", 4)


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_cycles("(1,2,2)", 3)  # repeated point
    with pytest.raises(ValueError):
        parse_cycles("(1,2", 3)  # unterminated cycle
    with pytest.raises(ValueError):
        parse_cycles("(1,2,5)", 3)  # out of range for the degree
    with pytest.raises(ValueError):
        parse_cycles("junk")


def test_degree_cap():
    with pytest.raises(ValueError):
        Permutation(tuple(range(2**16 + 1)))
