import math
import random

import pytest

from permclass.errors import (
    CosetIndexBoundError,
    EnumerationBoundError,
    GroupError,
    MembershipError,
)
from permclass.group import PermutationGroup, is_p_element, trivial_group
from permclass.groupexpr import group_from_text
from permclass.permutation import (
    Permutation,
    compose,
    conjugate,
    element_order,
    inverse,
    parse_cycles,
)


def closure(generators):
    """Independent oracle: multiplicative closure of a generating set."""
    degree = generators[0].degree
    elements = {Permutation.identity(degree)}
    frontier = list(elements)
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = compose(x, g)
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    return elements


def s3():
    return PermutationGroup([parse_cycles("(1,2,3)", 3), parse_cycles("(1,2)", 3)])


def s4():
    return PermutationGroup([parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4)])


def test_s3_order():
    assert s3().order.value == 6


def test_identity_group():
    g = PermutationGroup([Permutation.identity(4)])
    assert g.order.value == 1
    assert list(g.elements()) == [Permutation.identity(4)]


def test_empty_generator_list_rejected():
    with pytest.raises(GroupError):
        PermutationGroup([])


def test_mixed_degrees_rejected():
    with pytest.raises(GroupError):
        PermutationGroup([Permutation.identity(3), Permutation.identity(4)])


def test_a6_order_against_factorial(a6):
    assert a6.order.value == math.factorial(6) // 2


def test_enumeration_matches_closure_oracle():
    for group in (s3(), s4()):
        assert set(group.elements()) == closure(list(group.generators))


def test_enumeration_is_deterministic_and_indexed():
    g1 = s4()
    g2 = s4()
    assert g1.base == g2.base
    first = list(g1.elements())
    assert first == list(g2.elements())
    for i, p in enumerate(first):
        assert g1.element_index(p) == i


def test_rebuild_reproduces_order_and_base(a6):
    rebuilt = PermutationGroup(list(a6.generators))
    assert rebuilt.order.value == a6.order.value
    assert rebuilt.base == a6.base
    assert list(rebuilt.elements())[:50] == list(a6.elements())[:50]


def test_contains(a6):
    assert a6.contains(parse_cycles("(1,2,3)", 6))
    assert not a6.contains(parse_cycles("(1,2)", 6))
    with pytest.raises(GroupError):
        a6.contains(Permutation.identity(5))


def test_element_index_rejects_non_members(a6):
    with pytest.raises(MembershipError):
        a6.element_index(parse_cycles("(1,2)", 6))


def test_enumeration_bound_refusal(a6):
    with pytest.raises(EnumerationBoundError) as err:
        list(a6.elements(bound=100))
    assert "100" in str(err.value)
    assert err.value.bound == 100


def test_conjugacy_class_identity(a6):
    cls = a6.conjugacy_class_of(Permutation.identity(6))
    assert cls.size.value == 1
    assert cls.representative.is_identity()


def test_conjugacy_class_of_five_cycle(a6):
    cls = a6.conjugacy_class_of(parse_cycles("(1,2,3,4,5)", 6))
    assert cls.size.value == 72


def test_class_orbit_matches_brute_force():
    group = s4()
    elements = list(group.elements())
    for x in (parse_cycles("(1,2)", 4), parse_cycles("(1,2,3)", 4)):
        brute = {conjugate(x, g) for g in elements}
        cls = group.conjugacy_class_of(x)
        assert cls.size.value == len(brute)
        assert cls.representative == min(brute, key=lambda p: p.images)


def test_class_membership_required(a6):
    with pytest.raises(MembershipError):
        a6.conjugacy_class_of(parse_cycles("(1,2)", 6))


def test_class_partition_s3():
    group = s3()
    partition = group.class_partition()
    assert [c.size.value for c in partition] == [1, 3, 2]
    assert group.class_sizes().values == (1, 2, 3)


def test_class_partition_sums_to_order(a6, s6):
    for group in (s3(), s4(), a6, s6):
        partition = group.class_partition()
        assert sum(c.size.value for c in partition) == group.order.value
        for c in partition:
            assert group.order.value % c.size.value == 0


def test_class_sizes_of_a6(a6):
    assert a6.class_sizes().values == (1, 40, 45, 72, 90)
    sizes = sorted(c.size.value for c in a6.class_partition())
    assert sizes == [1, 40, 40, 45, 72, 72, 90]


def test_class_size_lookup(a6):
    for cls in a6.class_partition():
        assert a6.class_size_of(cls.representative) == cls.size
    x = parse_cycles("(1,2,3,4,5)", 6)
    assert a6.class_size_of(x).value == 72


def test_centralizer_order(a6):
    assert a6.centralizer_order(Permutation.identity(6)).value == 360
    assert a6.centralizer_order(parse_cycles("(1,2,3,4,5)", 6)).value == 5


def test_centralizer_elements_cyclic(a6):
    x = parse_cycles("(1,2,3,4,5)", 6)
    c = a6.centralizer_elements(x)
    assert c.order.value == 5
    assert c.contains(x)


def test_centralizer_elements_identity_gives_group():
    group = s4()
    c = group.centralizer_elements(Permutation.identity(4))
    assert c.order.value == group.order.value
    assert all(c.contains(g) for g in group.generators)


def test_centralizer_matches_brute_force():
    group = s4()
    elements = list(group.elements())
    x = parse_cycles("(1,2)(3,4)", 4)
    brute = [g for g in elements if compose(g, x) == compose(x, g)]
    assert group.centralizer_elements(x).order.value == len(brute)


def test_center_trivial_and_full(a6):
    assert s3().center().order.value == 1
    assert a6.center().order.value == 1
    klein = PermutationGroup([parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)])
    assert klein.center().order.value == 4


def test_is_p_element():
    assert is_p_element(parse_cycles("(1,2,3,4,5)", 6), 5)
    assert not is_p_element(parse_cycles("(1,2)(3,4,5)", 6), 3)
    assert is_p_element(Permutation.identity(6), 7)


def test_random_element_is_member_and_seeded(a6):
    rng = random.Random(1729)
    sample = [a6.random_element(rng) for _ in range(50)]
    assert all(a6.contains(p) for p in sample)
    rng2 = random.Random(1729)
    assert sample == [a6.random_element(rng2) for _ in range(50)]


def test_coset_action_index_two(s6, a6):
    action = s6.coset_action(a6)
    assert action.group.order.value == 2
    assert action.group.degree == 2
    assert action.apply(parse_cycles("(1,2)", 6)).images == (1, 0)
    assert action.apply(parse_cycles("(1,2,3)", 6)).is_identity()


def test_coset_action_on_self(a6):
    action = a6.coset_action(a6)
    assert action.group.order.value == 1
    assert action.group.degree == 1


def test_coset_action_product_quotient(a6xa6):
    from permclass.constructions import alternating, direct_product

    k = direct_product(alternating(6), trivial_group(6))
    action = a6xa6.coset_action(k)
    assert action.group.order.value == 360
    assert action.group.class_sizes().values == (1, 40, 45, 72, 90)


def test_coset_action_rejects_non_normal():
    group = s3()
    k = PermutationGroup([parse_cycles("(1,2)", 3)])
    with pytest.raises(GroupError):
        group.coset_action(k)


def test_coset_action_rejects_non_subgroup(a6):
    k = PermutationGroup([parse_cycles("(1,2)", 6)])
    with pytest.raises(GroupError):
        a6.coset_action(k)


def test_coset_action_index_bound(s6, a6):
    with pytest.raises(CosetIndexBoundError):
        s6.coset_action(trivial_group(6), index_bound=100)


def test_orbit_stabilizer_identity(a6):
    for cls in a6.class_partition():
        assert (
            cls.size.value * a6.centralizer_order(cls.representative).value
            == a6.order.value
        )


def test_element_order_divides_group_order(a6):
    rng = random.Random(3)
    for _ in range(20):
        p = a6.random_element(rng)
        assert a6.order.value % element_order(p).value == 0
