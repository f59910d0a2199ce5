import pytest

from permclass.coprime_action import (
    LinearAction,
    check_decomposition,
    commutator_dimension_is_even,
    commutator_subspace,
    cyclic_actions_of_order,
    fixed_subspace,
)
from permclass.fields import in_span

IDENTITY2 = ((1, 0), (0, 1))
# companion matrix of x^2 + x + 1 over F5: order 3, no eigenvalue 1
FREE3 = ((0, 4), (1, 4))


def test_identity_action_is_all_fixed():
    act = LinearAction(5, 2, (IDENTITY2,))
    assert len(fixed_subspace(act)) == 2
    assert commutator_subspace(act) == []
    assert check_decomposition(act)


def test_free_order3_action():
    act = LinearAction(5, 2, (FREE3,))
    assert act.group_order() == 3
    assert fixed_subspace(act) == []
    assert len(commutator_subspace(act)) == 2
    assert check_decomposition(act)
    assert commutator_dimension_is_even(act)


def test_block_action_splits_one_and_two():
    block = (
        (1, 0, 0),
        (0, 0, 4),
        (0, 1, 4),
    )
    act = LinearAction(5, 3, (block,))
    fixed = fixed_subspace(act)
    comm = commutator_subspace(act)
    assert len(fixed) == 1 and len(comm) == 2
    assert in_span(5, fixed, (1, 0, 0))
    assert check_decomposition(act)


def test_singular_generator_rejected():
    with pytest.raises(ValueError):
        LinearAction(5, 2, (((1, 0), (0, 0)),))


def test_coprimality_violation_is_an_error():
    # a transvection over F5 has order 5: hypothesis fails
    act = LinearAction(5, 2, (((1, 1), (0, 1)),))
    assert not act.is_coprime()
    with pytest.raises(ValueError):
        check_decomposition(act)


def test_two_generator_klein_action():
    act = LinearAction(5, 2, (((4, 0), (0, 1)), ((1, 0), (0, 4))))
    assert act.group_order() == 4
    assert check_decomposition(act)
    assert fixed_subspace(act) == []


def test_exhaustive_dim_le_2():
    expected_counts = {(2, 1): 1, (2, 2): 31, (3, 1): 0, (3, 2): 20}
    for (order, dim), count in expected_counts.items():
        actions = cyclic_actions_of_order(5, dim, order)
        assert len(actions) == count
        assert all(check_decomposition(a) for a in actions)
    for act in cyclic_actions_of_order(5, 2, 3):
        assert commutator_dimension_is_even(act)


def test_exact_order_filtering():
    for act in cyclic_actions_of_order(5, 2, 2):
        assert act.group_order() == 2
