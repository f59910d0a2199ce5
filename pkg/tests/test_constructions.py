import math

import pytest

from permclass.constructions import (
    a6_extensions,
    alternating,
    direct_product,
    index_two_overgroups,
    matrix_group_to_permutation,
    pgammal_2_9,
    pgl_2_9,
    symmetric,
    trivial,
    u4_2,
    wreath_by_involution,
)
from permclass.errors import ConstructionError, GroupError
from permclass.fields import ProjectivePointSet, gf9, prime_field
from permclass.group import PermutationGroup
from permclass.permutation import Permutation, element_order


def test_alternating_and_symmetric_orders():
    assert alternating(5).order.value == 60
    assert alternating(6).order.value == 360
    assert symmetric(6).order.value == 720
    for n in range(3, 11):
        assert alternating(n).order.value == math.factorial(n) // 2
        assert symmetric(n).order.value == math.factorial(n)
    assert alternating(16).order.value == math.factorial(16) // 2


def test_degree_range_enforced():
    for bad in (2, 17):
        with pytest.raises(GroupError):
            alternating(bad)
        with pytest.raises(GroupError):
            symmetric(bad)


def test_direct_product_orders(a6):
    prod = direct_product(a6, a6)
    assert prod.order.value == 129600
    assert prod.degree == 12
    assert direct_product(alternating(5), a6).order.value == 21600
    assert direct_product(a6, trivial(1)).order.value == 360


def test_direct_product_class_sizes_multiply(a6):
    from permclass.factored import product_nset

    prod = direct_product(alternating(5), alternating(5))
    assert (
        prod.class_sizes().values
        == product_nset(alternating(5).class_sizes(), alternating(5).class_sizes()).values
    )


def test_wreath_orders_and_swap_class(a6):
    cases = [
        (trivial(1), 2, 1),
        (symmetric(3), 72, 6),
        (alternating(5), 7200, 60),
        (a6, 259200, 360),
    ]
    for base, order, swap_class in cases:
        w = wreath_by_involution(base)
        assert w.group.order.value == order
        assert w.group.conjugacy_class_of(w.swap).size.value == swap_class
        assert element_order(w.swap).value == 2


def test_pgammal_structure():
    full, socle = pgammal_2_9()
    assert full.order.value == 1440
    assert full.degree == 10
    assert socle.order.value == 360
    assert socle.class_sizes().values == (1, 40, 45, 72, 90)
    assert full.is_subgroup(socle)
    assert full.normalizes(socle)
    # the frobenius generator is not in the socle
    assert not socle.contains(full.generators[2])
    action = full.coset_action(socle)
    assert action.group.order.value == 4
    # exponent 2 quotient
    for p in action.group.elements():
        from permclass.permutation import compose

        assert compose(p, p).is_identity()


def test_pgl_2_9_image():
    assert pgl_2_9().order.value == 720


def test_index_two_overgroups():
    full, socle = pgammal_2_9()
    overs = index_two_overgroups(full, socle)
    assert [g.order.value for g in overs] == [720, 720, 720]
    for g in overs:
        assert g.is_subgroup(socle)
    sizes = {g.class_sizes().values for g in overs}
    assert len(sizes) == 3


def test_index_two_overgroups_requires_index_four(s6, a6):
    with pytest.raises(GroupError):
        index_two_overgroups(s6, a6)


def test_extension_labels_by_invariants(s6):
    ext = a6_extensions()
    assert set(ext.groups) == {"S6", "PGL(2,9)", "M10"}
    # cross-construction oracles: the S6-labeled overgroup has the class
    # sizes of the symmetric group, the PGL-labeled one those of the
    # projective linear image
    assert ext.groups["S6"].class_sizes().values == s6.class_sizes().values
    assert ext.groups["PGL(2,9)"].class_sizes().values == pgl_2_9().class_sizes().values
    orders = {
        label: {element_order(c.representative).value for c in g.class_partition()}
        for label, g in ext.groups.items()
    }
    assert 6 in orders["S6"] and 8 not in orders["S6"]
    assert 10 in orders["PGL(2,9)"]
    assert 8 in orders["M10"] and 6 not in orders["M10"] and 10 not in orders["M10"]
    assert "order" in ext.rule


def test_u4_2_structure(u42):
    assert u42.order.value == 25920
    assert str(u42.order) == "2^6*3^4*5"
    assert u42.degree == 40
    assert u42.center().order.value == 1


def test_u4_2_class_sizes(u42):
    sizes = u42.class_sizes()
    assert sizes.values == (
        1, 40, 45, 240, 270, 360, 480, 540, 720, 1440, 2160, 2880, 3240, 5184,
    )
    assert sizes.max_p_part(2).value == 64


def test_u4_2_simplicity_heuristic(u42):
    """No nontrivial class generates a proper normal subgroup."""
    ident = Permutation.identity(40)
    for cls in u42.class_partition():
        if cls.representative.is_identity():
            continue
        orbit = _class_elements(u42, cls.representative)
        closure = PermutationGroup([Permutation(t) for t in orbit])
        assert closure.order.value == 25920


def _class_elements(group, x):
    from permclass.permutation import conjugate_images, inverse_images

    pairs = [(g, inverse_images(g)) for g in (p.images for p in group.generators)]
    seen = {x.images}
    queue = [x.images]
    while queue:
        batch = []
        for y in queue:
            for g, g_inv in pairs:
                z = conjugate_images(y, g, g_inv)
                if z not in seen:
                    seen.add(z)
                    batch.append(z)
        queue = batch
    return sorted(seen)


def test_matrix_group_to_permutation_basics():
    field = prime_field(3)
    points = ProjectivePointSet.create(field, 4)
    ident = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
    scalar = tuple(tuple(2 if i == j else 0 for j in range(4)) for i in range(4))
    image = matrix_group_to_permutation(field, [ident, scalar], points)
    assert image.order.value == 1  # scalars act trivially on projective points


def test_matrix_group_to_permutation_gl29():
    field = gf9()
    points = ProjectivePointSet.create(field, 2)
    image = matrix_group_to_permutation(
        field,
        [((4, 0), (0, 1)), ((field.neg(1), 1), (field.neg(1), 0))],
        points,
    )
    assert image.order.value == 720


def test_matrix_group_rejects_non_bijective():
    field = prime_field(3)
    points = ProjectivePointSet.create(field, 2)
    singular = ((1, 0), (0, 0))
    with pytest.raises(ConstructionError):
        matrix_group_to_permutation(field, [singular], points)


def test_projective_point_counts():
    assert len(ProjectivePointSet.create(prime_field(3), 4)) == 40
    assert len(ProjectivePointSet.create(gf9(), 2)) == 10
    pts = ProjectivePointSet.create(prime_field(5), 3)
    assert len(pts) == 31
    for p in pts.points:
        assert pts.normalize(p) == p


def test_gf9_field_laws():
    field = gf9()
    for a in range(9):
        assert field.add(a, field.neg(a)) == 0
        if a:
            assert field.mul(a, field.inv(a)) == 1
        assert field.frobenius(field.frobenius(a)) == a
    # frobenius is additive and multiplicative
    for a in range(9):
        for b in range(9):
            assert field.frobenius(field.add(a, b)) == field.add(
                field.frobenius(a), field.frobenius(b)
            )
            assert field.frobenius(field.mul(a, b)) == field.mul(
                field.frobenius(a), field.frobenius(b)
            )
