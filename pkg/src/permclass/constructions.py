"""Constructors for the concrete groups the toolkit studies.

Alternating and symmetric groups come from standard generator pairs.
The order-1440 automorphism group of the order-360 simple group is
realized as the semilinear fractional action on the 10 points of the
projective line over the field with 9 elements; its socle and the three
intermediate index-2 overgroups are derived from that.  The order-25920
group is realized as the symplectic group on 4 points over F3 acting on
the 40 points of projective 3-space; its generators were found by
search and are validated by the order check at construction time.

Every constructor is cached, so repeated evaluation of the same name
yields the identical group object.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product
from typing import NamedTuple

from .errors import ConstructionError, GroupError
from .fields import (
    Matrix,
    ProjectivePointSet,
    gf9,
    mat_mul,
    mat_vec,
    prime_field,
)
from .group import PermutationGroup, trivial_group
from .permutation import Permutation, compose_images, element_order, inverse_images


@lru_cache(maxsize=None)
def alternating(n: int) -> PermutationGroup:
    """The alternating group on n points, 3 <= n <= 16."""
    if not 3 <= n <= 16:
        raise GroupError(f"alternating degree out of range: {n}")
    three_cycle = Permutation.from_cycles([(0, 1, 2)], n)
    if n == 3:
        gens = [three_cycle]
    elif n % 2 == 1:
        gens = [three_cycle, Permutation.from_cycles([tuple(range(n))], n)]
    else:
        gens = [three_cycle, Permutation.from_cycles([tuple(range(1, n))], n)]
    return PermutationGroup(gens)


@lru_cache(maxsize=None)
def symmetric(n: int) -> PermutationGroup:
    """The symmetric group on n points, 3 <= n <= 16."""
    if not 3 <= n <= 16:
        raise GroupError(f"symmetric degree out of range: {n}")
    return PermutationGroup(
        [
            Permutation.from_cycles([(0, 1)], n),
            Permutation.from_cycles([tuple(range(n))], n),
        ]
    )


def trivial(degree: int = 1) -> PermutationGroup:
    return trivial_group(degree)


def _embed_left(p: Permutation, total: int) -> Permutation:
    return Permutation(p.images + tuple(range(p.degree, total)))


def _embed_right(p: Permutation, offset: int) -> Permutation:
    images = list(range(offset + p.degree))
    for i, j in enumerate(p.images):
        images[offset + i] = offset + j
    return Permutation(tuple(images))


def direct_product(g: PermutationGroup, h: PermutationGroup) -> PermutationGroup:
    """G x H acting on the disjoint union of the two point sets."""
    total = g.degree + h.degree
    gens = [_embed_left(p, total) for p in g.generators]
    gens += [_embed_right(p, g.degree) for p in h.generators]
    product = PermutationGroup(gens)
    if product.order.value != g.order.value * h.order.value:
        raise ConstructionError("direct product order is not multiplicative")
    return product


class WreathProduct(NamedTuple):
    group: PermutationGroup
    swap: Permutation


def wreath_by_involution(h: PermutationGroup) -> WreathProduct:
    """H wr <a> for the involution a swapping two copies of H's points.

    Acts on 2n points; the base subgroup is H x H and `swap` is the
    distinguished block-swapping involution.  The order is 2|H|^2.
    """
    n = h.degree
    gens = [_embed_left(p, 2 * n) for p in h.generators]
    gens += [_embed_right(p, n) for p in h.generators]
    swap = Permutation(tuple(range(n, 2 * n)) + tuple(range(n)))
    gens.append(swap)
    group = PermutationGroup(gens)
    if group.order.value != 2 * h.order.value ** 2:
        raise ConstructionError("wreath product order is not 2|H|^2")
    return WreathProduct(group, swap)


# -- matrix actions on projective points -------------------------------------


def matrix_group_to_permutation(
    field, actions: list, points: ProjectivePointSet
) -> PermutationGroup:
    """Permutation image of matrix (or semilinear) generators on points.

    Each action is either a matrix, or a pair (matrix, k) applying the
    field's frobenius map k times before the matrix.  The image is the
    induced permutation group; scalar kernels simply act trivially.
    """
    index = {pt: i for i, pt in enumerate(points.points)}
    perms = []
    for action in actions:
        if isinstance(action, tuple) and action and isinstance(action[0][0], tuple):
            matrix, frob_power = action
        else:
            matrix, frob_power = action, 0
        images = []
        for pt in points.points:
            v = pt
            for _ in range(frob_power):
                v = tuple(field.frobenius(x) for x in v)
            try:
                w = points.normalize(mat_vec(field, matrix, v))
            except ValueError as exc:
                raise ConstructionError(
                    "action does not preserve the point set"
                ) from exc
            target = index.get(w)
            if target is None:
                raise ConstructionError("action does not preserve the point set")
            images.append(target)
        if sorted(images) != list(range(len(points))):
            raise ConstructionError("action is not bijective on the point set")
        perms.append(Permutation(tuple(images)))
    return PermutationGroup(perms)


class SocledGroup(NamedTuple):
    group: PermutationGroup
    socle: PermutationGroup


@lru_cache(maxsize=None)
def pgammal_2_9() -> SocledGroup:
    """The full semilinear projective group on the 10-point line over GF9.

    Returns the order-1440 group together with its order-360 socle (the
    image of the determinant-1 linear maps), which is normal of index 4.
    The generator list is [diagonal, antidiagonal, frobenius].
    """
    field = gf9()
    points = ProjectivePointSet.create(field, 2)
    zeta = 4  # 1 + t, a generator of the multiplicative group
    diag: Matrix = ((zeta, 0), (0, 1))
    anti: Matrix = ((field.neg(1), 1), (field.neg(1), 0))
    ident: Matrix = ((1, 0), (0, 1))
    full = matrix_group_to_permutation(
        field, [diag, anti, (ident, 1)], points
    )
    t = 3  # the adjoined square root of -1
    socle = matrix_group_to_permutation(
        field,
        [
            ((1, 1), (0, 1)),
            ((1, t), (0, 1)),
            ((1, 0), (1, 1)),
            ((1, 0), (t, 1)),
        ],
        points,
    )
    if full.order.value != 1440 or socle.order.value != 360:
        raise ConstructionError("semilinear projective construction has wrong orders")
    if not (full.is_subgroup(socle) and full.normalizes(socle)):
        raise ConstructionError("socle is not a normal subgroup")
    return SocledGroup(full, socle)


@lru_cache(maxsize=None)
def pgl_2_9() -> PermutationGroup:
    """The projective image of the full linear group on the 10-point line."""
    field = gf9()
    points = ProjectivePointSet.create(field, 2)
    group = matrix_group_to_permutation(
        field, [((4, 0), (0, 1)), ((field.neg(1), 1), (field.neg(1), 0))], points
    )
    if group.order.value != 720:
        raise ConstructionError("projective linear image has wrong order")
    return group


def index_two_overgroups(
    g: PermutationGroup, s: PermutationGroup
) -> list[PermutationGroup]:
    """The three subgroups strictly between s and g when g/s is a Klein four.

    Requires s normal in g of index 4 with every square falling back into
    s; each overgroup is generated by s and one nontrivial coset
    representative, found in enumeration order.
    """
    if not (g.is_subgroup(s) and g.normalizes(s)):
        raise GroupError("s must be a normal subgroup of g")
    index = (g.order // s.order).value
    if index != 4:
        raise GroupError(f"index must be 4, got {index}")
    reps: list[Permutation] = []
    for p in g.elements():
        if s.contains(p):
            continue
        p_inv = inverse_images(p.images)
        if any(s._contains_images(compose_images(q.images, p_inv)) for q in reps):
            continue
        reps.append(p)
        if len(reps) == 3:
            break
    if len(reps) != 3:
        raise GroupError("could not find three nontrivial cosets")
    for r in reps:
        if not s._contains_images(compose_images(r.images, r.images)):
            raise GroupError("quotient is cyclic, not exponent 2")
    out = []
    for r in reps:
        over = PermutationGroup(list(s.generators) + [r])
        if over.order.value != 2 * s.order.value:
            raise ConstructionError("overgroup order is not 2|s|")
        out.append(over)
    return out


@dataclass(frozen=True)
class LabeledExtensions:
    """The three index-2 overgroups of the socle, labeled by invariants."""

    groups: dict  # label -> PermutationGroup
    rule: str

    LABELS = ("S6", "PGL(2,9)", "M10")


_LABEL_RULE = (
    "labels assigned from element-order spectra of the three order-720 "
    "overgroups: an element of order 6 -> S6; an element of order 10 -> "
    "PGL(2,9); elements of order 8 but of neither order 6 nor 10 -> M10"
)


@lru_cache(maxsize=None)
def a6_extensions() -> LabeledExtensions:
    """Label the three order-720 overgroups of the socle by invariants."""
    full, socle = pgammal_2_9()
    overgroups = index_two_overgroups(full, socle)
    labeled: dict[str, PermutationGroup] = {}
    for group in overgroups:
        orders = {
            element_order(c.representative).value for c in group.class_partition()
        }
        if 6 in orders:
            label = "S6"
        elif 10 in orders:
            label = "PGL(2,9)"
        elif 8 in orders:
            label = "M10"
        else:
            raise ConstructionError(f"unrecognized order spectrum {sorted(orders)}")
        if label in labeled:
            raise ConstructionError(f"two overgroups matched the {label} rule")
        labeled[label] = group
    if set(labeled) != set(LabeledExtensions.LABELS):
        raise ConstructionError("overgroup labeling is incomplete")
    sizes = [g.class_sizes().values for g in overgroups]
    if len(set(sizes)) != 3:
        raise ConstructionError("overgroups do not have distinct class-size sets")
    return LabeledExtensions(labeled, _LABEL_RULE)


# -- the order-25920 symplectic group ----------------------------------------

# form matrix [[0, I], [-I, 0]] over F3
_SYMPLECTIC_FORM: Matrix = (
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (2, 0, 0, 0),
    (0, 2, 0, 0),
)

# A transvection (x -> x + <x,v>v for v = e4) and a regular element of
# matrix order 12 built from three transvections; found by search, and
# validated below by the form-preservation and order-25920 checks.
_SP43_TRANSVECTION: Matrix = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 1, 0, 1),
)
_SP43_REGULAR: Matrix = (
    (1, 0, 2, 0),
    (2, 0, 1, 2),
    (2, 1, 2, 1),
    (1, 1, 2, 2),
)


def _preserves_form(field, m: Matrix) -> bool:
    d = len(m)
    mt = tuple(tuple(m[j][i] for j in range(d)) for i in range(d))
    return mat_mul(field, mt, mat_mul(field, _SYMPLECTIC_FORM, m)) == _SYMPLECTIC_FORM


@lru_cache(maxsize=None)
def u4_2() -> PermutationGroup:
    """The order-25920 group on the 40 points of projective 3-space over F3.

    Built as the projective image of the symplectic group for the form
    [[0,I],[-I,0]]; the two matrix generators must preserve the form and
    the image must have order 25920 = 2^6 * 3^4 * 5.
    """
    field = prime_field(3)
    for m in (_SP43_TRANSVECTION, _SP43_REGULAR):
        if not _preserves_form(field, m):
            raise ConstructionError("generator does not preserve the symplectic form")
    points = ProjectivePointSet.create(field, 4)
    group = matrix_group_to_permutation(
        field, [_SP43_TRANSVECTION, _SP43_REGULAR], points
    )
    if group.order.value != 25920:
        raise ConstructionError(
            f"symplectic image has order {group.order.value}, expected 25920"
        )
    return group
