"""Instance verification of the reusable class-size facts.

Each checker exercises one general statement about conjugacy class sizes
on concretely constructed groups and returns a structured report:

  big1   class sizes under normal subgroups and quotient images divide
         the ambient class size
  big2   for commuting elements of coprime order, the centralizer of the
         product is the intersection of the centralizers, the class size
         of the product is a multiple of the lcm and at most the product
  wreath the block-swapping involution of H wr 2 has class size |H|
  index  an element whose class size has small p-part admits a p-element
         in its centralizer with strictly smaller class-size p-part
  gor    a coprime linear action splits the space into fixed vectors
         and the span of commutators
"""

from __future__ import annotations

import random

from .constructions import (
    alternating,
    pgammal_2_9,
    symmetric,
    trivial,
    wreath_by_involution,
)
from .coprime_action import (
    check_decomposition,
    commutator_dimension_is_even,
    cyclic_actions_of_order,
)
from .factored import FactoredNatural, lcm
from .group import PermutationGroup, is_p_element
from .permutation import (
    Permutation,
    commute,
    compose,
    conjugate_images,
    element_order,
    inverse_images,
    power,
)
from .report import Input, LemmaReport, ReportBuilder


def subgroup_conjugation_orbit_size(k: PermutationGroup, x: Permutation) -> int:
    """Size of the orbit of x under conjugation by elements of k only."""
    pairs = [(g, inverse_images(g)) for g in k._gen_images]
    seen = {x.images}
    queue = [x.images]
    while queue:
        next_queue = []
        for y in queue:
            for g, g_inv in pairs:
                z = conjugate_images(y, g, g_inv)
                if z not in seen:
                    seen.add(z)
                    next_queue.append(z)
        queue = next_queue
    return len(seen)


def normal_divisibility_report(
    cases: list[tuple[str, PermutationGroup, PermutationGroup]]
) -> LemmaReport:
    """big1: for K normal in G, |x^K| and the quotient class size divide |x^G|."""
    rb = ReportBuilder("big1", "class sizes under normal subgroups and quotients")
    for name, g, k in cases:
        action = g.coset_action(k)
        partition = g.class_partition()
        sub_violations = []
        quo_violations = []
        for cls in partition:
            x = cls.representative
            sub_size = subgroup_conjugation_orbit_size(k, x)
            if cls.size.value % sub_size != 0:
                sub_violations.append([x.images, sub_size])
            image_size = action.group.conjugacy_class_of(action.apply(x)).size
            if cls.size.value % image_size.value != 0:
                quo_violations.append([x.images, image_size.value])
        rb.check(
            f"in {name}: the subgroup-conjugation orbit size of every class "
            "representative divides its full class size",
            "|x^K| divides |x^G| for all class representatives x",
            not sub_violations,
            inputs=[
                Input("pair", name, "stated"),
                Input("classes checked", len(partition)),
                Input("violations", sub_violations),
            ],
        )
        rb.check(
            f"in {name}: the class size of the image of every representative "
            "in the quotient action divides its full class size",
            "|x-bar ^ (G/K)| divides |x^G| for all class representatives x",
            not quo_violations,
            inputs=[
                Input("pair", name, "stated"),
                Input("quotient order", action.group.order.value),
                Input("violations", quo_violations),
            ],
        )
    return rb.build()


def _primary_split_pairs(g: Permutation, order: FactoredNatural):
    """All (p-part, p'-part) splits of g, one per prime of its order."""
    n = order.value
    out = []
    for p, e in order.factors:
        pe = p**e
        m = n // pe
        if m == 1:
            continue
        x = power(g, m * pow(m, -1, pe))
        y = power(g, pe * pow(pe, -1, m))
        out.append((x, y))
    return out


def _centralizer_images(
    group: PermutationGroup, x: Permutation
) -> frozenset[tuple[int, ...]]:
    xi = x.images
    return frozenset(g for g in group._materialized_elements(2**62) if commute(g, xi))


def commuting_pair_report(
    group: PermutationGroup,
    group_name: str,
    pair_count: int = 10_000,
    seed: int = 1729,
    exact_subsample: int = 10,
    exhaustive_group: PermutationGroup | None = None,
    exhaustive_name: str = "S6",
) -> LemmaReport:
    """big2: checks on commuting pairs of coprime order.

    Pairs in the large group are sampled with a seeded generator as the
    primary-part splits of uniform random elements; the numeric relations
    are checked for every pair and the centralizer set identity is checked
    elementwise on a leading subsample.  A small group is also scanned
    exhaustively, set identity included, over all its commuting coprime
    pairs.
    """
    rb = ReportBuilder("big2", "commuting pairs of coprime order")
    group.class_partition()
    rng = random.Random(seed)
    pairs: list[tuple[Permutation, Permutation]] = []
    while len(pairs) < pair_count:
        g = group.random_element(rng)
        order = element_order(g)
        if len(order.factors) < 2:
            continue
        pairs.extend(_primary_split_pairs(g, order))
    lcm_violations = 0
    bound_violations = 0
    for x, y in pairs:
        cx = group.class_size_of(x)
        cy = group.class_size_of(y)
        cxy = group.class_size_of(compose(x, y))
        if not lcm(cx, cy).divides(cxy):
            lcm_violations += 1
        if cx.value * cy.value < cxy.value:
            bound_violations += 1
    rb.check(
        f"in {group_name}: lcm of the two class sizes divides the class size "
        "of the product, for every sampled pair",
        "lcm(|x^G|, |y^G|) divides |(xy)^G|",
        lcm_violations == 0,
        inputs=[
            Input("group", group_name, "stated"),
            Input("pairs", len(pairs)),
            Input("seed", seed, "stated"),
            Input("violations", lcm_violations),
        ],
    )
    rb.check(
        f"in {group_name}: the class size of the product never exceeds the "
        "product of the two class sizes",
        "|x^G| * |y^G| >= |(xy)^G|",
        bound_violations == 0,
        inputs=[Input("pairs", len(pairs)), Input("violations", bound_violations)],
    )
    subsample = pairs[:exact_subsample]
    set_violations = 0
    for x, y in subsample:
        cx = _centralizer_images(group, x)
        cy = _centralizer_images(group, y)
        cxy = _centralizer_images(group, compose(x, y))
        if cxy != (cx & cy):
            set_violations += 1
    rb.check(
        f"in {group_name}: the centralizer of the product equals the "
        "intersection of the centralizers, elementwise, on a leading subsample",
        "C_G(xy) == C_G(x) & C_G(y) as element sets",
        set_violations == 0,
        inputs=[Input("pairs", len(subsample)), Input("violations", set_violations)],
    )
    if exhaustive_group is not None:
        checked, violations = _exhaustive_pair_scan(exhaustive_group)
        rb.check(
            f"in {exhaustive_name}: all three relations hold for every "
            "commuting pair of coprime order, set identity included",
            "exhaustive scan over all commuting coprime pairs",
            violations == 0,
            inputs=[
                Input("group", exhaustive_name, "stated"),
                Input("pairs", checked),
                Input("violations", violations),
            ],
        )
    return rb.build()


def _exhaustive_pair_scan(group: PermutationGroup) -> tuple[int, int]:
    elements = group._materialized_elements(2**62)
    orders = [element_order(Permutation(e)) for e in elements]
    centralizers = [
        frozenset(h for h in elements if commute(h, e)) for e in elements
    ]
    index = {e: i for i, e in enumerate(elements)}
    group.class_partition()
    checked = 0
    violations = 0
    for i, x in enumerate(elements):
        if orders[i].value == 1:
            continue
        for y in centralizers[i]:
            j = index[y]
            if orders[j].value == 1:
                continue
            if (orders[i].primes() & orders[j].primes()):
                continue
            checked += 1
            xy = tuple(y[a] for a in x)
            k = index[xy]
            cx, cy, cxy = (
                group.class_size_of(Permutation(x)),
                group.class_size_of(Permutation(y)),
                group.class_size_of(Permutation(xy)),
            )
            if not lcm(cx, cy).divides(cxy):
                violations += 1
            elif cx.value * cy.value < cxy.value:
                violations += 1
            elif centralizers[k] != (centralizers[i] & centralizers[j]):
                violations += 1
    return checked, violations


def wreath_involution_report() -> LemmaReport:
    """wreath: |a^(H wr <a>)| = |H| for a sweep of base groups."""
    rb = ReportBuilder("wreath", "class size of the block-swapping involution")
    bases = [
        ("trivial", trivial(1)),
        ("S3", symmetric(3)),
        ("A5", alternating(5)),
        ("A6", alternating(6)),
        ("PGammaL(2,9)", pgammal_2_9().group),
    ]
    for name, h in bases:
        w = wreath_by_involution(h)
        size = w.group.conjugacy_class_of(w.swap).size
        rb.check(
            f"the swapping involution of {name} wr 2 has class size |{name}|",
            "|a^(H wr <a>)| == |H|",
            size.value == h.order.value,
            inputs=[
                Input("base group", name, "stated"),
                Input("|H|", h.order.value),
                Input("|a^W|", size.value),
            ],
        )
    return rb.build()


def _index_lemma_witness(
    group: PermutationGroup, x: Permutation, p: int, n: int
) -> Permutation | None:
    """Search C(x) for a p-element y != 1 with |y^G|_p <= p^(n-1), also
    requiring |(xy)^G|_p = |x^G|_p when x is a p'-element."""
    cap = p ** (n - 1)
    x_images = x.images
    x_size_p = group.class_size_of(x).p_part(p)
    x_is_p_prime = element_order(x).exponent_of(p) == 0
    for images in group._materialized_elements(2**62):
        if not commute(images, x_images):
            continue
        y = Permutation(images)
        if y.is_identity() or not is_p_element(y, p):
            continue
        if group.class_size_of(y).p_part(p).value > cap:
            continue
        if x_is_p_prime:
            if group.class_size_of(compose(x, y)).p_part(p) != x_size_p:
                continue
        return y
    return None


def index_lemma_report(
    cases: list[tuple[str, PermutationGroup]], primes: tuple[int, ...] = (2, 3, 5)
) -> LemmaReport:
    """index: small-p-part classes admit centralizing p-elements."""
    rb = ReportBuilder("index", "p-elements of smaller class-size p-part in centralizers")
    for name, group in cases:
        partition = group.class_partition()
        for p in primes:
            group_p = group.order.exponent_of(p)
            applicable = 0
            failures = []
            for cls in partition:
                n = cls.size.exponent_of(p)
                if n < 1 or n >= group_p:
                    continue
                applicable += 1
                witness = _index_lemma_witness(group, cls.representative, p, n)
                if witness is None:
                    failures.append(str(cls.representative))
            rb.check(
                f"in {name}, p={p}: every applicable class representative x "
                f"admits a p-element y in C(x), y != 1, with |y^G|_p <= "
                "|x^G|_p / p, and |(xy)^G|_p = |x^G|_p when x is a p'-element",
                "exists y in C_G(x): y a p-element, |y^G|_p <= p^(n-1)",
                not failures,
                inputs=[
                    Input("group", name, "stated"),
                    Input("p", p, "stated"),
                    Input("applicable classes", applicable),
                    Input("failures", failures),
                ],
            )
    return rb.build()


def coprime_action_report(max_dim: int = 3, p: int = 5) -> LemmaReport:
    """gor: fixed-plus-commutator decomposition for small cyclic actions."""
    rb = ReportBuilder("gor", "coprime action decomposition over F5")
    order3_actions = []
    for order in (2, 3):
        for dim in range(1, max_dim + 1):
            actions = cyclic_actions_of_order(p, dim, order)
            if order == 3:
                order3_actions.extend(actions)
            bad = sum(0 if check_decomposition(a) else 1 for a in actions)
            rb.check(
                f"every order-{order} matrix action on F{p}^{dim} splits into "
                "fixed vectors plus the commutator span",
                "fixed + commutator = whole space, intersection trivial, "
                "both factors invariant",
                bad == 0,
                inputs=[
                    Input("order", order, "stated"),
                    Input("dimension", dim, "stated"),
                    Input("matrices scanned", len(actions)),
                    Input("failures", bad),
                ],
            )
    odd = sum(
        0 if commutator_dimension_is_even(a) else 1 for a in order3_actions
    )
    rb.check(
        "the commutator span of every order-3 action over F5 has even "
        "dimension, so its size is an even power of 5",
        "dim [V, w] is even for every 3-element w",
        odd == 0,
        inputs=[
            Input("matrices scanned", len(order3_actions)),
            Input("odd dimensions", odd),
        ],
    )
    return rb.build()
