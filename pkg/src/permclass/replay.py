"""Step-by-step replays of the class-size deduction chains.

Each replay re-derives, over the computed 15-element class-size set N of
the rank-two product of the order-360 simple group, every divisibility,
lcm, and p-part assertion in one stage of the identification argument:

  5e     a 5-element of class size 72 and a 3-element of class size 40
  O5/O3/O2  no nontrivial normal p-subgroup for p = 5, 3, 2
  socle  the socle must be the rank-two product of the order-360 group
  final  the full group equals its socle

Group-theoretic existence steps that have no computational carrier
(normal subgroups of a hypothetical group, Sylow arguments) are recorded
as tagged external assumptions; every numeric step is recomputed.  Where
the original argument says "we can assume", the replay scans every
combination not already eliminated and confirms the others infeasible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement, product as iter_product
from threading import Lock

from .constructions import (
    LabeledExtensions,
    a6_extensions,
    alternating,
    direct_product,
    pgammal_2_9,
    symmetric,
    u4_2,
    wreath_by_involution,
)
from .factored import ClassSizeSet, FactoredNatural, factored, lcm, product_nset
from .group import PermutationGroup
from .report import Input, LemmaReport, ReportBuilder

# Order of the automorphism group of the order-25920 symplectic group:
# twice the group order.  Standard reference value, not derived here.
AUT_U42_ORDER = 51840


@dataclass
class ReplayContext:
    """Shared constructed groups and class-size sets for the replays."""

    _lock: Lock = field(default_factory=Lock, repr=False)

    @cached_property
    def a6(self) -> PermutationGroup:
        return alternating(6)

    @cached_property
    def a6xa6(self) -> PermutationGroup:
        return direct_product(self.a6, self.a6)

    @cached_property
    def n_a6(self) -> ClassSizeSet:
        return self.a6.class_sizes()

    @cached_property
    def n(self) -> ClassSizeSet:
        """N for the product group, via the product rule on computed N(A6)."""
        return product_nset(self.n_a6, self.n_a6)

    @cached_property
    def n_a5(self) -> ClassSizeSet:
        return alternating(5).class_sizes()

    @cached_property
    def n_u42(self) -> ClassSizeSet:
        return u4_2().class_sizes()

    @cached_property
    def extensions(self) -> LabeledExtensions:
        return a6_extensions()

    @cached_property
    def aut_orders(self) -> dict[str, int]:
        """Automorphism group orders of the three candidate simple factors."""
        return {
            "A5": symmetric(5).order.value,
            "A6": pgammal_2_9().group.order.value,
            "U4(2)": AUT_U42_ORDER,
        }

    def prepare(self) -> None:
        """Force the heavy shared artifacts once (thread-safe)."""
        with self._lock:
            self.n, self.n_a5, self.n_u42, self.extensions, self.a6xa6


def _values(members) -> list[int]:
    return [m.value for m in members]


def _n_input(ctx: ReplayContext) -> Input:
    return Input("N", list(ctx.n.values))


def _free_action_size_check(rb: ReportBuilder, q: int, r: int, step: int) -> None:
    """q^m = 1 mod r exactly when step divides m, for m up to 8.

    A fixed-point-free action of an order-r element on a group of size
    q^m forces r to divide q^m - 1; this pins m to multiples of `step`.
    """
    rows = [[m, (q**m - 1) % r] for m in range(9)]
    ok = all(((q**m - 1) % r == 0) == (m % step == 0) for m in range(9))
    rb.check(
        f"a fixed-point-free order-{r} action exists on a group of size q^m "
        f"over q = {q} only when {step} divides m",
        f"{r} divides {q}^m - 1 exactly when m is a multiple of {step}",
        ok,
        inputs=[Input("q", q, "stated"), Input("r", r, "stated"), Input("residues [m, (q^m-1) mod r]", rows)],
    )


def replay_5e(ctx: ReplayContext) -> LemmaReport:
    """Derive a 5-element of class size 72 and a 3-element of class size 40."""
    n = ctx.n
    rb = ReportBuilder("5e", "elements of class size 72 and 40 of prime order")
    rb.check(
        "72 is a class size",
        "72 in N",
        n.contains_value(72),
        inputs=[_n_input(ctx)],
    )
    divisors72 = [m.value for m in n.members if m.divides(factored(72))]
    rb.check(
        "the only class sizes dividing 72 are 1 and 72, so in a centerless "
        "group some prime-order power of a class-72 element again has class "
        "size 72",
        "{m in N : m | 72} == {1, 72}",
        divisors72 == [1, 72],
        inputs=[Input("divisors of 72 in N", divisors72)],
    )
    rb.assume(
        "if the class-72 element of prime order has order 2 or 3, a 3- or "
        "2-element y of its centralizer has class-size 3-part at most 3 "
        "(instance checks: see report 'index')"
    )
    low = lcm(factored(1600), factored(72))
    witnesses = n.multiples_in(low)
    rb.check(
        "a commuting coprime pair with class sizes 40^2 and 72 is impossible: "
        "the lcm has no multiple among the class sizes",
        "lcm(1600, 72) = 14400; multiples_in(14400, N) = ∅",
        low.value == 14400 and not witnesses,
        inputs=[
            Input("lcm(40^2, 72)", low.value),
            Input("multiples in N", _values(witnesses)),
        ],
    )
    small3 = _values(n.with_p_part_le(3, 3))
    rb.check(
        "class sizes with 3-part at most 3 are {1, 40, 1600}; dropping 1 "
        "(centerless) and the infeasible 1600 leaves class size 40 for y",
        "candidates_with_p_part_le(N, 3, 3) == {1, 40, 1600}",
        small3 == [1, 40, 1600],
        inputs=[Input("candidates", small3)],
    )
    rb.assume(
        "a 5-element z in the centralizer of y has class-size 5-part at "
        "most 1 (instance checks: see report 'index')"
    )
    small5 = _values(n.with_p_part_le(5, 1))
    rb.check(
        "class sizes with 5-part 1 are {1, 72, 5184}",
        "candidates_with_p_part_le(N, 5, 1) == {1, 72, 5184}",
        small5 == [1, 72, 5184],
        inputs=[Input("candidates", small5)],
    )
    low2 = lcm(factored(40), factored(5184))
    wit2 = n.multiples_in(low2)
    rb.check(
        "class size 72^2 for z is impossible next to y of class size 40: "
        "the lcm 72^2 * 5 has no multiple among the class sizes; hence the "
        "5-element z has class size 72",
        "lcm(40, 5184) = 25920; multiples_in(25920, N) = ∅",
        low2.value == 25920 and not wit2,
        inputs=[
            Input("lcm(40, 72^2)", low2.value),
            Input("multiples in N", _values(wit2)),
        ],
    )
    divisors40 = [m.value for m in n.members if m.divides(factored(40))]
    rb.check(
        "the only class sizes dividing 40 are 1 and 40, so a prime-order "
        "element of class size 40 exists; the same pruning as above makes "
        "it a 3-element",
        "{m in N : m | 40} == {1, 40}",
        divisors40 == [1, 40],
        inputs=[Input("divisors of 40 in N", divisors40)],
    )
    return rb.build()


def _candidate_filter(
    n: ClassSizeSet,
    multiple_of: FactoredNatural,
    p_part_exact: tuple[int, int] | None = None,
    at_most: int | None = None,
) -> list[int]:
    out = []
    for m in n.multiples_in(multiple_of):
        if p_part_exact is not None:
            p, target = p_part_exact
            if m.p_part(p).value != target:
                continue
        if at_most is not None and m.value > at_most:
            continue
        out.append(m.value)
    return out


def _eliminate_by_lcm(
    rb: ReportBuilder,
    n: ClassSizeSet,
    keep: list[int],
    drop: list[int],
    partner: int,
    who: str,
) -> None:
    """Check that every candidate in `drop` pairs infeasibly with `partner`."""
    lcms = []
    ok = True
    for c in drop:
        low = lcm(factored(partner), factored(c))
        wits = n.multiples_in(low)
        lcms.append([c, low.value, _values(wits)])
        if wits:
            ok = False
    rb.check(
        f"candidates {drop} for {who} are infeasible next to class size "
        f"{partner}: no class size is a multiple of the pairwise lcm; "
        f"{keep} remain",
        "multiples_in(lcm(partner, c), N) = ∅ for each eliminated c",
        ok,
        inputs=[
            Input("partner class size", partner),
            Input("[candidate, lcm, multiples]", lcms),
        ],
    )


def replay_O5(ctx: ReplayContext) -> LemmaReport:
    """No nontrivial normal 5-subgroup is compatible with N."""
    n = ctx.n
    rb = ReportBuilder("O5", "no nontrivial normal 5-subgroup")
    rb.assume(
        "toward a contradiction, V is a nontrivial normal abelian 5-subgroup "
        "(no computational carrier for the hypothetical group)"
    )
    rb.assume(
        "w is a 3-element with class size 40 (from replay '5e'); the coprime "
        "action of w on V splits V into fixed vectors times commutators "
        "(instance checks: see report 'gor')"
    )
    _free_action_size_check(rb, 5, 3, 2)
    rb.check(
        "the commutator part [V,w] has size 5^(2k) and divides the 5-part "
        "of |w^G| = 40, which is 5; so k = 0 and w centralizes V",
        "5^(2k) divides 5 only for k = 0",
        factored(40).p_part(5).value == 5 and 25 > 5,
        inputs=[Input("|w^G|_5", factored(40).p_part(5).value)],
    )
    rb.assume(
        "some nontrivial y in V meets the center of a Sylow 5-subgroup, so "
        "|y^G|_5 = 1 (Sylow argument, no computational carrier)"
    )
    small5 = _values(n.with_p_part_le(5, 1))
    rb.check(
        "candidates for |y^G| with 5-part 1 are {72, 5184} after dropping 1",
        "candidates_with_p_part_le(N, 5, 1) \\ {1} == {72, 5184}",
        small5 == [1, 72, 5184],
        inputs=[Input("candidates", small5)],
    )
    _eliminate_by_lcm(rb, n, [72], [5184], 40, "|y^G|")
    rb.assume(
        "a 2-element z in the centralizer of y has class-size 2-part at "
        "most 4 (instance checks: see report 'index')"
    )
    small2 = _values(n.with_p_part_le(2, 4))
    rb.check(
        "candidates for |z^G| with 2-part at most 4 are "
        "{45, 90, 2025, 4050, 8100} after dropping 1",
        "candidates_with_p_part_le(N, 2, 4) \\ {1} == {45, 90, 2025, 4050, 8100}",
        small2 == [1, 45, 90, 2025, 4050, 8100],
        inputs=[Input("candidates", small2)],
    )
    _eliminate_by_lcm(rb, n, [45, 90], [2025, 4050, 8100], 72, "|z^G|")
    yz = _candidate_filter(n, factored(360), p_part_exact=(2, 8))
    rb.check(
        "|(yz)^G| is a multiple of lcm(72, |z^G|) = 360 with 2-part equal "
        "to |y^G|_2 = 8 (y is a 2'-element), leaving {1800, 3240}",
        "multiples of 360 in N with 2-part 8 == {1800, 3240}",
        yz == [1800, 3240],
        inputs=[Input("candidates", yz), Input("required 2-part", 8)],
    )
    rb.assume(
        "a 3-element x in the centralizer of z has class-size 3-part at "
        "most 3; moreover |(xz)^G|_3 = |z^G|_3 since z is a 3'-element "
        "(instance checks: see report 'index')"
    )
    _eliminate_by_lcm(rb, n, [40], [1600], 45, "|x^G| (partner 45)")
    _eliminate_by_lcm(rb, n, [40], [1600], 90, "|x^G| (partner 90)")
    xz = _candidate_filter(n, factored(360), p_part_exact=(3, 9))
    rb.check(
        "|(xz)^G| is a multiple of lcm(40, |z^G|) = 360 with 3-part equal "
        "to |z^G|_3 = 9, leaving {1800, 2880, 3600}",
        "multiples of 360 in N with 3-part 9 == {1800, 2880, 3600}",
        xz == [1800, 2880, 3600],
        inputs=[Input("candidates", xz), Input("required 3-part", 9)],
    )
    rb.assume(
        "x centralizes V by the same splitting argument as w, so x "
        "commutes with y"
    )
    xy = _candidate_filter(n, factored(360), at_most=40 * 72)
    rb.check(
        "|(xy)^G| is a multiple of lcm(40, 72) = 360 and at most 40*72, "
        "leaving {1800, 2880}",
        "multiples of 360 in N at most 2880 == {1800, 2880}",
        xy == [1800, 2880],
        inputs=[Input("candidates", xy), Input("cap", 2880)],
    )
    feasible = []
    infeasible = []
    for cxy, cxz, cyz in iter_product(xy, xz, yz):
        ok, wits = n.coprime_triple_feasible(
            factored(cxy), factored(cxz), factored(cyz)
        )
        (feasible if ok else infeasible).append([cxy, cxz, cyz, _values(wits)])
    rb.check(
        "scanning every combination: the triple product class size must be "
        "a common multiple of the three pairwise class sizes; only "
        "(xy, xz, yz) = (1800, 1800, 1800) and (1800, 3600, 1800) survive",
        "coprime_triple_feasible over all combinations",
        [row[:3] for row in feasible] == [[1800, 1800, 1800], [1800, 3600, 1800]],
        inputs=[
            Input("combinations", len(xy) * len(xz) * len(yz)),
            Input("feasible [xy, xz, yz, witnesses]", feasible),
            Input("infeasible count", len(infeasible)),
        ],
    )
    rb.assume(
        "u is a nontrivial element of V central in a Sylow 5-subgroup "
        "containing a Sylow 5-subgroup of C(x); then |u^G| = 72 as for y, "
        "u commutes with x and z, and |(xu)^G|_5 = |x^G|_5 = 5"
    )
    xu = _candidate_filter(n, factored(360), p_part_exact=(5, 5), at_most=40 * 72)
    rb.check(
        "|(xu)^G| is a multiple of 360, at most 40*72, with 5-part 5: "
        "forced to 2880",
        "multiples of 360 in N at most 2880 with 5-part 5 == {2880}",
        xu == [2880],
        inputs=[Input("candidates", xu)],
    )
    closing = []
    ok = True
    for cxz in [1800, 3600]:
        low = lcm(factored(2880), factored(cxz))
        wits = n.multiples_in(low)
        closing.append([cxz, low.value, _values(wits)])
        if low.value != 14400 or wits:
            ok = False
    rb.check(
        "closing contradiction: |(xuz)^G| would be a multiple of "
        "lcm(|(xu)^G|, |(xz)^G|) = 14400 = 2^6*3^2*5^2, but "
        "multiples_in(14400, N) = ∅",
        "lcm(2880, xz) = 14400 and multiples_in(14400, N) = ∅ "
        "for both surviving xz",
        ok,
        inputs=[Input("[xz, lcm, multiples]", closing), _n_input(ctx)],
    )
    return rb.build()


def replay_O3(ctx: ReplayContext) -> LemmaReport:
    """No nontrivial normal 3-subgroup is compatible with N."""
    n = ctx.n
    rb = ReportBuilder("O3", "no nontrivial normal 3-subgroup")
    rb.assume(
        "toward a contradiction, V is a nontrivial normal abelian 3-subgroup"
    )
    rb.assume(
        "w is a 5-element with class size 72 (from replay '5e'), acting "
        "coprimely on V"
    )
    _free_action_size_check(rb, 3, 5, 4)
    rb.check(
        "the commutator part [V,w] has size 3^(4k) and divides the 3-part "
        "of |w^G| = 72, which is 9; so k = 0 and w centralizes V",
        "3^(4k) divides 9 only for k = 0",
        factored(72).p_part(3).value == 9 and 3**4 > 9,
        inputs=[Input("|w^G|_3", factored(72).p_part(3).value)],
    )
    rb.assume(
        "some nontrivial y in V meets the center of a Sylow 3-subgroup, "
        "so |y^G|_3 = 1"
    )
    small3 = _values(n.with_p_part_le(3, 1))
    rb.check(
        "candidates for |y^G| with 3-part 1 are {40, 1600} after dropping 1",
        "candidates_with_p_part_le(N, 3, 1) \\ {1} == {40, 1600}",
        small3 == [1, 40, 1600],
        inputs=[Input("candidates", small3)],
    )
    _eliminate_by_lcm(rb, n, [40], [1600], 72, "|y^G|")
    rb.assume(
        "a 2-element z in the centralizer of y has class-size 2-part at "
        "most 4; |(yz)^G|_2 = |y^G|_2 = 8 since y is a 2'-element"
    )
    small2 = _values(n.with_p_part_le(2, 4))
    rb.check(
        "candidates for |z^G| with 2-part at most 4 are "
        "{45, 90, 2025, 4050, 8100} after dropping 1",
        "candidates_with_p_part_le(N, 2, 4) \\ {1} == {45, 90, 2025, 4050, 8100}",
        small2 == [1, 45, 90, 2025, 4050, 8100],
        inputs=[Input("candidates", small2)],
    )
    _eliminate_by_lcm(rb, n, [45, 90], [2025, 4050, 8100], 40, "|z^G|")
    yz = _candidate_filter(n, factored(360), p_part_exact=(2, 8))
    rb.check(
        "|(yz)^G| is a multiple of lcm(40, |z^G|) = 360 with 2-part 8, "
        "leaving {1800, 3240}",
        "multiples of 360 in N with 2-part 8 == {1800, 3240}",
        yz == [1800, 3240],
        inputs=[Input("candidates", yz)],
    )
    rb.assume(
        "a 5-element x in the centralizer of z has class-size 5-part at "
        "most 1; |(xz)^G|_5 = |z^G|_5 = 5 since z is a 5'-element"
    )
    small5 = _values(n.with_p_part_le(5, 1))
    rb.check(
        "candidates for |x^G| with 5-part 1 are {72, 5184} after dropping 1",
        "candidates_with_p_part_le(N, 5, 1) \\ {1} == {72, 5184}",
        small5 == [1, 72, 5184],
        inputs=[Input("candidates", small5)],
    )
    _eliminate_by_lcm(rb, n, [72], [5184], 45, "|x^G| (partner 45)")
    _eliminate_by_lcm(rb, n, [72], [5184], 90, "|x^G| (partner 90)")
    xz = _candidate_filter(n, factored(360), p_part_exact=(5, 5))
    rb.check(
        "|(xz)^G| is a multiple of lcm(72, |z^G|) = 360 with 5-part 5, "
        "leaving {2880, 3240, 6480}",
        "multiples of 360 in N with 5-part 5 == {2880, 3240, 6480}",
        xz == [2880, 3240, 6480],
        inputs=[Input("candidates", xz)],
    )
    rb.assume("x centralizes V as w does, so x commutes with y")
    xy = _candidate_filter(n, factored(360), at_most=40 * 72)
    rb.check(
        "|(xy)^G| is a multiple of lcm(72, 40) = 360 and at most 40*72, "
        "leaving {1800, 2880}",
        "multiples of 360 in N at most 2880 == {1800, 2880}",
        xy == [1800, 2880],
        inputs=[Input("candidates", xy)],
    )
    rows = []
    feasible_count = 0
    for cxy, cxz, cyz in iter_product(xy, xz, yz):
        ok, wits = n.coprime_triple_feasible(
            factored(cxy), factored(cxz), factored(cyz)
        )
        rows.append([cxy, cxz, cyz, _values(wits)])
        if ok:
            feasible_count += 1
    rb.check(
        "closing contradiction: the triple product class size would be a "
        "common multiple of the three pairwise class sizes, but every "
        "combination is infeasible",
        "coprime_triple_feasible over all combinations: zero feasible",
        feasible_count == 0,
        inputs=[
            Input("combinations", len(rows)),
            Input("feasible count", feasible_count),
            Input("[xy, xz, yz, witnesses]", rows),
        ],
    )
    return rb.build()


def replay_O2(ctx: ReplayContext) -> LemmaReport:
    """No nontrivial normal 2-subgroup is compatible with N."""
    n = ctx.n
    rb = ReportBuilder("O2", "no nontrivial normal 2-subgroup")
    rb.assume(
        "toward a contradiction, V is a nontrivial normal abelian 2-subgroup"
    )
    rb.assume(
        "w is a 5-element with class size 72 (from replay '5e'), acting "
        "coprimely on V"
    )
    _free_action_size_check(rb, 2, 5, 4)
    rb.check(
        "the commutator part [V,w] has size 2^(4k) and divides the 2-part "
        "of |w^G| = 72, which is 8; so k = 0 and w centralizes V",
        "2^(4k) divides 8 only for k = 0",
        factored(72).p_part(2).value == 8 and 2**4 > 8,
        inputs=[Input("|w^G|_2", factored(72).p_part(2).value)],
    )
    rb.assume(
        "some nontrivial y in V meets the center of a Sylow 2-subgroup, "
        "so |y^G|_2 = 1"
    )
    small2 = _values(n.with_p_part_le(2, 1))
    rb.check(
        "candidates for |y^G| with 2-part 1 are {45, 2025} after dropping 1",
        "candidates_with_p_part_le(N, 2, 1) \\ {1} == {45, 2025}",
        small2 == [1, 45, 2025],
        inputs=[Input("candidates", small2)],
    )
    _eliminate_by_lcm(rb, n, [45], [2025], 72, "|y^G|")
    rb.assume(
        "a 3-element z in the centralizer of y has class-size 3-part at "
        "most 3"
    )
    small3 = _values(n.with_p_part_le(3, 3))
    rb.check(
        "candidates for |z^G| with 3-part at most 3 are {40, 1600} after "
        "dropping 1",
        "candidates_with_p_part_le(N, 3, 3) \\ {1} == {40, 1600}",
        small3 == [1, 40, 1600],
        inputs=[Input("candidates", small3)],
    )
    _eliminate_by_lcm(rb, n, [40], [1600], 45, "|z^G|")
    yz = _candidate_filter(n, factored(360), at_most=40 * 45)
    rb.check(
        "|(yz)^G| is a multiple of lcm(45, 40) = 360 and at most 40*45 = "
        "1800: forced to 1800",
        "multiples of 360 in N at most 1800 == {1800}",
        yz == [1800],
        inputs=[Input("candidates", yz)],
    )
    rb.assume(
        "a 5-element x in the centralizer of z has class-size 5-part 1; "
        "|(xz)^G|_5 = |z^G|_5 = 5 since z is a 5'-element"
    )
    small5 = _values(n.with_p_part_le(5, 1))
    rb.check(
        "candidates for |x^G| with 5-part 1 are {72, 5184} after dropping 1",
        "candidates_with_p_part_le(N, 5, 1) \\ {1} == {72, 5184}",
        small5 == [1, 72, 5184],
        inputs=[Input("candidates", small5)],
    )
    _eliminate_by_lcm(rb, n, [72], [5184], 40, "|x^G|")
    xz = _candidate_filter(n, factored(360), p_part_exact=(5, 5), at_most=40 * 72)
    rb.check(
        "|(xz)^G| is a multiple of lcm(72, 40) = 360, at most 40*72, with "
        "5-part 5: forced to 2880",
        "multiples of 360 in N at most 2880 with 5-part 5 == {2880}",
        xz == [2880],
        inputs=[Input("candidates", xz)],
    )
    low = lcm(factored(2880), factored(1800))
    wits = n.multiples_in(low)
    rb.check(
        "closing contradiction: |(xyz)^G| would be a multiple of "
        "lcm(|(xz)^G|, |(yz)^G|) = lcm(2880, 1800) = 14400 = 40*72*5, but "
        "multiples_in(14400, N) = ∅",
        "lcm(2880, 1800) == 14400 and multiples_in(14400, N) = ∅",
        low.value == 14400 and not wits,
        inputs=[
            Input("lcm", low.value),
            Input("multiples in N", _values(wits)),
            _n_input(ctx),
        ],
    )
    return rb.build()


# -- socle scan ---------------------------------------------------------------


@dataclass(frozen=True)
class SocleCandidate:
    factors: tuple[str, ...]
    verdict: str  # "eliminated" | "survives"
    rule: str
    detail: str


def _aut_order(ctx: ReplayContext, factors: tuple[str, ...]) -> int:
    from math import factorial

    order = 1
    for name in set(factors):
        count = factors.count(name)
        order *= ctx.aut_orders[name] ** count * factorial(count)
    return order


def socle_scan(ctx: ReplayContext, kmax: int = 3) -> list[SocleCandidate]:
    """Scan all socle candidates with at most kmax simple factors.

    Factors range over the three simple groups whose orders only involve
    the primes 2, 3 and 5 relevant here.  Elimination rules mirror the
    identification argument: automorphism-group p-parts for k = 1 and the
    non-product pairs, class-size 5-parts for k >= 3, and product class
    sizes dividing nothing for pairs containing the order-25920 group.
    """
    n = ctx.n
    nsets = {"A5": ctx.n_a5, "A6": ctx.n_a6, "U4(2)": ctx.n_u42}
    min_order = n.min_group_order()
    out: list[SocleCandidate] = []
    for k in range(1, kmax + 1):
        for factors in combinations_with_replacement(("A5", "A6", "U4(2)"), k):
            if k == 1:
                need = min_order.p_part(5).value
                have = factored(_aut_order(ctx, factors)).p_part(5).value
                if need > have:
                    out.append(
                        SocleCandidate(
                            factors,
                            "eliminated",
                            "aut-5-part",
                            f"group order must have 5-part {need} but the "
                            f"automorphism group only has 5-part {have}",
                        )
                    )
                    continue
                out.append(SocleCandidate(factors, "survives", "", ""))
                continue
            if k >= 3:
                witness = [
                    next(
                        m.value
                        for m in nsets[name]
                        if m.p_part(5).value == 5
                    )
                    for name in factors
                ]
                prod = factored(1)
                for w in witness:
                    prod = prod * factored(w)
                cap = n.max_p_part(5).value
                if prod.p_part(5).value > cap:
                    out.append(
                        SocleCandidate(
                            factors,
                            "eliminated",
                            "5-part",
                            f"product class size {prod.value} has 5-part "
                            f"{prod.p_part(5).value} > {cap}",
                        )
                    )
                    continue
                out.append(SocleCandidate(factors, "survives", "", ""))
                continue
            # k == 2
            prod_set = product_nset(nsets[factors[0]], nsets[factors[1]])
            non_dividing = [
                m.value for m in prod_set.members if not n.divides_some(m)
            ]
            if non_dividing:
                worst = max(
                    prod_set.members, key=lambda m: m.p_part(2).value
                )
                out.append(
                    SocleCandidate(
                        factors,
                        "eliminated",
                        "class-divisibility",
                        f"{len(non_dividing)} product class sizes divide no "
                        f"class size; e.g. {non_dividing[0]}; max 2-part "
                        f"reaches {worst.p_part(2).value}",
                    )
                )
                continue
            need = min_order.p_part(3).value
            have = factored(_aut_order(ctx, factors)).p_part(3).value
            if need > have:
                out.append(
                    SocleCandidate(
                        factors,
                        "eliminated",
                        "aut-3-part",
                        f"group order must have 3-part {need} but the "
                        f"automorphism group only has 3-part {have}",
                    )
                )
                continue
            out.append(SocleCandidate(factors, "survives", "", ""))
    return out


def replay_socle(ctx: ReplayContext, kmax: int = 3) -> LemmaReport:
    """The socle must be the rank-two product of the order-360 group."""
    n = ctx.n
    rb = ReportBuilder("socle", "socle identification over products of simple groups")
    rb.assume(
        "the prime divisors of |G| are {2, 3, 5} (external classification "
        "result, recorded as an assumption)"
    )
    rb.check(
        "the class sizes only involve the primes {2, 3, 5}",
        "pi(N) == {2, 3, 5}",
        n.primes() == frozenset({2, 3, 5}),
        inputs=[Input("primes", sorted(n.primes()))],
    )
    rb.assume(
        "with every O_p trivial (replays O5, O3, O2), the socle is a direct "
        "product of nonabelian simple groups, each with prime divisors "
        "inside {2, 3, 5}; the candidate factors are the three such simple "
        "groups (external classification result)"
    )
    rb.check(
        "computed class-size sets of the candidate factors",
        "N(A5), N(A6), N(U4(2)) computed by full enumeration",
        ctx.n_a5.values == (1, 12, 15, 20) and ctx.n_a6.values == (1, 40, 45, 72, 90),
        inputs=[
            Input("N(A5)", list(ctx.n_a5.values)),
            Input("N(A6)", list(ctx.n_a6.values)),
            Input("N(U4(2))", list(ctx.n_u42.values)),
        ],
    )
    rb.check(
        "automorphism group orders of the factors: 120 and 1440 from the "
        "constructed groups, 51840 as a reference constant",
        "|Aut| orders",
        ctx.aut_orders["A5"] == 120 and ctx.aut_orders["A6"] == 1440,
        inputs=[
            Input("|Aut(A5)|", ctx.aut_orders["A5"]),
            Input("|Aut(A6)|", ctx.aut_orders["A6"]),
            Input("|Aut(U4(2))|", AUT_U42_ORDER, "external-assumption"),
        ],
    )
    rb.check(
        "every class size divides the group order, so the group order is a "
        "multiple of the lcm of all class sizes",
        "min_group_order(N) == 129600 = 2^6*3^4*5^2",
        n.min_group_order().value == 129600,
        inputs=[Input("lcm of N", n.min_group_order().value)],
    )
    candidates = socle_scan(ctx, kmax)
    survivors = [" x ".join(c.factors) for c in candidates if c.verdict == "survives"]
    rows = [
        [" x ".join(c.factors), c.verdict, c.rule, c.detail] for c in candidates
    ]
    rb.check(
        f"scan of all {len(candidates)} candidate socles with at most "
        f"{kmax} factors leaves exactly the rank-two product of A6",
        "survivors == ['A6 x A6']",
        survivors == ["A6 x A6"],
        inputs=[
            Input("kmax", kmax, "stated"),
            Input("candidates [factors, verdict, rule, detail]", rows),
            Input("survivors", survivors),
        ],
    )
    return rb.build()


def replay_final(ctx: ReplayContext) -> LemmaReport:
    """The full group cannot exceed its socle."""
    n = ctx.n
    rb = ReportBuilder("final", "the group equals its socle")
    rb.assume(
        "the group sits between the socle A6 x A6 and its automorphism "
        "group, which is the wreath extension of Aut(A6) by the factor "
        "swap (standard fact, used without verification)"
    )
    # case (a): the factor swap cannot be present
    cases = [
        ("A6", ctx.a6),
        ("S6", ctx.extensions.groups["S6"]),
        ("PGL(2,9)", ctx.extensions.groups["PGL(2,9)"]),
        ("M10", ctx.extensions.groups["M10"]),
        ("PGammaL(2,9)", pgammal_2_9().group),
    ]
    for name, h in cases:
        w = wreath_by_involution(h)
        size = w.group.conjugacy_class_of(w.swap).size
        rb.check(
            f"if the swap is present above H = {name}, it has class size "
            f"|H| = {h.order.value}, which is not a class size of N",
            "|a^(H wr <a>)| == |H| and |H| not in N",
            size.value == h.order.value and not n.contains_value(h.order.value),
            inputs=[
                Input("H", name, "stated"),
                Input("|H|", h.order.value),
                Input("|a^W| computed", size.value),
                Input("|H| in N", n.contains_value(h.order.value)),
            ],
        )
    # case (b): no diagonal-free extension of the socle either
    socle_of = pgammal_2_9().socle
    witness_2parts: dict[str, int] = {}
    for label in LabeledExtensions.LABELS:
        t = ctx.extensions.groups[label]
        best = None
        for cls in t.class_partition():
            rep = cls.representative
            if not socle_of.contains(rep):
                continue
            part = cls.size.p_part(2).value
            if part > 8 and (best is None or part > best[1]):
                collapse = 2 * socle_of.class_size_of(rep).value == cls.size.value
                best = (cls.size.value, part, collapse)
        ok = best is not None and best[2]
        witness_2parts[label] = best[1] if best else 0
        rb.check(
            f"in the degree-2 extension {label}, some socle element has "
            "class-size 2-part above 8, and its centralizer already lies "
            "in the socle (class size doubles from socle to extension)",
            "exists x in socle: |x^T|_2 > 2^3 and |x^T| == 2 |x^socle|",
            ok,
            inputs=[
                Input("extension", label, "stated"),
                Input("witness class size", best[0] if best else None),
                Input("witness 2-part", best[1] if best else None),
                Input("centralizer stays in socle", best[2] if best else None),
            ],
        )
    a6_best = max(
        (c.size.p_part(2).value for c in ctx.a6.class_partition()), default=0
    )
    rb.check(
        "the socle factor itself has classes with 2-part 8",
        "max 2-part over N(A6) == 8",
        a6_best == 8,
        inputs=[Input("max 2-part", a6_best)],
    )
    cap = n.max_p_part(2).value
    combos = []
    ok = True
    second = dict(witness_2parts)
    second["A6"] = a6_best
    for left in LabeledExtensions.LABELS:
        for right in list(LabeledExtensions.LABELS) + ["A6"]:
            prod = witness_2parts[left] * second[right]
            combos.append([left, right, prod])
            if prod <= cap:
                ok = False
    rb.check(
        "if the group properly contained the socle without the swap, some "
        "component pair would give an element whose class-size 2-part "
        "exceeds the maximum 2-part 64 of N: true for every pairing",
        "witness-2-part(T1) * witness-2-part(T2) > 64 for all pairings",
        ok and cap == 64,
        inputs=[
            Input("max 2-part of N", cap),
            Input("pairings [T1, T2, product]", combos),
        ],
    )
    return rb.build()
