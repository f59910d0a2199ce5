"""Permutation group engine.

A PermutationGroup carries a deterministic base and strong generating
set: base points are chosen as the first point moved, orbits are grown
breadth-first with generators applied in list order, and new strong
generators are inserted bottom-up.  Identical generator lists therefore
produce identical bases, identical orders and an identical element
enumeration, which downstream reports rely on for byte-stable output.

Element enumeration order is depth-major over the transversal
decomposition: the digit at base depth 0 is the most significant, and
`element_index` assigns each element its position in that order.  The
class partition uses one visited flag per element keyed by that index.
"""

from __future__ import annotations

import random
from array import array
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import CosetIndexBoundError, EnumerationBoundError, GroupError, MembershipError
from .factored import ClassSizeSet, FactoredNatural, factored
from .permutation import (
    Permutation,
    commute,
    compose_images,
    conjugate_images,
    element_order,
    identity_images,
    inverse_images,
)

DEFAULT_ENUMERATION_BOUND = 5_000_000
DEFAULT_COSET_INDEX_BOUND = 10_000

# Full element tabulation (coset actions, centralizer filters) is only
# attempted below this many elements; plenty for every group built here.
_MATERIALIZE_BOUND = 1_000_000


class _Level:
    """One level of the stabilizer chain."""

    __slots__ = (
        "point",
        "gens",
        "transversal",
        "inv_transversal",
        "orbit_list",
        "position",
        "_degree",
    )

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[tuple[int, ...]] = []
        self.transversal: dict[int, tuple[int, ...]] = {}
        self.inv_transversal: dict[int, tuple[int, ...]] = {}
        self.orbit_list: list[int] = []
        self.position: dict[int, int] = {}
        self._degree = degree

    def rebuild_orbit(self) -> None:
        ident = identity_images(self._degree)
        self.transversal = {self.point: ident}
        self.inv_transversal = {self.point: ident}
        self.orbit_list = [self.point]
        self.position = {self.point: 0}
        frontier = [self.point]
        while frontier:
            next_frontier = []
            for beta in frontier:
                u = self.transversal[beta]
                for g in self.gens:
                    delta = g[beta]
                    if delta not in self.transversal:
                        v = compose_images(u, g)
                        self.transversal[delta] = v
                        self.inv_transversal[delta] = inverse_images(v)
                        self.position[delta] = len(self.orbit_list)
                        self.orbit_list.append(delta)
                        next_frontier.append(delta)
            frontier = next_frontier


def _first_moved(images: tuple[int, ...]) -> int:
    for i, j in enumerate(images):
        if i != j:
            return i
    raise AssertionError("identity has no moved point")


class PermutationGroup:
    """A permutation group given by generators, with BSGS structure."""

    def __init__(self, generators: Iterable[Permutation]):
        gens = tuple(generators)
        if not gens:
            raise GroupError("generator list must be nonempty")
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise GroupError(f"generator degrees differ: {g.degree} vs {degree}")
        self.generators = gens
        self.degree = degree
        self._gen_images = tuple(g.images for g in gens if not g.is_identity())
        self._levels: list[_Level] = []
        self._build_chain()
        self._verify_chain()
        self._order: FactoredNatural | None = None
        self._elements_cache: list[tuple[int, ...]] | None = None
        self._partition: tuple[ConjugacyClass, ...] | None = None
        self._class_ids: array | None = None

    # -- chain construction ------------------------------------------------

    def _build_chain(self) -> None:
        ident = identity_images(self.degree)
        levels = self._levels
        for g in self._gen_images:
            if all(g[lv.point] == lv.point for lv in levels):
                levels.append(_Level(_first_moved(g), self.degree))
        for i, level in enumerate(levels):
            points = [lv.point for lv in levels[:i]]
            level.gens = [g for g in self._gen_images if all(g[b] == b for b in points)]
            level.rebuild_orbit()

        i = len(levels) - 1
        while i >= 0:
            level = levels[i]
            dirty = False
            for beta in level.orbit_list:
                u = level.transversal[beta]
                for g in level.gens:
                    delta = g[beta]
                    schreier = compose_images(
                        compose_images(u, g), level.inv_transversal[delta]
                    )
                    if schreier == ident:
                        continue
                    residue, j = self._strip(schreier, i + 1)
                    if residue == ident:
                        continue
                    if j == len(levels):
                        levels.append(_Level(_first_moved(residue), self.degree))
                    for l in range(i + 1, j + 1):
                        levels[l].gens.append(residue)
                        levels[l].rebuild_orbit()
                    i = j
                    dirty = True
                    break
                if dirty:
                    break
            if not dirty:
                i -= 1

    def _strip(self, images: tuple[int, ...], start: int = 0) -> tuple[tuple[int, ...], int]:
        p = images
        for i in range(start, len(self._levels)):
            level = self._levels[i]
            beta = p[level.point]
            inv_u = level.inv_transversal.get(beta)
            if inv_u is None:
                return p, i
            p = compose_images(p, inv_u)
        return p, len(self._levels)

    def _verify_chain(self) -> None:
        ident = identity_images(self.degree)
        for g in self._gen_images:
            residue, _ = self._strip(g)
            if residue != ident:
                raise GroupError("chain verification failed on a generator")
        if self._gen_images:
            rng = random.Random(0)
            for _ in range(8):
                w = ident
                for _ in range(6):
                    w = compose_images(w, rng.choice(self._gen_images))
                residue, _ = self._strip(w)
                if residue != ident:
                    raise GroupError("chain verification failed on a random product")

    # -- basic structure -----------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.point for level in self._levels)

    @property
    def order(self) -> FactoredNatural:
        if self._order is None:
            self._order = reduce(
                lambda a, b: a * b,
                (factored(len(level.orbit_list)) for level in self._levels),
                factored(1),
            )
        return self._order

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise GroupError(f"degree mismatch: {p.degree} vs {self.degree}")
        return self._contains_images(p.images)

    def _contains_images(self, images: tuple[int, ...]) -> bool:
        residue, _ = self._strip(images)
        return residue == identity_images(self.degree)

    def element_index(self, p: Permutation) -> int:
        """Position of p in the deterministic enumeration order."""
        return self._index_of(p.images)

    def _index_of(self, images: tuple[int, ...]) -> int:
        idx = 0
        p = images
        for level in self._levels:
            beta = p[level.point]
            pos = level.position.get(beta)
            if pos is None:
                raise MembershipError("element is not in the group")
            idx = idx * len(level.orbit_list) + pos
            p = compose_images(p, level.inv_transversal[beta])
        if p != identity_images(self.degree):
            raise MembershipError("element is not in the group")
        return idx

    # -- enumeration ---------------------------------------------------------

    def _iter_element_images(self) -> Iterator[tuple[int, ...]]:
        """All elements as image tuples, in element_index order."""
        levels = self._levels
        if not levels:
            yield identity_images(self.degree)
            return
        transversals = [
            [level.transversal[beta] for beta in level.orbit_list] for level in levels
        ]
        m = len(levels)
        digits = [0] * m
        # partial[i] = transversal part of levels < i applied last;
        # element = deepest transversal rep composed with partial[m-1].
        partial: list[tuple[int, ...] | None] = [None] * m
        partial[0] = identity_images(self.degree)
        for i in range(1, m):
            partial[i] = compose_images(transversals[i - 1][0], partial[i - 1])
        while True:
            tail = partial[m - 1]
            for u in transversals[m - 1]:
                yield compose_images(u, tail)
            i = m - 2
            while i >= 0 and digits[i] == len(transversals[i]) - 1:
                digits[i] = 0
                i -= 1
            if i < 0:
                return
            digits[i] += 1
            for j in range(i, m - 1):
                partial[j + 1] = compose_images(transversals[j][digits[j]], partial[j])

    def elements(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[Permutation]:
        """Stream every element exactly once, in deterministic order."""
        if self.order.value > bound:
            raise EnumerationBoundError(self.order.value, bound)
        return (Permutation(images) for images in self._iter_element_images())

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniform random element: one transversal pick per base point."""
        images = identity_images(self.degree)
        for level in self._levels:
            beta = level.orbit_list[rng.randrange(len(level.orbit_list))]
            # deeper picks apply first, the level-0 pick last
            images = compose_images(level.transversal[beta], images)
        return Permutation(images)

    def _materialized_elements(self, bound: int) -> list[tuple[int, ...]]:
        if self.order.value > bound:
            raise EnumerationBoundError(self.order.value, bound)
        if self.order.value > _MATERIALIZE_BOUND:
            raise EnumerationBoundError(self.order.value, _MATERIALIZE_BOUND, "tabulation")
        if self._elements_cache is None:
            self._elements_cache = list(self._iter_element_images())
        return self._elements_cache

    # -- conjugacy classes -----------------------------------------------------

    def conjugacy_class_of(self, x: Permutation) -> "ConjugacyClass":
        """Conjugation orbit of x under the generators, breadth-first."""
        if not self.contains(x):
            raise MembershipError("class representative must lie in the group")
        pairs = [(g, inverse_images(g)) for g in self._gen_images]
        start = x.images
        seen = {start}
        queue = [start]
        least = start
        while queue:
            next_queue = []
            for y in queue:
                for g, g_inv in pairs:
                    z = conjugate_images(y, g, g_inv)
                    if z not in seen:
                        seen.add(z)
                        next_queue.append(z)
                        if z < least:
                            least = z
            queue = next_queue
        return ConjugacyClass(Permutation(least), factored(len(seen)))

    def class_partition(
        self, bound: int = DEFAULT_ENUMERATION_BOUND
    ) -> tuple["ConjugacyClass", ...]:
        """Partition all elements into conjugation orbits.

        Deterministic: elements are visited in enumeration order and each
        unvisited one seeds a breadth-first conjugation orbit.  The global
        visited table is one flag per element keyed by element_index.
        """
        if self._partition is not None:
            return self._partition
        n = self.order.value
        if n > bound:
            raise EnumerationBoundError(n, bound)
        pairs = [(g, inverse_images(g)) for g in self._gen_images]
        visited = bytearray(n)
        class_ids = array("i", [0]) * n
        classes: list[ConjugacyClass] = []
        for idx, x in enumerate(self._iter_element_images()):
            if visited[idx]:
                continue
            class_id = len(classes)
            visited[idx] = 1
            class_ids[idx] = class_id
            seen = {x}
            queue = [x]
            least = x
            while queue:
                next_queue = []
                for y in queue:
                    for g, g_inv in pairs:
                        z = conjugate_images(y, g, g_inv)
                        if z not in seen:
                            seen.add(z)
                            next_queue.append(z)
                            if z < least:
                                least = z
                            zi = self._index_of(z)
                            visited[zi] = 1
                            class_ids[zi] = class_id
                queue = next_queue
            classes.append(ConjugacyClass(Permutation(least), factored(len(seen))))
        self._partition = tuple(classes)
        self._class_ids = class_ids
        return self._partition

    def class_sizes(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> ClassSizeSet:
        """N(G): the deduplicated set of conjugacy class sizes."""
        partition = self.class_partition(bound)
        return ClassSizeSet.of_values(c.size.value for c in partition)

    def class_size_of(self, x: Permutation) -> FactoredNatural:
        """Class size lookup backed by the cached partition."""
        partition = self.class_partition()
        assert self._class_ids is not None
        return partition[self._class_ids[self._index_of(x.images)]].size

    # -- centralizers and center -------------------------------------------

    def centralizer_order(self, x: Permutation) -> FactoredNatural:
        """|G| / |x^G| by orbit-stabilizer, exact."""
        return self.order // self.conjugacy_class_of(x).size

    def centralizer_elements(
        self, x: Permutation, bound: int = DEFAULT_ENUMERATION_BOUND
    ) -> "PermutationGroup":
        """The subgroup of elements commuting with x, by exhaustive filter."""
        if not self.contains(x):
            raise MembershipError("element must lie in the group")
        xi = x.images
        members = [g for g in self._materialized_elements(bound) if commute(g, xi)]
        return PermutationGroup([Permutation(g) for g in members])

    def center(self, bound: int = DEFAULT_ENUMERATION_BOUND) -> "PermutationGroup":
        """Elements with class size 1: those commuting with every generator."""
        members = [
            g
            for g in self._materialized_elements(bound)
            if all(commute(g, h) for h in self._gen_images)
        ]
        return PermutationGroup([Permutation(g) for g in members])

    # -- subgroup relations ----------------------------------------------------

    def is_subgroup(self, other: "PermutationGroup") -> bool:
        """Whether other's generators all lie in this group."""
        return all(self.contains(g) for g in other.generators)

    def normalizes(self, k: "PermutationGroup") -> bool:
        """Whether conjugation by this group's generators preserves k."""
        for g in self._gen_images:
            g_inv = inverse_images(g)
            for h in k._gen_images:
                if not k._contains_images(conjugate_images(h, g, g_inv)):
                    return False
        return True

    def coset_action(
        self,
        k: "PermutationGroup",
        index_bound: int = DEFAULT_COSET_INDEX_BOUND,
        bound: int = DEFAULT_ENUMERATION_BOUND,
    ) -> "CosetAction":
        """Action of this group on the right cosets of the normal subgroup k."""
        return CosetAction(self, k, index_bound, bound)

    def __repr__(self) -> str:
        return (
            f"PermutationGroup(degree={self.degree}, order={self.order.value}, "
            f"generators={len(self.generators)})"
        )


@dataclass(frozen=True)
class ConjugacyClass:
    """One conjugacy class: its least representative and exact size."""

    representative: Permutation
    size: FactoredNatural


class CosetAction:
    """Permutation image of G acting on the right cosets of a normal K.

    Cosets are tabulated exhaustively (every element of G is assigned its
    coset index), so applying the action to an arbitrary element is one
    composition and a lookup.
    """

    def __init__(
        self,
        g: PermutationGroup,
        k: PermutationGroup,
        index_bound: int = DEFAULT_COSET_INDEX_BOUND,
        bound: int = DEFAULT_ENUMERATION_BOUND,
    ):
        if k.degree != g.degree:
            raise GroupError("subgroup must act on the same points")
        if not g.is_subgroup(k):
            raise GroupError("K is not a subgroup of G")
        if not g.normalizes(k):
            raise GroupError("K is not normal in G")
        index = (g.order // k.order).value
        if index > index_bound:
            raise CosetIndexBoundError(index, index_bound)
        self.source = g
        self.kernel = k
        self.index = index

        k_elements = k._materialized_elements(bound)
        if g.order.value > _MATERIALIZE_BOUND:
            raise EnumerationBoundError(g.order.value, _MATERIALIZE_BOUND, "coset table")
        coset_of: dict[tuple[int, ...], int] = {}
        reps: list[tuple[int, ...]] = []

        def add_coset(rep: tuple[int, ...]) -> int:
            number = len(reps)
            reps.append(rep)
            for h in k_elements:
                coset_of[compose_images(h, rep)] = number
            return number

        add_coset(identity_images(g.degree))
        frontier = [0]
        gen_images = [gen.images for gen in g.generators]
        while frontier:
            next_frontier = []
            for i in frontier:
                for gen in gen_images:
                    t = compose_images(reps[i], gen)
                    if t not in coset_of:
                        next_frontier.append(add_coset(t))
            frontier = next_frontier
        if len(reps) != index:
            raise GroupError("coset table size disagrees with the index")

        self._coset_of = coset_of
        self._reps = reps
        image_gens = [self._apply_images(gen) for gen in gen_images]
        self.group = PermutationGroup(
            [Permutation(images) for images in image_gens]
        )
        if self.group.order.value != index:
            raise GroupError("coset action image order differs from the index")

    def _apply_images(self, images: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(
            self._coset_of[compose_images(rep, images)] for rep in self._reps
        )

    def apply(self, p: Permutation) -> Permutation:
        """Image of p in the quotient action."""
        if not self.source.contains(p):
            raise MembershipError("element must lie in the acting group")
        return Permutation(self._apply_images(p.images))


def build_group(generators: Iterable[Permutation]) -> PermutationGroup:
    return PermutationGroup(generators)


def is_p_element(x: Permutation, p: int) -> bool:
    """Whether the order of x is a power of the prime p (identity counts)."""
    order = element_order(x)
    return all(q == p for q, _ in order.factors)


def trivial_group(degree: int = 1) -> PermutationGroup:
    return PermutationGroup([Permutation.identity(degree)])
