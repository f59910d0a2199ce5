"""Permutations on finite point sets.

Points are 0-based internally and rendered 1-based in all human-facing
output (cycle notation).  Composition is left-to-right: compose(p, q)
maps i to q(p(i)), and conjugation is x^g = g^-1 * x * g under that
convention.

The hot loops of the group engine work on raw image tuples; the helpers
`compose_images`, `inverse_images` and `conjugate_images` are that fast
path, and `Permutation` is the validated wrapper around one tuple.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import reduce

from .factored import FactoredNatural, factored, lcm

MAX_DEGREE = 2**16


def compose_images(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Image tuple of 'apply p, then q'."""
    return tuple(q[i] for i in p)


def inverse_images(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def conjugate_images(
    x: tuple[int, ...], g: tuple[int, ...], g_inv: tuple[int, ...]
) -> tuple[int, ...]:
    """Image tuple of g^-1 * x * g, fused into a single pass."""
    return tuple(g[x[j]] for j in g_inv)


def identity_images(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def commute(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
    """Whether pq = qp, comparing pointwise with early exit."""
    for i in range(len(p)):
        if q[p[i]] != p[q[i]]:
            return False
    return True


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., n-1} stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds supported maximum {MAX_DEGREE}")
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(identity_images(degree))

    @classmethod
    def from_cycles(cls, cycles: list[tuple[int, ...]], degree: int) -> "Permutation":
        """Build from disjoint cycles of 0-based points."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for a in cycle:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                if a in seen:
                    raise ValueError(f"point {a} repeated across cycles")
                seen.add(a)
            for i, a in enumerate(cycle):
                images[a] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each rotated to start at its
        least point, sorted by that point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cycle = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p followed by q."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(compose_images(p.images, q.images))


def inverse(p: Permutation) -> Permutation:
    return Permutation(inverse_images(p.images))


def conjugate(x: Permutation, g: Permutation) -> Permutation:
    """x^g = g^-1 * x * g."""
    if x.degree != g.degree:
        raise ValueError(f"degree mismatch: {x.degree} vs {g.degree}")
    return Permutation(conjugate_images(x.images, g.images, inverse_images(g.images)))


def cycle_type(p: Permutation) -> Counter:
    """Multiset of cycle lengths, fixed points included."""
    lengths = Counter(len(c) for c in p.cycles())
    moved = sum(length * count for length, count in lengths.items())
    lengths[1] += p.degree - moved
    return lengths


def element_order(p: Permutation) -> FactoredNatural:
    """Least k >= 1 with p^k = identity: lcm of the cycle lengths."""
    return reduce(lcm, (factored(len(c)) for c in p.cycles()), factored(1))


def power(p: Permutation, k: int) -> Permutation:
    """p^k via cycle rotation (k may be negative)."""
    images = list(range(p.degree))
    for cycle in p.cycles():
        m = len(cycle)
        for i, a in enumerate(cycle):
            images[a] = cycle[(i + k) % m]
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    """Disjoint cycle notation with 1-based points; identity is "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(a + 1) for a in c) + ")" for c in cycles)


_CYCLE_TOKEN = re.compile(r"\s*\(\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse disjoint cycle notation with 1-based points.

    The degree defaults to the largest point mentioned; passing it
    explicitly makes format/parse round-trip exactly.
    """
    pos = 0
    cycles: list[tuple[int, ...]] = []
    while pos < len(text):
        m = _CYCLE_TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ValueError(
                    f"bad cycle notation at offset {pos + 1}: {text!r}"
                )
            break
        body = m.group(1).strip()
        if body:
            points = tuple(int(tok) - 1 for tok in body.split(","))
            if any(a < 0 for a in points):
                raise ValueError(f"points are 1-based: {text!r}")
            cycles.append(points)
        pos = m.end()
    max_point = max((a for c in cycles for a in c), default=-1)
    if degree is None:
        degree = max_point + 1
    elif max_point >= degree:
        raise ValueError(f"point {max_point + 1} out of range for degree {degree}")
    return Permutation.from_cycles(cycles, degree)
