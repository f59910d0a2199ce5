"""Exact arithmetic on factored naturals and sets of conjugacy class sizes.

Every quantity that enters a divisibility or p-part argument is carried
together with its prime factorization, so lcm/gcd/p-part computations are
exponent arithmetic and never re-factor intermediate values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator


def _trial_factor(n: int) -> tuple[tuple[int, int], ...]:
    """Factor n >= 1 by trial division. Values here stay far below 2^63."""
    if n < 1:
        raise ValueError(f"not a natural number: {n}")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p = 3 if p == 2 else p + 2
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


@dataclass(frozen=True, eq=False)
class FactoredNatural:
    """A natural number together with its sorted prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int) -> "FactoredNatural":
        return cls(n, _trial_factor(n))

    def __post_init__(self) -> None:
        check = 1
        last = 1
        for p, e in self.factors:
            if e < 1 or p <= last:
                raise ValueError(f"bad factorization {self.factors}")
            last = p
            check *= p**e
        if check != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def p_part(self, p: int) -> "FactoredNatural":
        """Largest power of the prime p dividing this value (1 if none)."""
        e = self.exponent_of(p)
        if e == 0:
            return FactoredNatural(1, ())
        return FactoredNatural(p**e, ((p, e),))

    def primes(self) -> frozenset[int]:
        return frozenset(p for p, _ in self.factors)

    def divides(self, other: "FactoredNatural") -> bool:
        return all(other.exponent_of(p) >= e for p, e in self.factors)

    def _merge(self, other: "FactoredNatural", combine) -> "FactoredNatural":
        primes = sorted(self.primes() | other.primes())
        factors = []
        value = 1
        for p in primes:
            e = combine(self.exponent_of(p), other.exponent_of(p))
            if e > 0:
                factors.append((p, e))
                value *= p**e
        return FactoredNatural(value, tuple(factors))

    def __mul__(self, other: "FactoredNatural") -> "FactoredNatural":
        return self._merge(other, lambda a, b: a + b)

    def __floordiv__(self, other: "FactoredNatural") -> "FactoredNatural":
        """Exact division; raises if the quotient is not integral."""
        if not other.divides(self):
            raise ValueError(f"{other.value} does not divide {self.value}")
        return self._merge(other, lambda a, b: a - b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FactoredNatural):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other: "FactoredNatural") -> bool:
        return self.value < other.value

    def __le__(self, other: "FactoredNatural") -> bool:
        return self.value <= other.value

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)

    def __repr__(self) -> str:
        return f"FactoredNatural({self.value} = {self})"


ONE = FactoredNatural(1, ())


def factored(n: int) -> FactoredNatural:
    return FactoredNatural.of(n)


def lcm(a: FactoredNatural, b: FactoredNatural) -> FactoredNatural:
    return a._merge(b, max)


def gcd(a: FactoredNatural, b: FactoredNatural) -> FactoredNatural:
    return a._merge(b, min)


def lcm_all(values: Iterable[FactoredNatural]) -> FactoredNatural:
    return reduce(lcm, values, ONE)


def p_part(n: FactoredNatural, p: int) -> FactoredNatural:
    return n.p_part(p)


@dataclass(frozen=True)
class ClassSizeSet:
    """Deduplicated sorted set of conjugacy class sizes, each factored.

    This is the set N(G); the multiset of sizes (needed for counting
    checks) stays with the group engine's class partition.
    """

    members: tuple[FactoredNatural, ...]

    @classmethod
    def of_values(cls, values: Iterable[int]) -> "ClassSizeSet":
        dedup = sorted(set(values))
        return cls(tuple(FactoredNatural.of(v) for v in dedup))

    def __post_init__(self) -> None:
        vals = [m.value for m in self.members]
        if vals != sorted(set(vals)):
            raise ValueError("members must be sorted and deduplicated")

    def __iter__(self) -> Iterator[FactoredNatural]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(m.value for m in self.members)

    def contains_value(self, n: int) -> bool:
        return any(m.value == n for m in self.members)

    def product(self, other: "ClassSizeSet") -> "ClassSizeSet":
        """Set of pairwise products: class sizes of a direct product."""
        return ClassSizeSet.of_values(
            a.value * b.value for a in self.members for b in other.members
        )

    def primes(self) -> frozenset[int]:
        """Union of the prime supports of all members."""
        out: frozenset[int] = frozenset()
        for m in self.members:
            out |= m.primes()
        return out

    def multiples_in(self, n: FactoredNatural) -> tuple[FactoredNatural, ...]:
        return tuple(m for m in self.members if n.divides(m))

    def divides_some(self, n: FactoredNatural) -> bool:
        return any(n.divides(m) for m in self.members)

    def with_p_part_le(self, p: int, bound: int) -> tuple[FactoredNatural, ...]:
        """Members whose p-part does not exceed bound."""
        return tuple(m for m in self.members if m.p_part(p).value <= bound)

    def coprime_pair_feasible(
        self, a: FactoredNatural, b: FactoredNatural
    ) -> tuple[bool, tuple[FactoredNatural, ...]]:
        """Can a commuting coprime pair with class sizes a, b exist here?

        The product xy of such a pair has a class size that is a multiple
        of lcm(a, b) and at most a*b.  Returns all members satisfying both
        constraints.
        """
        low = lcm(a, b)
        cap = a.value * b.value
        witnesses = tuple(
            m for m in self.members if low.divides(m) and m.value <= cap
        )
        return (bool(witnesses), witnesses)

    def coprime_triple_feasible(
        self, ab: FactoredNatural, ac: FactoredNatural, bc: FactoredNatural
    ) -> tuple[bool, tuple[FactoredNatural, ...]]:
        """Can pairwise products with these class sizes coexist here?

        The class size of the triple product must be a common multiple of
        all three pairwise class sizes.
        """
        low = lcm(lcm(ab, ac), bc)
        witnesses = self.multiples_in(low)
        return (bool(witnesses), witnesses)

    def min_group_order(self) -> FactoredNatural:
        """lcm of all members: divides the order of any group with this N."""
        return lcm_all(self.members)

    def max_p_part(self, p: int) -> FactoredNatural:
        best = ONE
        for m in self.members:
            part = m.p_part(p)
            if part.value > best.value:
                best = part
        return best

    def to_json_obj(self) -> dict:
        return {
            "sizes": list(self.values),
            "factorizations": [[list(pe) for pe in m.factors] for m in self.members],
        }

    def __str__(self) -> str:
        return "{" + ", ".join(str(m.value) for m in self.members) + "}"


def product_nset(n1: ClassSizeSet, n2: ClassSizeSet) -> ClassSizeSet:
    return n1.product(n2)
