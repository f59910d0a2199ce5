"""Coprime linear actions on vector spaces over prime fields.

For a group A of invertible matrices over F_p whose order is coprime to
p, the space splits as (fixed vectors of A) + (span of all (g - 1)v),
the two parts intersect trivially, and each is A-invariant.  The checker
verifies those facts per instance; coprimality is a hypothesis and its
failure is an error, not a counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

import numpy as np

from .fields import Matrix, Vector, in_span, mat_identity, mat_mul, nullspace, rank, row_space_basis

_CLOSURE_CAP = 200_000


@dataclass(frozen=True)
class LinearAction:
    """Invertible generator matrices over F_p acting on F_p^dim."""

    p: int
    dim: int
    generators: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if len(g) != self.dim or any(len(row) != self.dim for row in g):
                raise ValueError("generator has the wrong shape")
            if rank(self.p, [list(row) for row in g]) != self.dim:
                raise ValueError("generator matrix is singular")

    def group_order(self) -> int:
        """Order of the generated matrix group, by closure enumeration."""
        from .fields import prime_field

        field = prime_field(self.p)
        ident = mat_identity(self.dim)
        seen = {ident}
        frontier = [ident]
        while frontier:
            next_frontier = []
            for m in frontier:
                for g in self.generators:
                    prod = mat_mul(field, m, g)
                    if prod not in seen:
                        seen.add(prod)
                        next_frontier.append(prod)
                        if len(seen) > _CLOSURE_CAP:
                            raise ValueError("matrix group too large to enumerate")
            frontier = next_frontier
        return len(seen)

    def is_coprime(self) -> bool:
        return self.group_order() % self.p != 0


def _difference_rows(act: LinearAction) -> list[list[int]]:
    """Rows of all (g - identity), stacked."""
    rows = []
    for g in act.generators:
        for i in range(act.dim):
            rows.append(
                [(g[i][j] - (1 if i == j else 0)) % act.p for j in range(act.dim)]
            )
    return rows


def fixed_subspace(act: LinearAction) -> list[Vector]:
    """Basis of the common fixed space: intersection of ker(g - 1)."""
    if not act.generators:
        return [tuple(1 if j == i else 0 for j in range(act.dim)) for i in range(act.dim)]
    return nullspace(act.p, _difference_rows(act))


def commutator_subspace(act: LinearAction) -> list[Vector]:
    """Basis of the span of all (g - 1)v: column space of the differences."""
    if not act.generators:
        return []
    rows = _difference_rows(act)
    # column space of the stacked map = row space of its transpose
    columns = [[row[j] for row in rows] for j in range(act.dim)]
    basis = row_space_basis(act.p, columns)
    return [b for b in basis if any(x % act.p for x in b)]


def check_decomposition(act: LinearAction) -> bool:
    """Whether fixed + commutator spans everything and meets trivially.

    Also verifies that each generator maps each factor into itself.
    Raises if the coprimality hypothesis fails.
    """
    if not act.is_coprime():
        raise ValueError(
            f"matrix group order is divisible by {act.p}; hypothesis violated"
        )
    fixed = fixed_subspace(act)
    comm = commutator_subspace(act)
    if len(fixed) + len(comm) != act.dim:
        return False
    combined = [list(v) for v in fixed + comm]
    if combined and rank(act.p, combined) != act.dim:
        return False
    from .fields import mat_vec, prime_field

    field = prime_field(act.p)
    for g in act.generators:
        for basis, space in ((fixed, fixed), (comm, comm)):
            for v in basis:
                if not in_span(act.p, list(space), mat_vec(field, g, v)):
                    return False
    return True


def cyclic_actions_of_order(p: int, dim: int, order: int) -> list[LinearAction]:
    """All single-generator actions on F_p^dim whose matrix has the order.

    Exhaustive over every dim x dim matrix; vectorized so that dimension 3
    (p^9 candidates) stays fast.
    """
    count = p ** (dim * dim)
    codes = np.arange(count, dtype=np.int64)
    digits = []
    for k in range(dim * dim):
        digits.append((codes // p**k) % p)
    mats = np.stack(digits, axis=1).reshape(count, dim, dim).astype(np.int16)
    ident = np.eye(dim, dtype=np.int16)
    powers = np.broadcast_to(ident, mats.shape).copy()
    for _ in range(order):
        powers = np.matmul(powers, mats) % p
    is_identity = (powers == ident).all(axis=(1, 2))
    # matrices with m^order = 1 are invertible; keep those of exact order
    candidates = mats[is_identity]
    out = []
    for m in candidates:
        matrix = tuple(tuple(int(x) for x in row) for row in m)
        act = LinearAction(p, dim, (matrix,))
        if _matrix_order(act) == order:
            out.append(act)
    return out


def _matrix_order(act: LinearAction) -> int:
    from .fields import prime_field

    field = prime_field(act.p)
    ident = mat_identity(act.dim)
    m = act.generators[0]
    power = m
    k = 1
    while power != ident:
        power = mat_mul(field, power, m)
        k += 1
    return k


def commutator_dimension_is_even(act: LinearAction) -> bool:
    return len(commutator_subspace(act)) % 2 == 0
