"""Small finite fields, matrices over them, and projective point sets.

Field elements are plain ints: residues for a prime field, and for the
order-9 field the code a + 3b stands for a + b*t where t^2 = -1 over F3
(t^2 + 1 is irreducible there, and makes the cube map cheap to tabulate).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


class PrimeField:
    """The field of integers modulo a prime."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.size = p
        self.elements = tuple(range(p))

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class GF9:
    """The field with nine elements, realized as F3[t] / (t^2 + 1)."""

    def __init__(self) -> None:
        self.size = 9
        self.elements = tuple(range(9))
        self._mul = [[0] * 9 for _ in range(9)]
        for a0, a1 in iter_product(range(3), range(3)):
            for b0, b1 in iter_product(range(3), range(3)):
                # (a0 + a1 t)(b0 + b1 t) with t^2 = -1
                c0 = (a0 * b0 - a1 * b1) % 3
                c1 = (a0 * b1 + a1 * b0) % 3
                self._mul[a0 + 3 * a1][b0 + 3 * b1] = c0 + 3 * c1
        self._inv = [0] * 9
        for a in range(1, 9):
            for b in range(1, 9):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break
        self._frob = [self.mul(self.mul(a, a), a) for a in range(9)]

    def add(self, a: int, b: int) -> int:
        return (a + b) % 3 + 3 * ((a // 3 + b // 3) % 3)

    def sub(self, a: int, b: int) -> int:
        return (a - b) % 3 + 3 * ((a // 3 - b // 3) % 3)

    def neg(self, a: int) -> int:
        return (-a) % 3 + 3 * ((-(a // 3)) % 3)

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def frobenius(self, a: int) -> int:
        """The cube map, the nontrivial field automorphism."""
        return self._frob[a]

    def __repr__(self) -> str:
        return "GF9()"


@lru_cache(maxsize=None)
def gf9() -> GF9:
    return GF9()


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


# -- matrices (tuples of row tuples, acting on column vectors) -------------


def mat_identity(d: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def mat_mul(field, a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    m = len(b[0])
    return tuple(
        tuple(
            _dot(field, a[i], tuple(b[k][j] for k in range(len(b))))
            for j in range(m)
        )
        for i in range(d)
    )


def _dot(field, u: Vector, v: Vector) -> int:
    acc = 0
    for x, y in zip(u, v):
        acc = field.add(acc, field.mul(x, y))
    return acc


def mat_vec(field, a: Matrix, v: Vector) -> Vector:
    return tuple(_dot(field, row, v) for row in a)


def mat_pow(field, a: Matrix, k: int) -> Matrix:
    out = mat_identity(len(a))
    base = a
    while k:
        if k & 1:
            out = mat_mul(field, out, base)
        base = mat_mul(field, base, base)
        k >>= 1
    return out


def mat_order(field, a: Matrix, cap: int = 10_000) -> int:
    """Multiplicative order of an invertible matrix, by iteration."""
    ident = mat_identity(len(a))
    m = a
    for k in range(1, cap + 1):
        if m == ident:
            return k
        m = mat_mul(field, m, a)
    raise ValueError(f"order exceeds {cap}")


# -- row reduction over a prime field ---------------------------------------


def row_echelon(p: int, rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod p; returns (rows, pivot columns)."""
    rows = [[x % p for x in row] for row in rows]
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p != 0:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(p: int, rows: list[list[int]]) -> list[Vector]:
    """Basis of {v : A v = 0} over F_p, rows being the rows of A."""
    d = len(rows[0]) if rows else 0
    reduced, pivots = row_echelon(p, rows)
    free_cols = [c for c in range(d) if c not in pivots]
    basis = []
    for free in free_cols:
        v = [0] * d
        v[free] = 1
        for r, c in enumerate(pivots):
            v[c] = (-reduced[r][free]) % p
        basis.append(tuple(v))
    return basis


def row_space_basis(p: int, rows: list[list[int]]) -> list[Vector]:
    reduced, _ = row_echelon(p, rows)
    return [tuple(row) for row in reduced]


def rank(p: int, rows: list[list[int]]) -> int:
    return len(row_echelon(p, rows)[0])


def in_span(p: int, basis: list[Vector], v: Vector) -> bool:
    if not basis:
        return all(x % p == 0 for x in v)
    rows = [list(b) for b in basis]
    return rank(p, rows) == rank(p, rows + [list(v)])


# -- projective point sets ---------------------------------------------------


@dataclass(frozen=True)
class ProjectivePointSet:
    """The points of projective (d-1)-space over a small field.

    Points are coordinate tuples normalized so the first nonzero
    coordinate is 1, listed in lexicographic order of the vectors that
    first reach them.
    """

    field: object
    dim: int
    points: tuple[Vector, ...]

    @classmethod
    def create(cls, field, dim: int) -> "ProjectivePointSet":
        seen: dict[Vector, None] = {}
        for vec in iter_product(field.elements, repeat=dim):
            if all(x == 0 for x in vec):
                continue
            seen.setdefault(cls._normalize(field, vec), None)
        points = tuple(seen.keys())
        expected = (field.size**dim - 1) // (field.size - 1)
        if len(points) != expected:
            raise AssertionError("projective point count mismatch")
        return cls(field, dim, points)

    @staticmethod
    def _normalize(field, vec: Vector) -> Vector:
        lead = next((x for x in vec if x != 0), None)
        if lead is None:
            raise ValueError("the zero vector has no projective point")
        if lead == 1:
            return vec
        scale = field.inv(lead)
        return tuple(field.mul(scale, x) for x in vec)

    def normalize(self, vec: Vector) -> Vector:
        return self._normalize(self.field, vec)

    def index_of(self, vec: Vector) -> int:
        return self.points.index(self.normalize(vec))

    def __len__(self) -> int:
        return len(self.points)
