"""A small expression language naming the groups the toolkit builds.

Grammar (whitespace-insensitive, offsets in errors are 1-based):

    expr  := term (("x" | "×") term)*
    term  := "wr2(" expr ")" | named
    named := /A[0-9]+/ | /S[0-9]+/ | "PSL(2,9)" | "PGL(2,9)"
           | "PGammaL(2,9)" | "M10" | "U4(2)"

Product is left-associative.  Evaluation dispatches to the cached
constructors, so the same expression always yields the same group object.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import constructions
from .errors import GroupExprError
from .group import PermutationGroup


@dataclass(frozen=True)
class NamedGroup:
    name: str


@dataclass(frozen=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"


@dataclass(frozen=True)
class Wreath2:
    base: "GroupExpr"


GroupExpr = NamedGroup | Product | Wreath2

_FIXED_NAMES = ("PGammaL(2,9)", "PSL(2,9)", "PGL(2,9)", "U4(2)", "M10")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> GroupExprError:
        return GroupExprError(message, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def try_literal(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def parse_expr(self) -> GroupExpr:
        node = self.parse_term()
        while True:
            self.skip_ws()
            if self.try_literal("x") or self.try_literal("×"):
                node = Product(node, self.parse_term())
            else:
                return node

    def parse_term(self) -> GroupExpr:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("expected a group name")
        if self.try_literal("wr2("):
            inner = self.parse_expr()
            if not self.try_literal(")"):
                raise self.error("expected ')'")
            return Wreath2(inner)
        for name in _FIXED_NAMES:
            if self.try_literal(name):
                return NamedGroup(name)
        head = self.text[self.pos]
        if head in ("A", "S"):
            end = self.pos + 1
            while end < len(self.text) and self.text[end].isdigit():
                end += 1
            if end > self.pos + 1:
                name = self.text[self.pos : end]
                if not 3 <= int(name[1:]) <= 16:
                    raise self.error(f"unsupported degree in {name!r} (need 3..16)")
                self.pos = end
                return NamedGroup(name)
        raise self.error(f"unknown group name starting at {self.text[self.pos:]!r}")


def parse(text: str) -> GroupExpr:
    parser = _Parser(text)
    node = parser.parse_expr()
    if not parser.eof():
        raise parser.error(f"unexpected trailing input {text[parser.pos:]!r}")
    return node


def format_expr(expr: GroupExpr) -> str:
    """Canonical rendering; parse(format_expr(e)) reproduces e."""
    if isinstance(expr, NamedGroup):
        return expr.name
    if isinstance(expr, Wreath2):
        return f"wr2({format_expr(expr.base)})"
    left = format_expr(expr.left)
    right = format_expr(expr.right)
    if isinstance(expr.right, Product):
        right = f"({right})"  # unreachable from parse(); kept for safety
    return f"{left} x {right}"


@lru_cache(maxsize=None)
def _evaluate_named(name: str) -> PermutationGroup:
    if name.startswith("A") and name[1:].isdigit():
        return constructions.alternating(int(name[1:]))
    if name.startswith("S") and name[1:].isdigit() and name not in _FIXED_NAMES:
        return constructions.symmetric(int(name[1:]))
    if name == "PGammaL(2,9)":
        return constructions.pgammal_2_9().group
    if name == "PSL(2,9)":
        return constructions.pgammal_2_9().socle
    if name in ("PGL(2,9)", "M10"):
        return constructions.a6_extensions().groups[name]
    if name == "U4(2)":
        return constructions.u4_2()
    raise GroupExprError(f"unknown group name {name!r}", 1)


@lru_cache(maxsize=None)
def evaluate(expr: GroupExpr) -> PermutationGroup:
    if isinstance(expr, NamedGroup):
        return _evaluate_named(expr.name)
    if isinstance(expr, Product):
        return constructions.direct_product(evaluate(expr.left), evaluate(expr.right))
    if isinstance(expr, Wreath2):
        return constructions.wreath_by_involution(evaluate(expr.base)).group
    raise TypeError(f"not a group expression: {expr!r}")


def group_from_text(text: str) -> PermutationGroup:
    return evaluate(parse(text))
