"""Permutation groups, conjugacy class-size sets, and class-size argument replays."""

from .factored import ClassSizeSet, FactoredNatural, factored, gcd, lcm, p_part, product_nset
from .group import (
    DEFAULT_COSET_INDEX_BOUND,
    DEFAULT_ENUMERATION_BOUND,
    ConjugacyClass,
    CosetAction,
    PermutationGroup,
    build_group,
    is_p_element,
    trivial_group,
)
from .permutation import (
    Permutation,
    compose,
    conjugate,
    cycle_type,
    element_order,
    format_cycles,
    inverse,
    parse_cycles,
    power,
)

__all__ = [
    "ClassSizeSet",
    "ConjugacyClass",
    "CosetAction",
    "DEFAULT_COSET_INDEX_BOUND",
    "DEFAULT_ENUMERATION_BOUND",
    "FactoredNatural",
    "Permutation",
    "PermutationGroup",
    "build_group",
    "compose",
    "conjugate",
    "cycle_type",
    "element_order",
    "factored",
    "format_cycles",
    "gcd",
    "inverse",
    "is_p_element",
    "lcm",
    "p_part",
    "parse_cycles",
    "power",
    "product_nset",
    "trivial_group",
]
