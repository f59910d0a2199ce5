"""Exception types shared across the toolkit.

The CLI maps these onto its exit codes: parse problems exit 2, resource
bound refusals exit 3.
"""

from __future__ import annotations


class GroupError(ValueError):
    """Base class for group computation errors."""


class MembershipError(GroupError):
    """An element was required to lie in a group and does not."""


class EnumerationBoundError(GroupError):
    """A computation would enumerate more elements than the bound allows."""

    def __init__(self, order: int, bound: int, what: str = "group"):
        super().__init__(
            f"{what} of order {order} exceeds the enumeration bound {bound}"
        )
        self.order = order
        self.bound = bound


class CosetIndexBoundError(GroupError):
    """A coset action would have more points than the index bound allows."""

    def __init__(self, index: int, bound: int):
        super().__init__(f"coset index {index} exceeds the bound {bound}")
        self.index = index
        self.bound = bound


class ConstructionError(GroupError):
    """A named construction failed its own consistency checks."""


class GroupExprError(ValueError):
    """Syntax or name error in a group expression; offset is 1-based."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
