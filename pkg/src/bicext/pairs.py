"""Pairs of group elements under the three-case anchored product.

A pair (a, b) stands for the shift carrying the cone at ``a`` onto the
cone at ``b``; composing two shifts collapses to the closed formula in
``__mul__``.  One type serves both the full pair semigroup and its
positive-coordinate subsemigroup: membership in the latter is a
predicate, not a separate class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .errors import InstanceMismatch
from .ogroups import Bounds, Element, OrderedGroup


@dataclass(frozen=True)
class BElement:
    """One element of the pair semigroup over a fixed ordered group."""

    group: OrderedGroup
    left: Element
    right: Element

    def __post_init__(self):
        if not (self.group.contains(self.left) and self.group.contains(self.right)):
            raise ValueError(
                f"payload outside the {self.group.name} carrier: "
                f"{self.left!r}, {self.right!r}"
            )

    def __mul__(self, other: "BElement") -> "BElement":
        if not isinstance(other, BElement):
            return NotImplemented
        g = self.group
        if other.group != g:
            raise InstanceMismatch(
                f"cannot multiply a {g.name} pair with a {other.group.name} pair"
            )
        a, b = self.left, self.right
        c, d = other.left, other.right
        verdict = g.cmp(b, c)
        if verdict < 0:
            return BElement(g, g.mul(g.mul(c, g.inv(b)), a), d)
        if verdict == 0:
            return BElement(g, a, d)
        return BElement(g, a, g.mul(g.mul(b, g.inv(c)), d))

    def inverse(self) -> "BElement":
        """Swap coordinates; the unique semigroup inverse."""
        return BElement(self.group, self.right, self.left)

    def is_idempotent(self) -> bool:
        return self.left == self.right

    def in_bplus(self) -> bool:
        """Both coordinates in the positive cone."""
        return self.group.is_positive(self.left) and self.group.is_positive(self.right)

    def __str__(self):
        g = self.group
        return f"[{g.render(self.left)}|{g.render(self.right)}]"

    def __repr__(self):
        return f"BElement({self.group.name}, {self.left!r}, {self.right!r})"


def idempotent(group: OrderedGroup, x: Element) -> BElement:
    return BElement(group, x, x)


def pairs_in_window(group: OrderedGroup, bounds: Bounds, bplus: bool = False) -> List[BElement]:
    """Every pair with both payload coordinates inside the window.

    Enumeration order is the group's own element order, left coordinate
    first, so repeated calls list pairs identically.
    """
    elems = group.elements(bounds)
    out = [BElement(group, a, b) for a in elems for b in elems]
    if bplus:
        out = [s for s in out if s.in_bplus()]
    return out
