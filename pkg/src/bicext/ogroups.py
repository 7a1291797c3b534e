"""Linearly ordered groups with exact arithmetic.

The abstraction is small on purpose: a carrier with identity,
multiplication, inversion, a total order invariant under translation on
both sides, and an optional successor/predecessor when the order is not
dense.  Four concrete carriers ship: integers, rationals, integer pairs
under the lexicographic order, and the discrete Heisenberg group ordered
lexicographically.  The Heisenberg order is validated by the cone
checker at the bottom of this module rather than taken on faith.

Element payloads are plain Python values (int, Fraction, tuple of ints),
so equality is structural and all arithmetic is exact; integers never
wrap because Python's are unbounded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .errors import NotApplicable

Element = Union[int, Fraction, Tuple[int, ...]]
Bounds = Union[int, Tuple[int, int]]


def normalize_bounds(bounds: Bounds) -> Tuple[int, int]:
    """Accept either a symmetric radius or an explicit (lo, hi) pair."""
    if isinstance(bounds, int):
        if bounds < 0:
            raise ValueError("window radius must be non-negative")
        return -bounds, bounds
    lo, hi = bounds
    if lo > hi:
        raise ValueError(f"empty window {bounds!r}")
    return lo, hi


class OrderedGroup:
    """A linearly ordered group over exact immutable payloads.

    Subclasses provide the carrier operations; this base class derives
    the comparison helpers from ``cmp`` and adds the utilities the
    semigroup layers need.  Instances are stateless and compare equal by
    type, so separately constructed copies are interchangeable.
    """

    name = "?"
    densely_ordered = False
    enumerable = True
    abelian = True
    payload_kind = "integer"  # integer | fraction | int-tuple
    payload_arity = 1

    # carrier operations ------------------------------------------------

    @property
    def identity(self) -> Element:
        raise NotImplementedError

    def mul(self, g: Element, h: Element) -> Element:
        raise NotImplementedError

    def inv(self, g: Element) -> Element:
        raise NotImplementedError

    def cmp(self, g: Element, h: Element) -> int:
        """Total-order verdict: -1 (less), 0 (equal) or 1 (greater)."""
        return (g > h) - (g < h)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def successor(self, g: Element) -> Element:
        """Least element strictly above ``g``; undefined on dense carriers."""
        raise NotApplicable(f"{self.name} declares no successor")

    def predecessor(self, g: Element) -> Element:
        raise NotApplicable(f"{self.name} declares no predecessor")

    @property
    def designated_positive(self) -> Element:
        """A fixed element strictly above the identity.

        Present on every carrier so constructions that merely need "some
        element strictly below x" work even without a predecessor.
        """
        raise NotImplementedError

    def between(self, g: Element, h: Element) -> Element:
        """Strictly intermediate element; only dense carriers provide one."""
        raise NotApplicable(f"{self.name} provides no midpoint witness")

    def elements(self, bounds: Bounds) -> List[Element]:
        """All carrier elements whose integer coordinates lie in the window."""
        raise NotApplicable(f"{self.name} is not enumerable")

    def render(self, x: Element) -> str:
        raise NotImplementedError

    # derived helpers ----------------------------------------------------

    def lt(self, g, h) -> bool:
        return self.cmp(g, h) < 0

    def leq(self, g, h) -> bool:
        return self.cmp(g, h) <= 0

    def gt(self, g, h) -> bool:
        return self.cmp(g, h) > 0

    def geq(self, g, h) -> bool:
        return self.cmp(g, h) >= 0

    def is_positive(self, g) -> bool:
        """Positive-cone membership: identity <= g (the identity counts)."""
        return self.cmp(self.identity, g) <= 0

    def maximum(self, g, h):
        return g if self.cmp(g, h) >= 0 else h

    def power(self, g, k: int):
        out = self.identity
        step = g if k >= 0 else self.inv(g)
        for _ in range(abs(k)):
            out = self.mul(out, step)
        return out

    def element_below(self, g):
        """A deterministic element strictly below ``g``.

        The predecessor when the carrier has one, else one
        designated-positive step down.
        """
        if self.densely_ordered:
            return self.mul(g, self.inv(self.designated_positive))
        return self.predecessor(g)

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self))

    def __repr__(self):
        return f"<ordered group {self.name}>"


class IntegerGroup(OrderedGroup):
    """Integers under addition with the usual order."""

    name = "Z"

    @property
    def identity(self) -> int:
        return 0

    def mul(self, g, h):
        return g + h

    def inv(self, g):
        return -g

    def contains(self, x) -> bool:
        return type(x) is int

    def successor(self, g):
        return g + 1

    def predecessor(self, g):
        return g - 1

    @property
    def designated_positive(self) -> int:
        return 1

    def elements(self, bounds: Bounds) -> List[int]:
        lo, hi = normalize_bounds(bounds)
        return list(range(lo, hi + 1))

    def render(self, x) -> str:
        return str(x)


class RationalGroup(OrderedGroup):
    """Rationals under addition: the densely ordered carrier.

    Payloads are ``fractions.Fraction`` values, which are always reduced
    with a positive denominator, so structural equality is canonical.
    The carrier is not enumerable; finite work runs on the deterministic
    grid below instead.
    """

    name = "Q"
    densely_ordered = True
    enumerable = False
    payload_kind = "fraction"

    @property
    def identity(self) -> Fraction:
        return Fraction(0)

    def mul(self, g, h):
        return g + h

    def inv(self, g):
        return -g

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    @property
    def designated_positive(self) -> Fraction:
        return Fraction(1)

    def between(self, g, h):
        return (g + h) / 2

    def sample_grid(self, bound: int) -> List[Fraction]:
        """Reduced fractions p/q with |p| <= bound and 1 <= q <= bound, sorted."""
        if bound < 1:
            raise ValueError("grid bound must be >= 1")
        vals = {
            Fraction(p, q)
            for q in range(1, bound + 1)
            for p in range(-bound, bound + 1)
        }
        return sorted(vals)

    def render(self, x) -> str:
        return str(x)


class LexPairGroup(OrderedGroup):
    """Pairs of integers with componentwise addition, ordered lexicographically.

    Non-archimedean: (1, 0) exceeds every (0, n).
    """

    name = "ZxZ"
    payload_kind = "int-tuple"
    payload_arity = 2

    @property
    def identity(self) -> Tuple[int, int]:
        return (0, 0)

    def mul(self, g, h):
        return (g[0] + h[0], g[1] + h[1])

    def inv(self, g):
        return (-g[0], -g[1])

    def contains(self, x) -> bool:
        return (
            type(x) is tuple
            and len(x) == 2
            and type(x[0]) is int
            and type(x[1]) is int
        )

    def successor(self, g):
        return (g[0], g[1] + 1)

    def predecessor(self, g):
        return (g[0], g[1] - 1)

    @property
    def designated_positive(self) -> Tuple[int, int]:
        return (0, 1)

    def elements(self, bounds: Bounds) -> List[Tuple[int, int]]:
        lo, hi = normalize_bounds(bounds)
        rng = range(lo, hi + 1)
        return [(a, b) for a in rng for b in rng]

    def render(self, x) -> str:
        return f"({x[0]},{x[1]})"


class HeisenbergGroup(OrderedGroup):
    """Discrete Heisenberg group on integer triples, ordered lexicographically.

    Product: (x, y, z) * (p, q, r) = (x + p, y + q, z + r + x*q), the
    upper-triangular 3x3 matrix multiplication in coordinates.  The group
    is non-abelian; the lexicographic order on (x, y, z) is nonetheless
    invariant under translation on both sides, which the cone checker
    verifies on windows instead of assuming.
    """

    name = "H3"
    abelian = False
    payload_kind = "int-tuple"
    payload_arity = 3

    @property
    def identity(self) -> Tuple[int, int, int]:
        return (0, 0, 0)

    def mul(self, g, h):
        return (g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1])

    def inv(self, g):
        return (-g[0], -g[1], g[0] * g[1] - g[2])

    def contains(self, x) -> bool:
        return (
            type(x) is tuple
            and len(x) == 3
            and all(type(v) is int for v in x)
        )

    def successor(self, g):
        # right-multiplying by (0, 0, 1) bumps only the last coordinate
        return (g[0], g[1], g[2] + 1)

    def predecessor(self, g):
        return (g[0], g[1], g[2] - 1)

    @property
    def designated_positive(self) -> Tuple[int, int, int]:
        return (0, 0, 1)

    def elements(self, bounds: Bounds) -> List[Tuple[int, int, int]]:
        lo, hi = normalize_bounds(bounds)
        rng = range(lo, hi + 1)
        return [(a, b, c) for a in rng for b in rng for c in rng]

    def render(self, x) -> str:
        return f"({x[0]},{x[1]},{x[2]})"


Z = IntegerGroup()
Q = RationalGroup()
ZXZ = LexPairGroup()
H3 = HeisenbergGroup()

GROUPS = {"Z": Z, "Q": Q, "ZxZ": ZXZ, "H3": H3}


@dataclass(frozen=True)
class ConeVerdict:
    """Outcome of brute-checking the three positive-cone axioms.

    A counterexample pair is present exactly when some axiom flag is
    false; it is the first offender found, in axiom order.
    """

    axiom1_ok: bool  # cone closed under multiplication
    axiom2_ok: bool  # cone meets its own inverses only at the identity
    axiom3_ok: bool  # cone stable under conjugation
    counterexample: Optional[Tuple[Element, Element]] = None

    @property
    def all_ok(self) -> bool:
        return self.axiom1_ok and self.axiom2_ok and self.axiom3_ok


def check_positive_cone_axioms(
    group: OrderedGroup, samples: Sequence[Element]
) -> ConeVerdict:
    """Verify the cone axioms over the sample set.

    Closure and conjugation stability run over sample pairs, the
    antisymmetry condition over single samples.  A failed axiom is a
    verdict, never an exception.
    """
    cone = [g for g in samples if group.is_positive(g)]
    counter = None

    ax1 = True
    for x, y in itertools.product(cone, cone):
        if not group.is_positive(group.mul(x, y)):
            ax1, counter = False, (x, y)
            break

    ax2 = True
    for x in cone:
        if group.is_positive(group.inv(x)) and x != group.identity:
            ax2 = False
            if counter is None:
                counter = (x, group.inv(x))
            break

    ax3 = True
    for x, g in itertools.product(samples, cone):
        conj = group.mul(group.mul(group.inv(x), g), x)
        if not group.is_positive(conj):
            ax3 = False
            if counter is None:
                counter = (x, g)
            break

    return ConeVerdict(ax1, ax2, ax3, counter)


def window_around(group: OrderedGroup, g: Element, radius: int) -> List[Element]:
    """Right translates of ``g`` by every offset in the symmetric window."""
    return [group.mul(g, d) for d in group.elements(radius)]


def successor_check(group: OrderedGroup, g: Element, radius: int = 4) -> bool:
    """Verify the successor is the least element above ``g`` on a finite window.

    Within the window around ``g``, the cone at ``g`` minus the cone at
    ``successor(g)`` must be exactly ``{g}``.  Raises NotApplicable on
    densely ordered carriers, which declare no successor.
    """
    succ = group.successor(g)
    for x in window_around(group, g, radius):
        in_gap = group.leq(g, x) and not group.leq(succ, x)
        if in_gap != (x == g):
            return False
    return True
