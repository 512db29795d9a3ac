"""Directed graph induced by a convergence and the dagger closure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dual import DualSpace, alexandroff
from .families import Carrier, bits, is_subset
from .space import Convergence


@dataclass(frozen=True)
class InducedGraph:
    """``y -> x`` iff ``x`` is a limit of the point filter at ``y``."""

    carrier: Carrier
    forward: tuple[int, ...]
    backward: tuple[int, ...]

    @property
    def full(self) -> int:
        return self.carrier.full

    def forward_n(self, y: int) -> int:
        return self.forward[y]

    def backward_n(self, y: int) -> int:
        return self.backward[y]

    def roots(self) -> int:
        return sum(1 << r for r, f in enumerate(self.forward) if f == self.full)

    def ends(self) -> int:
        return sum(1 << r for r, b in enumerate(self.backward) if b == self.full)

    def not_left(self, y: int) -> int:
        roots = self.roots()
        by = self.backward[y]
        return sum(1 << x for x, bx in enumerate(self.backward) if is_subset(by & bx, roots))

    def not_right(self, y: int) -> int:
        ends = self.ends()
        fy = self.forward[y]
        return sum(1 << x for x, fx in enumerate(self.forward) if is_subset(fy & fx, ends))

    def not_left_all(self) -> tuple[int, ...]:
        return tuple(self.not_left(y) for y in range(self.carrier.size))

    def is_symmetric(self) -> bool:
        return self.forward == self.backward

    def dagger_closure(self, subset: int, not_left: tuple[int, ...] | None = None) -> int:
        """Intersect ``c``'s non-left set over every ``c`` lying in all
        non-left sets of members of ``subset``.  Empty intersections are the
        whole carrier."""
        if not_left is None:
            not_left = self.not_left_all()
        inner = self.full
        for a in bits(subset):
            inner &= not_left[a]
        out = self.full
        for c in bits(inner):
            out &= not_left[c]
        return out


def graph_of(c: Convergence) -> InducedGraph:
    forward = c.point_limits()
    n = c.size
    backward = tuple(sum(1 << x for x in range(n) if forward[x] >> y & 1) for y in range(n))
    return InducedGraph(c.carrier, forward, backward)


def dagger_closure(c: Convergence, subset: int) -> int:
    return graph_of(c).dagger_closure(subset)


def dual_dagger_form(d: DualSpace, family: Iterable[int]) -> int:
    """Dagger closure on the dual computed from the base: all closed subsets of
    the star closure of the union.  Returns a dual kernel."""
    union = 0
    for m in family:
        d.point(m)  # rejects non-closed members
        union |= m
    return d.erected(alexandroff(d.base).star(union))
