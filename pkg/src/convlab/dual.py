"""The dual space of closed sets with the upper Kuratowski convergence.

Points of the dual are the closed sets of the base convergence (continuous
maps into the Sierpiński space are indicators of closed sets, so the
two-point space itself never appears).  A dual kernel is a bitmask over the
list of closed sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import Carrier, PFilter, bits, is_subset
from .space import (
    Convergence,
    adherence,
    closed_sets,
    closure_of,
    point_closures,
)


DUAL_CAP = 64


def closed_set_label(base: Carrier, mask: int) -> str:
    return "[" + "|".join(base.labels(mask)) + "]"


class DualSpace:
    """Closed sets of ``base`` with the convergence
    ``A ∈ lim G  iff  adh(⋃G) ⊆ A``.

    ``closed`` lists the closed sets by cardinality then mask, so the empty
    set is dual point 0 and the whole carrier is the last one.
    """

    def __init__(self, base: Convergence):
        self.base = base
        self.closed: tuple[int, ...] = tuple(sorted(closed_sets(base), key=lambda m: (m.bit_count(), m)))
        self.position = {m: i for i, m in enumerate(self.closed)}
        # lazy only beyond the tabulation cap; tabulate() enforces it
        labels = tuple(closed_set_label(base.carrier, m) for m in self.closed)
        self.carrier = Carrier(labels, cap=DUAL_CAP)
        self.conv = Convergence(self.carrier, self._lim, "dual")

    def _lim(self, kernel: int) -> int:
        # the degenerate reduced filter has empty adherence
        adh = adherence(self.base, PFilter(self.rdc(kernel)))
        out = 0
        for j, a in enumerate(self.closed):
            if is_subset(adh, a):
                out |= 1 << j
        return out

    @property
    def size(self) -> int:
        return len(self.closed)

    def point(self, closed_mask: int) -> int:
        """Dual index of a closed set of the base."""
        try:
            return self.position[closed_mask]
        except KeyError:
            raise ValueError(f"{self.base.carrier.format(closed_mask)} is not closed") from None

    def family_mask(self, family) -> int:
        out = 0
        for m in family:
            out |= 1 << self.point(m)
        return out

    def members(self, kernel: int) -> list[int]:
        return [self.closed[j] for j in bits(kernel)]

    def rdc(self, kernel: int) -> int:
        out = 0
        for j in bits(kernel):
            out |= self.closed[j]
        return out

    def rdc_filter(self, g: PFilter) -> PFilter:
        return PFilter(self.rdc(g.kernel))

    def erected(self, subset: int) -> int:
        """Dual kernel of all closed subsets of ``subset`` (always holds ∅)."""
        out = 0
        for j, a in enumerate(self.closed):
            if is_subset(a, subset):
                out |= 1 << j
        return out

    def erected_filter(self, f: PFilter) -> PFilter:
        if not f.proper:
            raise ValueError("the erected filter of the degenerate filter is undefined")
        return PFilter(self.erected(f.kernel))

    def saturate(self, g: PFilter) -> PFilter:
        if not g.proper:
            raise ValueError("saturation needs a proper dual filter")
        return PFilter(self.erected(self.rdc(g.kernel)))

    def upper_kuratowski_lim(self, kernel: int) -> int:
        """Limit rule written with closures, valid for topological bases."""
        cl = closure_of(self.base, self.rdc(kernel))
        out = 0
        for j, a in enumerate(self.closed):
            if is_subset(cl, a):
                out |= 1 << j
        return out

    def format(self, kernel: int) -> str:
        return self.carrier.format(kernel)


def dual_space(c: Convergence) -> DualSpace:
    return DualSpace(c)


@dataclass(frozen=True)
class AlexandroffPair:
    """Closures of the two Alexandroff topologies built from point closures."""

    closures: tuple[int, ...]

    def star(self, subset: int) -> int:
        out = 0
        for x, cl in enumerate(self.closures):
            if cl & subset:
                out |= 1 << x
        return out

    def bullet(self, subset: int) -> int:
        out = 0
        for b in bits(subset):
            out |= self.closures[b]
        return out

    def star_interior(self, subset: int, full: int) -> int:
        return full & ~self.star(full & ~subset)


def alexandroff(c: Convergence) -> AlexandroffPair:
    return AlexandroffPair(point_closures(c))


@dataclass(frozen=True)
class Regularity:
    star_regular: bool
    bullet_regular: bool
    reciprocal: bool


def is_star_regular(c: Convergence) -> bool:
    pair = alexandroff(c)
    return all(c.lim(pair.star(k)) == c.lim(k) for k in c.carrier.kernels())


def is_bullet_regular(c: Convergence) -> bool:
    pair = alexandroff(c)
    return all(c.lim(pair.bullet(k)) == c.lim(k) for k in c.carrier.kernels())


def is_reciprocal(c: Convergence) -> bool:
    points = c.point_limits()
    return all((points[y] >> x & 1) == (points[x] >> y & 1) for x in range(c.size) for y in range(x))


def regularity_predicates(c: Convergence) -> Regularity:
    return Regularity(is_star_regular(c), is_bullet_regular(c), is_reciprocal(c))


def is_t1(c: Convergence) -> bool:
    return all(cl == 1 << i for i, cl in enumerate(point_closures(c)))
