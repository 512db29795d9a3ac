"""Paving numbers: how many filters it takes to control convergence at a point.

Filters converging to ``x`` form a down-set of kernels inside the set of
points whose point filters converge to ``x``.  Enlarging a member kernel only
helps every kind of pavement, so searches run over the maximal convergent
kernels:

* pavement: every maximal kernel must itself be a member, so the value is
  their count;
* pseudopavement: a minimum set cover of the convergent points;
* dagger pseudopavement: a minimum family whose kernels meet the dagger
  closure of every convergent point (enough, since the closure is monotone).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .families import PFilter, bits, up_closure
from .graph import graph_of
from .search import min_cover
from .space import Convergence, Verdict, compact_parts, is_topological, open_sets

KINDS = ("pavement", "pseudo", "dagger")


@dataclass(frozen=True)
class PavingResult:
    value: int
    witness: tuple[PFilter, ...]
    kind: str
    at: int


def convergent_points(c: Convergence, x: int) -> int:
    """Points ``y`` with ``x`` a limit of the point filter at ``y``."""
    return sum(1 << y for y, lim in enumerate(c.point_limits()) if lim >> x & 1)


def convergent_kernels(c: Convergence, x: int) -> list[int]:
    """Every kernel converging to ``x``, found by growing the down-set."""
    elems = list(bits(convergent_points(c, x)))
    out: list[int] = []

    def grow(mask: int, start: int) -> None:
        for j in range(start, len(elems)):
            k = mask | 1 << elems[j]
            if c.lim(k) >> x & 1:
                out.append(k)
                grow(k, j + 1)

    grow(0, 0)
    return sorted(out)


def maximal_convergent_kernels(c: Convergence, x: int) -> list[int]:
    points = convergent_points(c, x)
    if c.lim(points) >> x & 1:
        return [points]
    found = set(convergent_kernels(c, x))
    return sorted(
        k for k in found if not any(k | 1 << y in found for y in bits(points & ~k))
    )


def _dagger_targets(c: Convergence, x: int) -> list[tuple[int, int]]:
    g = graph_of(c)
    not_left = g.not_left_all()
    return [(y, g.dagger_closure(1 << y, not_left)) for y in bits(convergent_points(c, x))]


def is_pavement(c: Convergence, filters: Sequence[PFilter], x: int, kind: str = "pavement") -> Verdict:
    """Check a candidate family; the witness is a filter it fails to control."""
    for d in filters:
        if not d.proper or not c.lim(d.kernel) >> x & 1:
            raise ValueError(f"member {c.carrier.format(d.kernel)} does not converge to {c.carrier.names[x]}")
    kernels = [d.kernel for d in filters]
    if kind == "pavement":
        for k in maximal_convergent_kernels(c, x):
            if not any(k & ~d == 0 for d in kernels):
                return Verdict(False, PFilter(k))
        return Verdict(True)
    if kind == "pseudo":
        for y in bits(convergent_points(c, x)):
            if not any(d >> y & 1 for d in kernels):
                return Verdict(False, PFilter(1 << y))
        return Verdict(True)
    if kind == "dagger":
        for y, closure in _dagger_targets(c, x):
            if not any(d & closure for d in kernels):
                return Verdict(False, PFilter(1 << y))
        return Verdict(True)
    raise ValueError(f"unknown pavement kind {kind!r}")


def paving_number(c: Convergence, x: int, kind: str = "pavement") -> PavingResult:
    candidates = maximal_convergent_kernels(c, x)
    if kind == "pavement":
        chosen: Sequence[int] = candidates
    elif kind == "pseudo":
        points = convergent_points(c, x)
        found = min_cover(points, candidates)
        chosen = [candidates[j] for j in found]
    elif kind == "dagger":
        targets = _dagger_targets(c, x)
        coverage = [
            sum(1 << t for t, (_, closure) in enumerate(targets) if k & closure) for k in candidates
        ]
        found = min_cover((1 << len(targets)) - 1, coverage)
        chosen = [candidates[j] for j in found]
    else:
        raise ValueError(f"unknown pavement kind {kind!r}")
    witness = tuple(PFilter(k) for k in chosen)
    return PavingResult(len(witness), witness, kind, x)


def k_arens_number(c: Convergence) -> int:
    """Fewest compact sets such that every compact set lies inside one of them."""
    if not is_topological(c):
        raise ValueError("k-Arens number is defined here for topological inputs")
    compacts = compact_parts(c).compacts
    # a k-cover by compact sets must contain every maximal compact set
    return sum(1 for k in compacts if not any(k != o and k & ~o == 0 for o in compacts))


def character_of(c: Convergence, subset: int) -> int:
    """Smallest base of the filter generated by open supersets of ``subset``."""
    if not is_topological(c):
        raise ValueError("character is defined here for topological inputs")
    full = c.full
    around = [u for u in open_sets(c) if subset & ~u == 0]
    members = sorted(up_closure(around, full))
    target = frozenset(members)
    for size in range(1, len(members) + 1):
        for base in combinations(members, size):
            if up_closure(base, full) == target:
                return size
    raise AssertionError("a filter is always its own base")
