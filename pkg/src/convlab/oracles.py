"""Slow, definition-level reference implementations.

Each function here recomputes something the optimized modules already
provide, straight from the definitions and by brute-force enumeration, so
tests and the suite can cross-check the two.  Nothing in this module reuses
the search reductions of ``covers`` or ``paving``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Optional, Sequence

from .families import PFilter, is_subset
from .space import Convergence, adherence_by_mesh


def closed_sets_by_definition(c: Convergence) -> frozenset[int]:
    """``C`` is closed iff every filter meshing ``C`` has its limits in ``C``."""
    out = set()
    for s in range(c.full + 1):
        if all(is_subset(c.lim(k), s) for k in c.carrier.kernels() if k & s):
            out.add(s)
    return frozenset(out)


def dagger_closure_by_definition(c: Convergence, subset: int) -> int:
    """The double intersection, built from explicit Python sets."""
    n = c.size
    pts = range(n)
    back = {y: {x for x in pts if c.lim(1 << x) >> y & 1} for y in pts}
    roots = {r for r in pts if c.lim(1 << r) == c.full}
    not_left = {y: {x for x in pts if back[y] & back[x] <= roots} for y in pts}
    members = [a for a in pts if subset >> a & 1]
    inner = set(pts)
    for a in members:
        inner &= not_left[a]
    outer = set(pts)
    for cc in inner:
        outer &= not_left[cc]
    return sum(1 << x for x in outer)


def _smallest(candidates: Sequence[int], valid: Callable[[tuple[int, ...]], bool], start: int = 1) -> Optional[tuple[int, ...]]:
    for size in range(start, len(candidates) + 1):
        for combo in combinations(candidates, size):
            if valid(combo):
                return combo
    return None


def naive_paving(c: Convergence, x: int, kind: str) -> int:
    """Smallest family of proper filters converging to ``x`` with the
    pavement property of ``kind``, by trying every family in size order."""
    convergent = [k for k in c.carrier.kernels() if c.lim(k) >> x & 1]
    if kind == "pavement":

        def valid(fam):
            return all(any(is_subset(a, d) for d in fam) for a in convergent)

    elif kind == "pseudo":
        ultras = [1 << y for y in range(c.size) if c.lim(1 << y) >> x & 1]

        def valid(fam):
            return all(any(u & d for d in fam) for u in ultras)

    elif kind == "dagger":
        closures = [dagger_closure_by_definition(c, a) for a in convergent]

        def valid(fam):
            return all(any(cl & d for d in fam) for cl in closures)

    else:
        raise ValueError(kind)
    found = _smallest(convergent, valid)
    if found is None:
        raise AssertionError("the family of all convergent filters always works")
    return len(found)


def naive_completeness(c: Convergence, target: int, kind: str, classic: bool = False) -> int:
    """Smallest (ultra)cocomplete collection relative to ``target``.

    ``classic=False``: nonempty collections, degenerate filter allowed.
    ``classic=True``: the empty collection allowed, proper filters only.
    """
    qualifying = [k for k in range(c.full + 1) if is_subset(adherence_by_mesh(c, PFilter(k)), target)]
    members = [k for k in qualifying if k or not classic]
    if kind == "plain":
        tests = [k for k in qualifying if k]

        def valid(fam):
            return all(any(g & d for d in fam) for g in tests)

    elif kind == "ultra":
        tests = [k for k in qualifying if k or not classic]

        def valid(fam):
            return all(any(is_subset(g, d) for d in fam) for g in tests)

    else:
        raise ValueError(kind)
    found = _smallest(members, valid, start=0 if classic else 1)
    if found is None:
        raise AssertionError("no admissible collection exists")
    return len(found)


def dual_lim_by_definition(base: Convergence, closed: Sequence[int], kernel: int) -> int:
    """Upper Kuratowski rule with adherence taken in its mesh form."""
    union = 0
    for j, a in enumerate(closed):
        if kernel >> j & 1:
            union |= a
    adh = adherence_by_mesh(base, PFilter(union))
    return sum(1 << j for j, a in enumerate(closed) if is_subset(adh, a))
