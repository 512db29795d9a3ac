"""Exact minimum set cover over bitmask universes.

Used by the completeness and paving searches.  Candidates are tried in the
order given, so among optimal covers the lexicographically least index tuple
is returned and results never depend on scheduling.
"""

from __future__ import annotations

from typing import Optional, Sequence


def greedy_cover(universe: int, coverage: Sequence[int]) -> Optional[list[int]]:
    """Classic greedy cover; ``None`` when the candidates cannot cover."""
    remaining = universe
    chosen: list[int] = []
    while remaining:
        best, gain = -1, 0
        for j, cov in enumerate(coverage):
            g = (cov & remaining).bit_count()
            if g > gain:
                best, gain = j, g
        if best < 0:
            return None
        chosen.append(best)
        remaining &= ~coverage[best]
    return chosen


def min_cover(universe: int, coverage: Sequence[int], allow_empty: bool = True) -> Optional[tuple[int, ...]]:
    """Lexicographically least minimum-cardinality cover of ``universe``.

    Branch and bound: the greedy solution caps the depth, and a branch is cut
    as soon as the remaining candidates cannot cover what is still missing.
    With ``allow_empty=False`` an empty universe is covered by the first
    candidate alone.
    """
    if universe == 0:
        if allow_empty:
            return ()
        return (0,) if coverage else None
    greedy = greedy_cover(universe, coverage)
    if greedy is None:
        return None
    m = len(coverage)
    suffix = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        suffix[j] = suffix[j + 1] | coverage[j]

    def dfs(start: int, covered: int, depth: int, chosen: list[int]) -> Optional[tuple[int, ...]]:
        if covered == universe:
            return tuple(chosen)
        if depth == 0 or (covered | suffix[start]) != universe:
            return None
        missing = universe & ~covered
        for j in range(start, m - depth + 1):
            if coverage[j] & missing:
                chosen.append(j)
                found = dfs(j + 1, covered | coverage[j], depth - 1, chosen)
                chosen.pop()
                if found is not None:
                    return found
        return None

    for size in range(1, len(greedy) + 1):
        found = dfs(0, 0, size, [])
        if found is not None:
            return found
    raise AssertionError("greedy cover exists but exact search found none")
