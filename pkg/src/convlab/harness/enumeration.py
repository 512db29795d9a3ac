"""Exhaustive enumeration of lawful convergences on tiny carriers.

Two generation orders are provided so the counts can be checked against
each other: bottom-up fixes point limits first and shrinks, top-down fixes
the limit of the whole carrier first and grows.
"""

from __future__ import annotations

from functools import lru_cache

from ..families import bits, submasks
from ..space import Convergence
from .rng import default_carrier


def _kernels_by_size(n: int, descending: bool) -> list[int]:
    ks = sorted(range(1, 1 << n), key=lambda k: (k.bit_count(), k))
    return ks[::-1] if descending else ks


def bottom_up_tables(n: int) -> list[tuple[int, ...]]:
    full = (1 << n) - 1
    order = _kernels_by_size(n, descending=False)
    out: list[tuple[int, ...]] = []
    table = [0] * (1 << n)

    def step(pos: int) -> None:
        if pos == len(order):
            out.append(tuple(table))
            return
        k = order[pos]
        if k & (k - 1) == 0:
            for extra in submasks(full & ~k):
                table[k] = k | extra
                step(pos + 1)
            return
        allowed = full
        for i in bits(k):
            allowed &= table[k & ~(1 << i)]
        for lim in submasks(allowed):
            table[k] = lim
            step(pos + 1)

    step(0)
    return out


def top_down_tables(n: int) -> list[tuple[int, ...]]:
    full = (1 << n) - 1
    order = _kernels_by_size(n, descending=True)
    out: list[tuple[int, ...]] = []
    table = [0] * (1 << n)

    def step(pos: int) -> None:
        if pos == len(order):
            out.append(tuple(table))
            return
        k = order[pos]
        required = 0
        for i in bits(full & ~k):
            required |= table[k | 1 << i]
        if k & (k - 1) == 0:
            required |= k
        for extra in submasks(full & ~required):
            table[k] = required | extra
            step(pos + 1)

    step(0)
    return out


@lru_cache(maxsize=None)
def all_convergences(n: int) -> tuple[Convergence, ...]:
    """Every lawful convergence on ``x0..x{n-1}``, in bottom-up order."""
    carrier = default_carrier(n)
    return tuple(Convergence.from_table(carrier, t) for t in bottom_up_tables(n))
