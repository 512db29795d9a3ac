"""Seeded generation of random convergences (splitmix64)."""

from __future__ import annotations

from ..families import MAX_CARRIER, Carrier, CapacityError, bits
from ..space import Convergence

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


def sub_seed(seed: int, index: int) -> int:
    """Independent seed for trial ``index``, schedule-free."""
    return mix64((seed + (index + 1) * GOLDEN) & MASK64)


def default_carrier(n: int) -> Carrier:
    return Carrier(tuple(f"x{i}" for i in range(n)))


def random_space(seed: int, n: int, density: float) -> Convergence:
    """Random lawful convergence on ``n`` points.

    Point filters converge to themselves and to each other point with
    probability ``density``; a larger kernel keeps each point of the
    intersection of its immediate sub-kernels' limits with the same
    probability, so ``density = 1`` gives a pseudotopology and ``0`` the
    discrete pattern.
    """
    if not 1 <= n <= MAX_CARRIER:
        raise CapacityError(f"random spaces need 1 <= n <= {MAX_CARRIER}")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = SplitMix64(seed)
    carrier = default_carrier(n)
    full = carrier.full
    table = [0] * (1 << n)
    for x in range(n):
        lim = 1 << x
        for y in range(n):
            if y != x and rng.random() < density:
                lim |= 1 << y
        table[1 << x] = lim
    for size in range(2, n + 1):
        for k in carrier.kernels():
            if k.bit_count() != size:
                continue
            allowed = full
            for i in bits(k):
                allowed &= table[k & ~(1 << i)]
            lim = 0
            for y in bits(allowed):
                if rng.random() < density:
                    lim |= 1 << y
            table[k] = lim
    return Convergence.from_table(carrier, table)
