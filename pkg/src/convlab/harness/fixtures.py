"""Reference spaces used across the test suite and the CLI."""

from __future__ import annotations

from ..families import Carrier
from ..space import Convergence, discrete, topology_convergence


def fix_chain() -> Convergence:
    """Three-point chain topology with opens {}, {a}, {a,b}, {a,b,c}."""
    carrier = Carrier(("a", "b", "c"))
    return topology_convergence(carrier, [0b000, 0b001, 0b011, 0b111])


def fix_ultra() -> Convergence:
    """Point filters converge everywhere, nothing else converges."""
    carrier = Carrier(("1", "2", "3"))
    full = carrier.full
    return Convergence.from_table(
        carrier, [0] + [full if k & (k - 1) == 0 else 0 for k in carrier.kernels()]
    )


def fix_overlap() -> Convergence:
    """Kernels of size at most two converge everywhere; the whole carrier does not."""
    carrier = Carrier(("1", "2", "3"))
    full = carrier.full
    return Convergence.from_table(
        carrier, [0] + [full if k.bit_count() <= 2 else 0 for k in carrier.kernels()]
    )


def fix_disc2() -> Convergence:
    return discrete(Carrier(("p", "q")))


FIXTURES = {
    "chain": fix_chain,
    "ultra": fix_ultra,
    "overlap": fix_overlap,
    "disc2": fix_disc2,
}
