"""Maps between finite convergence spaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .families import PFilter, SetFamily, bits, is_subset, submasks
from .space import Convergence, Verdict, finer_than, reflector_s, reflector_t


@dataclass(frozen=True)
class SpaceMap:
    source: Convergence
    target: Convergence
    images: tuple[int, ...]  # target index of each source point

    def __post_init__(self) -> None:
        if len(self.images) != self.source.size:
            raise ValueError("a map must send every source point somewhere")
        if any(not 0 <= t < self.target.size for t in self.images):
            raise ValueError("map image outside the target carrier")

    @classmethod
    def from_labels(cls, source: Convergence, target: Convergence, pairs: Mapping[str, str]) -> "SpaceMap":
        missing = [name for name in source.carrier.names if name not in pairs]
        if missing:
            raise ValueError(f"map is not total, missing {missing}")
        images = tuple(target.carrier.index(pairs[name]) for name in source.carrier.names)
        for name in pairs:
            source.carrier.index(name)
        return cls(source, target, images)

    def image(self, subset: int) -> int:
        out = 0
        for i in bits(subset):
            out |= 1 << self.images[i]
        return out

    def preimage(self, subset: int) -> int:
        return sum(1 << i for i, t in enumerate(self.images) if subset >> t & 1)

    @property
    def onto(self) -> bool:
        return self.image(self.source.full) == self.target.full


def image_filter(m: SpaceMap, f: PFilter) -> PFilter:
    return PFilter(m.image(f.kernel))


def is_continuous(m: SpaceMap) -> Verdict:
    """Images of limits must be limits of image filters; witness: a kernel."""
    for k in m.source.carrier.kernels():
        if not is_subset(m.image(m.source.lim(k)), m.target.lim(m.image(k))):
            return Verdict(False, k)
    return Verdict(True)


def final_convergence(m: SpaceMap) -> Convergence:
    """Finest convergence on the target carrier making ``m`` continuous.

    ``y`` is a limit of ``B`` iff some kernel ``A`` has ``B ⊆ f(A)`` and
    ``y ∈ f(lim A)``; the superset condition is what antitonicity forces.
    """
    if not m.onto:
        raise ValueError("final convergence requires an onto map")
    carrier = m.target.carrier
    raw = [0] * (1 << carrier.size)
    for k in m.source.carrier.kernels():
        raw[m.image(k)] |= m.image(m.source.lim(k))
    table = [0] * (1 << carrier.size)
    for b in carrier.kernels():
        rest = carrier.full & ~b
        v = 0
        for extra in submasks(rest):
            v |= raw[b | extra]
        table[b] = v
    out = Convergence.from_table(carrier, table)
    out.tag = "final"
    return out


def initial_convergence(m: SpaceMap) -> Convergence:
    """Coarsest convergence on the source carrier making ``m`` continuous."""
    tgt = m.target
    return Convergence(
        m.source.carrier, lambda k: m.preimage(tgt.lim(m.image(k))), "initial"
    )


@dataclass(frozen=True)
class MapClass:
    almost_open: bool
    biquotient: bool
    quotient: bool


def map_class(m: SpaceMap) -> MapClass:
    if not m.onto:
        raise ValueError("map classes are defined for onto maps")
    if not is_continuous(m):
        raise ValueError("map classes are defined for continuous maps")
    fin = final_convergence(m)
    return MapClass(
        finer_than(m.target, fin),
        finer_than(m.target, reflector_s(fin)),
        finer_than(m.target, reflector_t(fin)),
    )


def cover_image(m: SpaceMap, family: Iterable[int]) -> SetFamily:
    return frozenset(m.image(p) for p in family)
