"""Subsets, set families and filters on a finite carrier.

Subsets are plain ``int`` bitmasks (bit ``i`` is element ``i`` of the carrier),
families are ``frozenset`` of masks.  A filter on a finite set is principal, so
it is stored by its kernel; kernel ``0`` is the degenerate filter.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

MAX_CARRIER = 16

SetFamily = frozenset


class CapacityError(ValueError):
    """Raised when a carrier (or a tabulation request) exceeds the size cap."""


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0 and ``mask``, descending."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def nonempty_submasks(mask: int) -> Iterator[int]:
    for sub in submasks(mask):
        if sub:
            yield sub


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class Carrier:
    """An ordered finite ground set with stable label/index correspondence."""

    names: tuple[str, ...]
    cap: int = field(default=MAX_CARRIER, compare=False, repr=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("carrier must have at least one element")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate labels in carrier: {names}")
        if len(names) > self.cap:
            raise CapacityError(f"carrier of size {len(names)} exceeds cap {self.cap}")
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        return (1 << len(self.names)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]  # type: ignore[attr-defined]
        except KeyError:
            raise KeyError(f"unknown label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for label in labels:
            m |= 1 << self.index(label)
        return m

    def labels(self, mask: int) -> list[str]:
        return [self.names[i] for i in bits(mask)]

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.labels(mask)) + "}"

    def parse(self, text: str) -> int:
        """Parse a set literal such as ``{a,b}`` or ``{}``."""
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(f"malformed set literal {text!r}")
        body = text[1:-1]
        if not body:
            return 0
        return self.mask(part.strip() for part in body.split(","))

    def format_family(self, family: Iterable[int]) -> str:
        return "{" + ", ".join(self.format(m) for m in sorted(family, key=_subset_key)) + "}"

    def kernels(self) -> range:
        """All nonempty subsets, in increasing mask order."""
        return range(1, 1 << self.size)


def _subset_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def sorted_family(family: Iterable[int]) -> list[int]:
    """Members ordered by cardinality, then mask value."""
    return sorted(family, key=_subset_key)


# -- closures ---------------------------------------------------------------


def up_closure(family: Iterable[int], full: int) -> SetFamily:
    out: set[int] = set()
    for member in family:
        rest = full & ~member
        for extra in submasks(rest):
            out.add(member | extra)
    return frozenset(out)


def down_closure(family: Iterable[int]) -> SetFamily:
    out: set[int] = set()
    for member in family:
        if member in out:
            continue
        out.update(submasks(member))
    return frozenset(out)


def union_closure(family: Iterable[int]) -> SetFamily:
    # nonempty finite selections only, so the empty union is never injected
    out = set(family)
    frontier = list(out)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(out):
                u = a | b
                if u not in out:
                    out.add(u)
                    fresh.append(u)
        frontier = fresh
    return frozenset(out)


def intersection_closure(family: Iterable[int]) -> SetFamily:
    out = set(family)
    frontier = list(out)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(out):
                m = a & b
                if m not in out:
                    out.add(m)
                    fresh.append(m)
        frontier = fresh
    return frozenset(out)


def complements(family: Iterable[int], full: int) -> SetFamily:
    return frozenset(full & ~m for m in family)


def mesh(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every member of ``a`` meets every member of ``b``."""
    b = tuple(b)
    return all(x & y for x in a for y in b)


def grill(family: Iterable[int], full: int) -> SetFamily:
    family = tuple(family)
    return frozenset(s for s in range(full + 1) if all(s & m for m in family))


def is_filter_family(family: Iterable[int], full: int) -> bool:
    """A nonempty family of nonempty sets equal to its intersection-up closure."""
    family = frozenset(family)
    if not family or 0 in family:
        return False
    return up_closure(intersection_closure(family), full) == family


def is_ideal_family(family: Iterable[int], full: int) -> bool:
    """A nonempty family of proper subsets equal to its union-down closure."""
    family = frozenset(family)
    if not family or full in family:
        return False
    return down_closure(union_closure(family)) == family


# -- filters ----------------------------------------------------------------


@dataclass(frozen=True, order=True)
class PFilter:
    """Principal filter ``kernel↑``; ``kernel == 0`` is the degenerate filter."""

    kernel: int

    @property
    def proper(self) -> bool:
        return self.kernel != 0

    def finer_than(self, other: "PFilter") -> bool:
        return is_subset(self.kernel, other.kernel)

    def meshes(self, other: "PFilter") -> bool:
        return bool(self.kernel & other.kernel)

    @property
    def ultra_set(self) -> int:
        """Points whose principal ultrafilters are finer than this filter."""
        return self.kernel

    def members(self, full: int) -> SetFamily:
        return up_closure([self.kernel], full)

    def grill(self, full: int) -> SetFamily:
        if not self.proper:
            return frozenset()
        return frozenset(s for s in range(full + 1) if s & self.kernel)


DEGENERATE = PFilter(0)


class FilterRelation(NamedTuple):
    finer_than: bool
    mesh: bool
    ultra_set: int


def filter_ops(f: PFilter, g: PFilter) -> FilterRelation:
    return FilterRelation(f.finer_than(g), f.meshes(g), f.ultra_set)


def kernel_of(family: Iterable[int], full: int) -> int:
    """Intersection of all members (``full`` for the empty family)."""
    k = full
    for m in family:
        k &= m
    return k
