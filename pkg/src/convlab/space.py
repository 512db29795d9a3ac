"""Finite convergence spaces.

A convergence on a finite carrier is determined by the limits of principal
filters, so it is a rule ``lim(kernel) -> limit set`` defined on nonempty
kernels.  Lawful rules are centered (``x in lim({x})``) and antitone in the
kernel (a smaller kernel is a finer filter and has more limits).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .families import (
    Carrier,
    CapacityError,
    PFilter,
    SetFamily,
    bits,
    is_subset,
)

TABULATION_CAP = 16


class InvalidSpace(ValueError):
    def __init__(self, violations: Sequence["Violation"]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Violation:
    kind: str  # "centered" | "antitone" | "range"
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class Verdict:
    """A boolean answer carrying the offending object when it is False."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


class Convergence:
    """A convergence on a finite carrier.

    ``tag`` records how limits are produced: ``"tabulated"`` for an explicit
    table, anything else for a lazy view whose rule is evaluated on demand.
    Lazy rules hold no mutable state, so views can be shared across threads.
    """

    __slots__ = ("carrier", "_rule", "_table", "tag")

    def __init__(
        self,
        carrier: Carrier,
        rule: Callable[[int], int],
        tag: str = "tabulated",
        table: Optional[tuple[int, ...]] = None,
    ):
        self.carrier = carrier
        self._rule = rule
        self._table = table
        self.tag = tag

    @classmethod
    def from_table(cls, carrier: Carrier, table: Sequence[int]) -> "Convergence":
        """``table[k]`` is the limit set of kernel ``k``; ``table[0]`` is ignored."""
        if len(table) != 1 << carrier.size:
            raise ValueError("table length must be 2**size")
        table = (0,) + tuple(table[1:])
        return cls(carrier, table.__getitem__, "tabulated", table)

    @classmethod
    def from_limits(cls, carrier: Carrier, limits: dict[int, int]) -> "Convergence":
        table = [0] * (1 << carrier.size)
        for k, v in limits.items():
            table[k] = v
        return cls.from_table(carrier, table)

    def lim(self, kernel: int) -> int:
        if kernel == 0:
            raise ValueError("lim is undefined on the degenerate filter")
        return self._rule(kernel)

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def full(self) -> int:
        return self.carrier.full

    @property
    def is_tabulated(self) -> bool:
        return self._table is not None

    @property
    def table(self) -> tuple[int, ...]:
        if self._table is None:
            return self.tabulate()._table  # type: ignore[return-value]
        return self._table

    def tabulate(self) -> "Convergence":
        if self._table is not None:
            return self
        if self.size > TABULATION_CAP:
            raise CapacityError(f"cannot tabulate a carrier of size {self.size}")
        table = [0] + [self._rule(k) for k in range(1, 1 << self.size)]
        return Convergence.from_table(self.carrier, table)

    def point_limits(self) -> tuple[int, ...]:
        return tuple(self._rule(1 << i) for i in range(self.size))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Convergence):
            return NotImplemented
        return self.carrier == other.carrier and all(
            self.lim(k) == other.lim(k) for k in self.carrier.kernels()
        )

    def __hash__(self) -> int:
        return hash((self.carrier, self.table))

    def __repr__(self) -> str:
        return f"Convergence({self.tag}, {self.carrier.names})"

    def describe(self) -> str:
        c = self.carrier
        return "; ".join(f"lim{c.format(k)}={c.format(self.lim(k))}" for k in c.kernels())


def validate(c: Convergence) -> list[Violation]:
    """Check centeredness and antitonicity; returns the violations found.

    Antitonicity is checked on immediate sub-kernels, which implies it for
    every pair by transitivity.
    """
    carrier = c.carrier
    out: list[Violation] = []
    for k in carrier.kernels():
        v = c.lim(k)
        if v & ~carrier.full:
            out.append(Violation("range", f"lim{carrier.format(k)} leaves the carrier"))
    for i in range(carrier.size):
        if not c.lim(1 << i) >> i & 1:
            out.append(Violation("centered", f"{carrier.names[i]} not in lim{{{carrier.names[i]}}}"))
    for k in carrier.kernels():
        if k & (k - 1) == 0:
            continue
        big = c.lim(k)
        for i in bits(k):
            small = k & ~(1 << i)
            if not is_subset(big, c.lim(small)):
                out.append(
                    Violation(
                        "antitone",
                        f"{carrier.format(small)} ⊆ {carrier.format(k)} but "
                        f"lim{carrier.format(k)}={carrier.format(big)} ⊄ "
                        f"lim{carrier.format(small)}={carrier.format(c.lim(small))}",
                    )
                )
    return out


def require_valid(c: Convergence) -> Convergence:
    problems = validate(c)
    if problems:
        raise InvalidSpace(problems)
    return c


def adherence(c: Convergence, f: PFilter) -> int:
    """Union of the limits of the points of the kernel (∅ when degenerate)."""
    out = 0
    for i in bits(f.kernel):
        out |= c.lim(1 << i)
    return out


def adherence_by_mesh(c: Convergence, f: PFilter) -> int:
    """Union of limits of every proper filter meshing ``f``, by enumeration."""
    out = 0
    for h in c.carrier.kernels():
        if h & f.kernel:
            out |= c.lim(h)
    return out


def adherence_of_family(c: Convergence, family: Iterable[int]) -> int:
    """Union of limits of proper filters meshing an arbitrary family."""
    family = tuple(family)
    out = 0
    for h in c.carrier.kernels():
        # h↑ meshes the family iff h meets every member
        if all(h & m for m in family):
            out |= c.lim(h)
    return out


# -- closed sets ------------------------------------------------------------


def is_closed(c: Convergence, subset: int) -> bool:
    # a kernel meeting C contains a point y of C and lim(kernel) ⊆ lim{y}
    for i in bits(subset):
        if not is_subset(c.lim(1 << i), subset):
            return False
    return True


def closed_sets(c: Convergence) -> SetFamily:
    return frozenset(s for s in range(c.full + 1) if is_closed(c, s))


def closure_of(c: Convergence, subset: int) -> int:
    point = c.point_limits()
    current = subset
    while True:
        grown = current
        for i in bits(current):
            grown |= point[i]
        if grown == current:
            return current
        current = grown


def point_closures(c: Convergence) -> tuple[int, ...]:
    return tuple(closure_of(c, 1 << i) for i in range(c.size))


# -- reflectors -------------------------------------------------------------


def _intersect_over(values: Sequence[int], kernel: int, full: int) -> int:
    out = full
    for i in bits(kernel):
        out &= values[i]
    return out


def reflector_t(c: Convergence) -> Convergence:
    """Topological reflection: the topology of the closed sets of ``c``."""
    closures = point_closures(c)
    full = c.full
    # x is a limit of A↑ iff every a in A lies in every open set around x,
    # i.e. x ∈ cl{a} for every a in A
    return Convergence(c.carrier, lambda k: _intersect_over(closures, k, full), "reflector-T")


def reflector_s(c: Convergence) -> Convergence:
    """Pseudotopological reflection: intersect the limits of finer ultrafilters."""
    points = c.point_limits()
    full = c.full
    return Convergence(c.carrier, lambda k: _intersect_over(points, k, full), "reflector-S")


def finer_than(c: Convergence, d: Convergence) -> bool:
    """``c ≥ d``: every limit for ``c`` is a limit for ``d``."""
    if c.carrier != d.carrier:
        raise ValueError("convergences live on different carriers")
    return all(is_subset(c.lim(k), d.lim(k)) for k in c.carrier.kernels())


def first_coarser_kernel(c: Convergence, d: Convergence) -> Optional[int]:
    for k in c.carrier.kernels():
        if not is_subset(c.lim(k), d.lim(k)):
            return k
    return None


def is_pseudotopology(c: Convergence) -> bool:
    return c == reflector_s(c)


def is_topological(c: Convergence) -> bool:
    return c == reflector_t(c)


# -- compactness --------------------------------------------------------------


@dataclass(frozen=True)
class CompactParts:
    compactoids: SetFamily
    compacts: SetFamily
    cocompactoid: PFilter
    locally_compactoid: bool


def is_compactoid(c: Convergence, subset: int) -> bool:
    # the ultrafilters containing A are the point filters of A
    return all(c.lim(1 << i) for i in bits(subset))


def is_compact(c: Convergence, subset: int) -> bool:
    return all(c.lim(1 << i) & subset for i in bits(subset))


def compact_parts(c: Convergence) -> CompactParts:
    full = c.full
    compactoids = frozenset(s for s in range(full + 1) if is_compactoid(c, s))
    compacts = frozenset(s for s in range(full + 1) if is_compact(c, s))
    largest = 0
    for s in compactoids:
        largest |= s
    # every convergent filter must contain a compactoid set; its kernel is the
    # smallest candidate
    locally = all(k in compactoids for k in c.carrier.kernels() if c.lim(k))
    return CompactParts(compactoids, compacts, PFilter(full & ~largest), locally)


# -- construction -------------------------------------------------------------


def generate_convergence(carrier: Carrier, generators: Iterable[tuple[int, int]]) -> Convergence:
    """Finest centered convergence with ``L ⊆ lim(S)`` for each generator ``(S, L)``."""
    gens = []
    for s, l in generators:
        if s == 0:
            raise ValueError("generator kernel must be nonempty")
        if (s | l) & ~carrier.full:
            raise ValueError("generator mentions points outside the carrier")
        gens.append((s, l))
    table = [0] * (1 << carrier.size)
    for k in carrier.kernels():
        v = k if k & (k - 1) == 0 else 0
        for s, l in gens:
            if is_subset(k, s):
                v |= l
        table[k] = v
    return Convergence.from_table(carrier, table)


def topology_convergence(carrier: Carrier, opens: Iterable[int]) -> Convergence:
    """Convergence of a topology given by its open sets (validated as such)."""
    opens = frozenset(opens)
    full = carrier.full
    problems = []
    if 0 not in opens or full not in opens:
        problems.append("open sets must contain {} and the whole carrier")
    for a in opens:
        for b in opens:
            if a | b not in opens or a & b not in opens:
                problems.append(
                    f"not closed under union/intersection at {carrier.format(a)}, {carrier.format(b)}"
                )
                break
        if problems:
            break
    if problems:
        raise ValueError("; ".join(problems))
    nbhd = []
    for i in range(carrier.size):
        k = full
        for u in opens:
            if u >> i & 1:
                k &= u
        nbhd.append(k)
    table = [0] * (1 << carrier.size)
    for k in carrier.kernels():
        table[k] = sum(1 << i for i in range(carrier.size) if is_subset(k, nbhd[i]))
    return Convergence.from_table(carrier, table)


def discrete(carrier: Carrier) -> Convergence:
    return generate_convergence(carrier, [])


def antidiscrete(carrier: Carrier) -> Convergence:
    full = carrier.full
    return Convergence.from_table(carrier, [0] + [full] * full)


def open_sets(c: Convergence) -> SetFamily:
    return frozenset(c.full & ~s for s in closed_sets(c))
