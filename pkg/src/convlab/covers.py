"""Covers, Cauchy filters and completeness numbers.

On a finite carrier every proper filter has nonempty adherence, so the
absolute notions are vacuous.  Everything here therefore takes a *target*
set ``A``: "non-adherent" becomes "adherence inside ``A``", and ``A = 0``
gives back the absolute notions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .families import (
    PFilter,
    SetFamily,
    complements,
    down_closure,
    is_subset,
    union_closure,
)
from .search import min_cover
from .space import Convergence, Verdict, adherence, adherence_of_family, is_closed

CoverCollection = Sequence[SetFamily]
FilterCollection = tuple[PFilter, ...]


def is_cover(c: Convergence, family: Iterable[int], kind: str = "cover") -> Verdict:
    """Is ``family`` met by every convergent filter (``cover``) or ultrafilter
    (``pseudocover``)?  The witness is the offending kernel."""
    family = tuple(family)
    if kind == "cover":
        for k in c.carrier.kernels():
            if c.lim(k) and not any(is_subset(k, p) for p in family):
                return Verdict(False, k)
        return Verdict(True)
    if kind == "pseudocover":
        for i in range(c.size):
            if c.lim(1 << i) and not any(p >> i & 1 for p in family):
                return Verdict(False, 1 << i)
        return Verdict(True)
    raise ValueError(f"unknown cover kind {kind!r}")


def cover_criterion(c: Convergence, family: Iterable[int]) -> bool:
    """A family is a cover iff the family of its complements has empty adherence."""
    return adherence_of_family(c, complements(family, c.full)) == 0


def is_cauchy(f: PFilter, collection: CoverCollection, kind: str = "cauchy") -> bool:
    if not f.proper:
        raise ValueError("Cauchy conditions are defined for proper filters only")
    if kind == "cauchy":
        return all(any(is_subset(f.kernel, p) for p in fam) for fam in collection)
    if kind == "preCauchy":
        return all(any(f.kernel & p for p in fam) for fam in collection)
    raise ValueError(f"unknown Cauchy kind {kind!r}")


def is_complete_collection(
    c: Convergence, collection: CoverCollection, kind: str = "complete", target: int = 0
) -> Verdict:
    """Every Cauchy (``complete``) or preCauchy (``ultracomplete``) proper
    filter has adherence escaping ``target``.  Witness: a failing kernel."""
    for fam in collection:
        if not is_cover(c, fam):
            raise ValueError(f"collection member {c.carrier.format_family(fam)} is not a cover")
    cauchy_kind = {"complete": "cauchy", "ultracomplete": "preCauchy"}[kind]
    for k in c.carrier.kernels():
        f = PFilter(k)
        if is_cauchy(f, collection, cauchy_kind) and is_subset(adherence(c, f), target):
            return Verdict(False, f)
    return Verdict(True)


@dataclass(frozen=True)
class IdealTransforms:
    union_down: tuple[SetFamily, ...]
    filter_form: FilterCollection


def ideal_transforms(collection: CoverCollection, full: int) -> IdealTransforms:
    union_down = tuple(down_closure(union_closure(fam)) for fam in collection)
    forms = []
    for fam in union_down:
        # complements of a union-down closed family form the filter whose kernel
        # is the complement of the largest member
        largest = 0
        for p in fam:
            largest |= p
        forms.append(PFilter(full & ~largest))
    return IdealTransforms(union_down, tuple(forms))


def _qualifies(c: Convergence, g: PFilter, target: int) -> bool:
    return is_subset(adherence(c, g), target)


def is_cocomplete_collection(
    c: Convergence, filters: Sequence[PFilter], target: int = 0, kind: str = "cocomplete"
) -> Verdict:
    """Check (ultra)cocompleteness relative to ``target``.

    ``cocomplete``: every proper filter with adherence in ``target`` meshes a
    member.  ``ultracocomplete``: every filter, the degenerate one included,
    with adherence in ``target`` is finer than a member.
    """
    for d in filters:
        if not _qualifies(c, d, target):
            raise ValueError(f"member {c.carrier.format(d.kernel)} has adherence outside the target")
    if kind == "cocomplete":
        for k in c.carrier.kernels():
            g = PFilter(k)
            if _qualifies(c, g, target) and not any(g.meshes(d) for d in filters):
                return Verdict(False, g)
        return Verdict(True)
    if kind == "ultracocomplete":
        for k in range(c.full + 1):
            g = PFilter(k)
            if _qualifies(c, g, target) and not any(g.finer_than(d) for d in filters):
                return Verdict(False, g)
        return Verdict(True)
    raise ValueError(f"unknown cocompleteness kind {kind!r}")


@dataclass(frozen=True)
class CompletenessResult:
    """Minimum collection size under the two conventions.

    ``value``/``witness`` use nonempty collections that may contain the
    degenerate filter (the convention matching paving numbers on the dual);
    ``classic_value``/``classic_witness`` allow the empty collection and proper
    filters only.
    """

    value: int
    witness: FilterCollection
    classic_value: int
    classic_witness: FilterCollection
    kind: str
    target: int


def admissible_filters(c: Convergence, target: int, proper_only: bool = False) -> list[PFilter]:
    start = 1 if proper_only else 0
    return [PFilter(k) for k in range(start, c.full + 1) if _qualifies(c, PFilter(k), target)]


def _search(c: Convergence, target: int, kind: str, classic: bool) -> FilterCollection:
    candidates = admissible_filters(c, target, proper_only=classic)
    if kind == "plain":
        # the degenerate filter meshes nothing and never needs covering
        tests = admissible_filters(c, target, proper_only=True)
        relation = PFilter.meshes
    elif kind == "ultra":
        tests = admissible_filters(c, target, proper_only=classic)
        relation = PFilter.finer_than
    else:
        raise ValueError(f"unknown completeness kind {kind!r}")
    coverage = []
    for d in candidates:
        mask = 0
        for t, g in enumerate(tests):
            if relation(g, d):
                mask |= 1 << t
        coverage.append(mask)
    universe = (1 << len(tests)) - 1
    found = min_cover(universe, coverage, allow_empty=classic)
    if found is None:
        raise AssertionError("no admissible collection exists")
    return tuple(candidates[j] for j in found)


def completeness_number(c: Convergence, target: int = 0, kind: str = "plain") -> CompletenessResult:
    """Smallest (ultra)cocomplete collection relative to a closed ``target``."""
    if not is_closed(c, target):
        raise ValueError(f"target {c.carrier.format(target)} is not closed")
    witness = _search(c, target, kind, classic=False)
    classic = _search(c, target, kind, classic=True)
    return CompletenessResult(len(witness), witness, len(classic), classic, kind, target)
