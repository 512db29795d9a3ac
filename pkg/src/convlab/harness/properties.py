"""The property catalogue run by the suite.

Every check takes one instance and returns a list of failure messages (empty
on success).  Probes use the same signature but report observations instead
of failures; they look for things that are expected to happen sometimes and
never fail the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Optional

from ..covers import (
    completeness_number,
    cover_criterion,
    ideal_transforms,
    is_cauchy,
    is_cocomplete_collection,
    is_complete_collection,
    is_cover,
)
from ..dual import (
    DualSpace,
    alexandroff,
    is_bullet_regular,
    is_reciprocal,
    is_star_regular,
    is_t1,
)
from ..families import PFilter, bits, is_subset, submasks
from ..graph import dual_dagger_form, graph_of
from ..maps import SpaceMap, cover_image, final_convergence, initial_convergence, is_continuous, map_class
from ..oracles import (
    closed_sets_by_definition,
    dagger_closure_by_definition,
    dual_lim_by_definition,
    naive_completeness,
    naive_paving,
)
from ..paving import KINDS, convergent_points, is_pavement, maximal_convergent_kernels, paving_number
from ..space import (
    Convergence,
    adherence,
    adherence_by_mesh,
    closed_sets,
    closure_of,
    compact_parts,
    finer_than,
    first_coarser_kernel,
    is_pseudotopology,
    is_topological,
    reflector_s,
    reflector_t,
    validate,
)
from .duality import duality_check
from .enumeration import all_convergences
from .rng import SplitMix64, random_space
from .spacefile import parse_space, serialize_space

NAIVE_PAVING_CAP = 4
FULL_DUAL_CAP = 10
DUAL_SAMPLE = 256
EXHAUSTIVE_CAP = 3


@dataclass(frozen=True)
class Instance:
    n: int
    index: int
    regime: str  # "exhaustive" | "random" | "star-regular"
    seed: int
    conv: Convergence

    @property
    def exhaustive(self) -> bool:
        return self.regime == "exhaustive"

    def rng(self, salt: int) -> SplitMix64:
        return SplitMix64(self.seed ^ salt)

    def label(self) -> str:
        return f"n={self.n} {self.regime}#{self.index}"


Check = Callable[[Instance], list]


@dataclass(frozen=True)
class Property:
    name: str
    check: Check
    domain: str = "all"  # "all" | "star-regular" | "pseudotopology"
    max_n: Optional[int] = None
    probe: bool = False
    salt: int = 0


def _fmt(c: Convergence, k: int) -> str:
    return c.carrier.format(k)


def _dual_kernels(d: DualSpace, rng: SplitMix64) -> list[int]:
    top = (1 << d.size) - 1
    if d.size <= FULL_DUAL_CAP:
        return list(range(1, top + 1))
    return sorted({rng.below(top) + 1 for _ in range(DUAL_SAMPLE)})


def _union_conv(c: Convergence, e: Convergence) -> Convergence:
    """Pointwise union of two lawful convergences (lawful and coarser than both)."""
    table = [0] + [c.lim(k) | e.lim(k) for k in c.carrier.kernels()]
    return Convergence.from_table(c.carrier, table)


def _partner(inst: Instance, rng: SplitMix64) -> Convergence:
    if inst.n <= EXHAUSTIVE_CAP:
        pool = all_convergences(inst.n)
        return pool[rng.below(len(pool))]
    return random_space(rng.next_u64(), inst.n, 0.5)


# -- space ------------------------------------------------------------------


def check_axioms(inst: Instance) -> list:
    c = inst.conv
    out = [f"validate: {v}" for v in validate(c)]
    if parse_space(serialize_space(c, "roundtrip")) != c:
        out.append("serialize/parse round trip changed the space")
    for name, view in (("S", reflector_s(c)), ("T", reflector_t(c))):
        for v in validate(view):
            out.append(f"reflector {name}: {v}")
    if closed_sets(c) != closed_sets_by_definition(c):
        out.append("closed sets disagree with the definition")
    return out


def check_adherence(inst: Instance) -> list:
    c = inst.conv
    out = []
    for k in range(c.full + 1):
        f = PFilter(k)
        a, b = adherence(c, f), adherence_by_mesh(c, f)
        if a != b:
            out.append(f"kernel {_fmt(c, k)}: point form {_fmt(c, a)} vs mesh form {_fmt(c, b)}")
    return out


def check_reflectors(inst: Instance) -> list:
    c = inst.conv
    s, t = reflector_s(c).tabulate(), reflector_t(c).tabulate()
    out = []

    def need(ok: bool, msg: str) -> None:
        if not ok:
            out.append(msg)

    need(finer_than(c, s), "S(c) is not coarser than c")
    need(finer_than(c, t), "T(c) is not coarser than c")
    need(finer_than(s, t), f"S(c) not finer than T(c) at {first_coarser_kernel(s, t)}")
    need(reflector_s(s) == s, "S is not idempotent")
    need(reflector_t(t) == t, "T is not idempotent")
    need(reflector_t(s) == t, "T(S(c)) differs from T(c)")
    need(is_pseudotopology(s), "S(c) is not a pseudotopology")
    need(is_topological(t), "T(c) is not topological")
    need(closed_sets(c) == closed_sets(t), "closed sets of c and T(c) differ")
    for k in range(c.full + 1):
        if adherence(c, PFilter(k)) != adherence(s, PFilter(k)):
            out.append(f"adherence changes under S at {_fmt(c, k)}")
    d = _union_conv(c, _partner(inst, inst.rng(0x5EED)))
    need(finer_than(c, d), "union partner is not coarser")
    need(finer_than(s, reflector_s(d)), "S is not monotone")
    need(finer_than(t, reflector_t(d)), "T is not monotone")
    return out


def check_compactness(inst: Instance) -> list:
    c = inst.conv
    parts = compact_parts(c)
    out = []
    if len(parts.compactoids) != c.full + 1:
        out.append("some subset is not compactoid")
    if parts.cocompactoid.proper:
        out.append("cocompactoid filter is not degenerate")
    if not parts.locally_compactoid:
        out.append("not locally compactoid")
    for i in range(c.size):
        if 1 << i not in parts.compacts:
            out.append(f"singleton {c.carrier.names[i]} is not compact")
    for a in parts.compactoids:
        for b in parts.compactoids:
            if a | b not in parts.compactoids:
                out.append("compactoids are not union-closed")
    for a in parts.compactoids:
        if any(s not in parts.compactoids for s in submasks(a)):
            out.append("compactoids are not down-closed")
    if completeness_number(c, 0, "plain").classic_value != 0:
        out.append("classic-convention completeness at the empty target is not 0")
    return out


# -- covers -----------------------------------------------------------------


def _small_families(full: int) -> list[frozenset]:
    subsets = range(full + 1)
    return [frozenset(f) for r in (1, 2, 3) for f in combinations(subsets, r)]


def _random_family(rng: SplitMix64, full: int, size: int) -> frozenset:
    return frozenset(rng.below(full + 1) for _ in range(size))


def _random_cover(c: Convergence, rng: SplitMix64) -> frozenset:
    fam = set(_random_family(rng, c.full, 1 + rng.below(3)))
    while True:
        verdict = is_cover(c, fam)
        if verdict:
            return frozenset(fam)
        # add a random superset of the uncovered kernel
        fam.add(verdict.witness | rng.below(c.full + 1))


def _convergent_signature(c: Convergence) -> tuple[int, ...]:
    return tuple(k for k in c.carrier.kernels() if c.lim(k))


def _collection_checks(c: Convergence, collection: list, target: int) -> list:
    out = []
    transforms = ideal_transforms(collection, c.full)
    union_down = list(transforms.union_down)
    for kind, co_kind in (("complete", "cocomplete"), ("ultracomplete", "ultracocomplete")):
        a = is_complete_collection(c, collection, kind, target).ok
        b = is_complete_collection(c, union_down, kind, target).ok
        f = is_cocomplete_collection(c, transforms.filter_form, target, co_kind).ok
        if not a == b == f:
            out.append(
                f"{kind} at target {_fmt(c, target)} for {[c.carrier.format_family(p) for p in collection]}: "
                f"collection={a} union-down={b} filter-form={f}"
            )
    return out


_COVER_CACHE: dict[tuple, tuple[str, ...]] = {}


def _cover_results(c: Convergence) -> tuple[str, ...]:
    """Cover criterion and the union-down equivalences over every collection
    of at most two small cover families, at the empty target.

    Everything checked here reads the space only through which kernels
    converge, so results are shared between spaces with the same signature.
    """
    key = (c.size, _convergent_signature(c))
    if key in _COVER_CACHE:
        return _COVER_CACHE[key]
    out = []
    covers = []
    for fam in _small_families(c.full):
        verdict = bool(is_cover(c, fam))
        if verdict != cover_criterion(c, fam):
            out.append(f"cover criterion disagrees on {c.carrier.format_family(fam)}")
        if verdict:
            covers.append(fam)
    collections = [[p] for p in covers] + [list(pair) for pair in combinations(covers, 2)]
    for coll in collections:
        out.extend(_collection_checks(c, coll, 0))
    _COVER_CACHE[key] = tuple(out)
    return _COVER_CACHE[key]


def check_covers(inst: Instance) -> list:
    c = inst.conv
    out: list = []
    rng = inst.rng(0xC0)
    targets = sorted(closed_sets(c))
    if inst.exhaustive:
        out.extend(_cover_results(c))
    else:
        for _ in range(30):
            fam = _random_family(rng, c.full, 1 + rng.below(4))
            if bool(is_cover(c, fam)) != cover_criterion(c, fam):
                out.append(f"cover criterion disagrees on {c.carrier.format_family(fam)}")
    for _ in range(4):
        coll = [_random_cover(c, rng) for _ in range(1 + rng.below(2))]
        for a in targets:
            out.extend(_collection_checks(c, coll, a))
    for a in targets:
        plain = completeness_number(c, a, "plain")
        ultra = completeness_number(c, a, "ultra")
        if plain.value > ultra.value or plain.classic_value > ultra.classic_value:
            out.append(f"compl exceeds ucompl at target {_fmt(c, a)}")
        if not is_cocomplete_collection(c, plain.witness, a, "cocomplete"):
            out.append(f"plain witness fails at {_fmt(c, a)}")
        if not is_cocomplete_collection(c, ultra.witness, a, "ultracocomplete"):
            out.append(f"ultra witness fails at {_fmt(c, a)}")
        if inst.n <= EXHAUSTIVE_CAP:
            for res, kind in ((plain, "plain"), (ultra, "ultra")):
                if res.value != naive_completeness(c, a, kind):
                    out.append(f"{kind} value {res.value} differs from enumeration at {_fmt(c, a)}")
                if res.classic_value != naive_completeness(c, a, kind, classic=True):
                    out.append(f"{kind} classic value differs from enumeration at {_fmt(c, a)}")
    return out


def _precauchy_pairs(c: Convergence, collection: list) -> list:
    out = []
    union_down = list(ideal_transforms(collection, c.full).union_down)
    for k in c.carrier.kernels():
        f = PFilter(k)
        if is_cauchy(f, collection, "preCauchy") != is_cauchy(f, union_down, "preCauchy"):
            out.append(f"preCauchy changes under union-down at {_fmt(c, k)}")
        if is_cauchy(f, collection, "cauchy") and not is_cauchy(f, union_down, "cauchy"):
            out.append(f"Cauchy filter {_fmt(c, k)} lost under union-down")
    return out


@lru_cache(maxsize=None)
def _precauchy_exhaustive(size: int) -> tuple[str, ...]:
    c = all_convergences(size)[0]
    fams = _small_families(c.full)
    out = []
    for coll in [[p] for p in fams] + [list(pair) for pair in combinations(fams, 2)]:
        out.extend(_precauchy_pairs(c, coll))
    return tuple(out)


def check_precauchy(inst: Instance) -> list:
    c = inst.conv
    if inst.exhaustive:
        # the Cauchy conditions do not involve the convergence at all
        return list(_precauchy_exhaustive(c.size))
    rng = inst.rng(0x9C)
    out = []
    for _ in range(20):
        coll = [_random_cover(c, rng) for _ in range(1 + rng.below(3))]
        out.extend(_precauchy_pairs(c, coll))
    return out


# -- dual -------------------------------------------------------------------


def check_rdc_erected(inst: Instance) -> list:
    c = inst.conv
    d = DualSpace(c)
    pair = alexandroff(c)
    t1 = is_t1(c)
    out = []
    for k in c.carrier.kernels():
        comp = d.rdc(d.erected(k))
        if not is_subset(comp, k):
            out.append(f"rdc(e({_fmt(c, k)})) = {_fmt(c, comp)} is not finer")
        if comp != pair.star_interior(k, c.full):
            out.append(f"rdc(e({_fmt(c, k)})) differs from the star interior")
        if t1 and comp != k:
            out.append(f"T1 space but rdc(e({_fmt(c, k)})) != kernel")
        b = pair.bullet(k)
        if d.rdc(d.erected(b)) != b:
            out.append(f"bullet closure of {_fmt(c, k)} is not reduced")
    for g in _dual_kernels(d, inst.rng(0xD1)):
        sat = d.saturate(PFilter(g))
        if not is_subset(g, sat.kernel):
            out.append(f"saturation of {d.format(g)} is not coarser")
        if d.saturate(sat) != sat:
            out.append(f"saturation of {d.format(g)} is not idempotent")
        if d.rdc(sat.kernel) != d.rdc(g):
            out.append(f"saturation changes the reduced filter of {d.format(g)}")
    return out


def check_regularity(inst: Instance) -> list:
    c = inst.conv
    out = []
    if not is_star_regular(reflector_t(c).tabulate()):
        out.append("the topological reflection is not *-regular")
    pair = alexandroff(c)
    star_reg, bullet_reg = is_star_regular(c), is_bullet_regular(c)
    for k in c.carrier.kernels():
        adh = adherence(c, PFilter(k))
        if star_reg and adh != adherence(c, PFilter(pair.bullet(k))):
            out.append(f"*-regular but adherence moves under bullet closure at {_fmt(c, k)}")
        if bullet_reg and adh != adherence(c, PFilter(pair.star(k))):
            out.append(f"bullet-regular but adherence moves under star closure at {_fmt(c, k)}")
    for a in c.carrier.kernels():
        for b in c.carrier.kernels():
            if bool(a & pair.bullet(b)) != bool(pair.star(a) & b):
                out.append(f"mesh adjunction fails at {_fmt(c, a)}, {_fmt(c, b)}")
    for s in range(c.full + 1):
        if (pair.star_interior(s, c.full) == s) != (pair.bullet(s) == s):
            out.append(f"{_fmt(c, s)}: star-open and bullet-closed disagree")
    if is_reciprocal(c) and any(pair.star(s) != pair.bullet(s) for s in range(c.full + 1)):
        out.append("reciprocal but star and bullet closures differ")
    return out


def check_dual(inst: Instance) -> list:
    c = inst.conv
    d = DualSpace(c)
    dc = d.conv
    out = []
    g = graph_of(dc)
    if g.roots() != 1:
        out.append(f"dual roots {d.format(g.roots())} != {{[]}}")
    if g.ends() != 1 << (d.size - 1):
        out.append(f"dual ends {d.format(g.ends())} != {{X}}")
    nl = g.not_left_all()
    for j, cj in enumerate(d.closed):
        expect = sum(1 << i for i, ci in enumerate(d.closed) if not ci & cj)
        if nl[j] != expect:
            out.append(f"dual non-left set of {d.carrier.names[j]} is not the disjoint closed sets")
    for j in range(d.size):
        if not dc.lim(1 << j) >> j & 1:
            out.append(f"dual is not centered at {d.carrier.names[j]}")
    points = dc.point_limits()
    topo = reflector_t(c).tabulate()
    td = DualSpace(topo)
    for k in _dual_kernels(d, inst.rng(0xD2)):
        lim = dc.lim(k)
        if lim != dual_lim_by_definition(c, d.closed, k):
            out.append(f"dual rule disagrees with the definition at {d.format(k)}")
        meet = (1 << d.size) - 1
        for j in bits(k):
            meet &= points[j]
        if lim != meet:
            out.append(f"dual is not pseudotopological at {d.format(k)}")
        for j in bits(k):
            if k != 1 << j and not is_subset(lim, dc.lim(k & ~(1 << j))):
                out.append(f"dual is not antitone at {d.format(k)}")
    for k in _dual_kernels(td, inst.rng(0xD3)):
        if td.conv.lim(k) != td.upper_kuratowski_lim(k):
            out.append(f"upper Kuratowski form differs on the topological reflection at {td.format(k)}")
    return out


# -- graph ------------------------------------------------------------------


def check_dagger_closure(inst: Instance) -> list:
    c = inst.conv
    g = graph_of(c)
    nl = g.not_left_all()
    roots = g.roots()
    out = []
    closures = [g.dagger_closure(s, nl) for s in range(c.full + 1)]
    # exact form of the closure of the empty set: points whose backward
    # neighbourhood consists of roots
    base = sum(1 << x for x, back in enumerate(g.backward) if is_subset(back, roots))
    if closures[0] != base:
        out.append(f"closure of the empty set {_fmt(c, closures[0])} != {_fmt(c, base)}")
    if _arrows_into_roots_from_roots(g) and closures[0] != roots:
        out.append("roots only reached from roots, yet the closure of the empty set is not the root set")
    simple = is_t1(c) and c.size >= 2 and roots == 0 and g.ends() == 0
    for s, cl in enumerate(closures):
        if not is_subset(s, cl):
            out.append(f"not extensive at {_fmt(c, s)}")
        if closures[cl] != cl:
            out.append(f"not idempotent at {_fmt(c, s)}")
        for y in range(c.size):
            if not is_subset(cl, closures[s | 1 << y]):
                out.append(f"not monotone at {_fmt(c, s)} + {c.carrier.names[y]}")
        if cl != dagger_closure_by_definition(c, s):
            out.append(f"closure of {_fmt(c, s)} differs from the definition")
        left, right = c.full, c.full
        for a in bits(cl):
            left &= nl[a]
        for a in bits(s):
            right &= nl[a]
        if left != right:
            out.append(f"non-left intersection changes under closure at {_fmt(c, s)}")
        if simple and cl != s:
            out.append(f"T1 space without roots or ends but closure moves {_fmt(c, s)}")
    return out


def _arrows_into_roots_from_roots(g) -> bool:
    roots = g.roots()
    return all(is_subset(g.backward[r], roots) for r in bits(roots))


def check_dagger_roots(inst: Instance) -> list:
    """The closure of the empty set is the root set, and the closure is
    grounded exactly when there is no root."""
    c = inst.conv
    g = graph_of(c)
    roots = g.roots()
    empty = g.dagger_closure(0)
    out = []
    if empty != roots:
        out.append(f"closure of the empty set {_fmt(c, empty)} != roots {_fmt(c, roots)}")
    if (empty == 0) != (roots == 0):
        out.append(f"grounded={empty == 0} but rootless={roots == 0}")
    return out


def check_dagger_dual(inst: Instance) -> list:
    c = inst.conv
    d = DualSpace(c)
    g = graph_of(d.conv)
    nl = g.not_left_all()
    recip = is_reciprocal(c)
    out = []
    for k in [0] + _dual_kernels(d, inst.rng(0xDA)):
        via_graph = g.dagger_closure(k, nl)
        via_base = dual_dagger_form(d, d.members(k))
        if via_graph != via_base:
            out.append(f"dual dagger closure of {d.format(k)}: graph {d.format(via_graph)} vs base {d.format(via_base)}")
        if recip and via_graph != d.erected(d.rdc(k)):
            out.append(f"reciprocal base but closure of {d.format(k)} is not e(rdc)")
    return out


# -- paving -----------------------------------------------------------------


def check_paving(inst: Instance) -> list:
    c = inst.conv
    pseudo_top = is_pseudotopology(c)
    out = []
    for x in range(c.size):
        name = c.carrier.names[x]
        values = {}
        for kind in KINDS:
            r = paving_number(c, x, kind)
            values[kind] = r.value
            if not is_pavement(c, r.witness, x, kind):
                out.append(f"{kind} witness at {name} is not a {kind}")
            if inst.n <= NAIVE_PAVING_CAP and r.value != naive_paving(c, x, kind):
                out.append(f"{kind} at {name}: {r.value} vs enumeration {naive_paving(c, x, kind)}")
        if not values["dagger"] <= values["pseudo"] <= values["pavement"]:
            out.append(f"order dagger <= pseudo <= pavement fails at {name}: {values}")
        conv = [k for k in c.carrier.kernels() if c.lim(k) >> x & 1]
        maximal = [k for k in conv if not any(k != o and is_subset(k, o) for o in conv)]
        if values["pavement"] != len(maximal):
            out.append(f"pavement at {name} is not the count of maximal convergent kernels")
        if pseudo_top and (values["pavement"], values["pseudo"]) != (1, 1):
            out.append(f"pseudotopology with paving numbers {values} at {name}")
    return out


def check_paving_saturation(inst: Instance) -> list:
    d = DualSpace(inst.conv)
    out = []
    for a in range(d.size):
        r = paving_number(d.conv, a, "pavement")
        sat = tuple(sorted({d.saturate(m) for m in r.witness}))
        if len(sat) != r.value or not is_pavement(d.conv, sat, a, "pavement"):
            out.append(f"saturated pavement at {d.carrier.names[a]} fails")
    return out


def _three_conditions(c: Convergence, x: int, kernels: tuple) -> tuple[bool, bool, bool]:
    first = bool(is_pavement(c, [PFilter(k) for k in kernels], x, "pseudo"))
    second = all(
        any(k & f for k in kernels) for f in c.carrier.kernels() if c.lim(f) >> x & 1
    )
    union = 0
    for k in kernels:
        union |= k
    third = union == convergent_points(c, x)
    return first, second, third


def _candidate_collections(c: Convergence, x: int, rng: SplitMix64, exhaustive: bool):
    conv = [k for k in c.carrier.kernels() if c.lim(k) >> x & 1]
    if exhaustive and len(conv) <= 8:
        for r in range(len(conv) + 1):
            yield from combinations(conv, r)
        return
    for _ in range(64):
        yield tuple(k for k in conv if rng.below(2))


def check_pseudopavement(inst: Instance) -> list:
    c = inst.conv
    rng = inst.rng(0x99)
    out = []
    for x in range(c.size):
        for coll in _candidate_collections(c, x, rng, inst.exhaustive):
            conds = _three_conditions(c, x, coll)
            if len(set(conds)) != 1:
                out.append(f"at {c.carrier.names[x]} with {[_fmt(c, k) for k in coll]}: conditions {conds}")
    return out


# -- duality ----------------------------------------------------------------


def _duality_rows(inst: Instance):
    return duality_check(inst.conv)


def check_duality_ultra(inst: Instance) -> list:
    c = inst.conv
    rows = _duality_rows(inst)
    out = [
        f"target {_fmt(c, r.target)}: ucompl {r.ucompl} vs dual pavement {r.pavement}"
        for r in rows
        if not r.equal_ultra
    ]
    if inst.n <= EXHAUSTIVE_CAP:
        d = DualSpace(c)
        for r in rows:
            if r.ucompl != naive_completeness(c, r.target, "ultra"):
                out.append(f"ucompl at {_fmt(c, r.target)} differs from enumeration")
            if d.size <= 8 and r.pavement != naive_paving(d.conv, d.point(r.target), "pavement"):
                out.append(f"dual pavement at {_fmt(c, r.target)} differs from enumeration")
    return out


def check_duality_plain(inst: Instance) -> list:
    c = inst.conv
    rows = _duality_rows(inst)
    out = [
        f"target {_fmt(c, r.target)}: compl {r.compl} vs dual dagger pseudopavement {r.dagger}"
        for r in rows
        if not r.equal_plain
    ]
    notes = [r for r in rows if r.note]
    if len(notes) != 1 or notes[0].target != 0 or notes[0].classic_compl != 0:
        out.append(f"expected exactly one classic-convention note on the empty target, got {len(notes)}")
    if inst.n <= EXHAUSTIVE_CAP:
        d = DualSpace(c)
        for r in rows:
            if r.compl != naive_completeness(c, r.target, "plain"):
                out.append(f"compl at {_fmt(c, r.target)} differs from enumeration")
            if d.size <= 8 and r.dagger != naive_paving(d.conv, d.point(r.target), "dagger"):
                out.append(f"dual dagger value at {_fmt(c, r.target)} differs from enumeration")
    return out


# -- maps -------------------------------------------------------------------


def _targets_for(inst: Instance, rng: SplitMix64) -> list[Convergence]:
    if inst.n <= 2:
        return [t for m in (1, 2) for t in all_convergences(m)]
    m = 1 + rng.below(3)
    pool = all_convergences(m)
    return [pool[rng.below(len(pool))]]


def _all_maps(source: Convergence, target: Convergence):
    n, m = source.size, target.size
    for code in range(m**n):
        images = []
        for _ in range(n):
            images.append(code % m)
            code //= m
        yield SpaceMap(source, target, tuple(images))


def _maximal_cover(c: Convergence) -> frozenset:
    """The convergent kernels that are maximal; every cover refines to it."""
    conv = [k for k in c.carrier.kernels() if c.lim(k)]
    return frozenset(k for k in conv if not any(k != o and is_subset(k, o) for o in conv))


def check_maps(inst: Instance) -> list:
    c = inst.conv
    rng = inst.rng(0x3A)
    out = []
    tight = _maximal_cover(c)
    ideal = frozenset(range(c.full + 1))  # the only union-down closed cover
    for t in _targets_for(inst, rng):
        for m in _all_maps(c, t):
            tag = f"map {m.images} into {t.describe()}"
            cont = bool(is_continuous(m))
            init = initial_convergence(m)
            if validate(init):
                out.append(f"{tag}: initial convergence is not lawful")
            if cont != finer_than(c, init):
                out.append(f"{tag}: continuity disagrees with the initial convergence")
            if not m.onto:
                continue
            fin = final_convergence(m)
            if validate(fin):
                out.append(f"{tag}: final convergence is not lawful")
            if cont != finer_than(fin, t):
                out.append(f"{tag}: continuity disagrees with the final convergence")
            if not cont:
                continue
            mc = map_class(m)
            if (mc.almost_open and not mc.biquotient) or (mc.biquotient and not mc.quotient):
                out.append(f"{tag}: class chain broken {mc}")
            if mc.almost_open:
                for fam in (tight, _random_cover(c, rng)):
                    if not is_cover(t, cover_image(m, fam)):
                        out.append(f"{tag}: almost open but a cover image is not a cover")
            if mc.biquotient:
                if not is_cover(t, cover_image(m, ideal)):
                    out.append(f"{tag}: biquotient but the ideal cover image is not a cover")
                src = completeness_number(c, 0, "ultra")
                dst = completeness_number(t, 0, "ultra")
                if dst.value > src.value or dst.classic_value > src.classic_value:
                    out.append(f"{tag}: absolute ultra completeness grows along a biquotient map")
    return out


# -- probes -----------------------------------------------------------------


def probe_dagger_additivity(inst: Instance) -> list:
    c = inst.conv
    g = graph_of(c)
    nl = g.not_left_all()
    cl = [g.dagger_closure(s, nl) for s in range(c.full + 1)]
    for a in range(c.full + 1):
        for b in range(a, c.full + 1):
            if cl[a | b] != cl[a] | cl[b]:
                return [f"cl({_fmt(c, a | b)})={_fmt(c, cl[a | b])} but cl({_fmt(c, a)}) u cl({_fmt(c, b)})={_fmt(c, cl[a] | cl[b])}"]
    return []


def probe_pseudopavement_nonpseudo(inst: Instance) -> list:
    c = inst.conv
    if is_pseudotopology(c):
        return []
    rng = inst.rng(0x98)
    for x in range(c.size):
        for coll in _candidate_collections(c, x, rng, inst.exhaustive):
            conds = _three_conditions(c, x, coll)
            if len(set(conds)) != 1:
                return [f"at {c.carrier.names[x]} with {[_fmt(c, k) for k in coll]}: conditions {conds}"]
    return []


def probe_image_cover_nonideal(inst: Instance) -> list:
    c = inst.conv
    rng = inst.rng(0x3B)
    tight = _maximal_cover(c)
    for t in _targets_for(inst, rng):
        for m in _all_maps(c, t):
            if not m.onto or not is_continuous(m) or not map_class(m).biquotient:
                continue
            image = cover_image(m, tight)
            if not is_cover(t, image):
                return [f"map {m.images} into {t.describe()}: image {t.carrier.format_family(image)} of cover {c.carrier.format_family(tight)} is not a cover"]
    return []


def probe_biquotient_relative(inst: Instance) -> list:
    c = inst.conv
    rng = inst.rng(0x3C)
    for t in _targets_for(inst, rng):
        for m in _all_maps(c, t):
            if not m.onto or not is_continuous(m) or not map_class(m).biquotient:
                continue
            for a in sorted(closed_sets(c)):
                b = closure_of(t, m.image(a))
                src = completeness_number(c, a, "ultra").value
                dst = completeness_number(t, b, "ultra").value
                if dst > src:
                    return [f"map {m.images}: ucompl grows from {src} at {_fmt(c, a)} to {dst} at {t.carrier.format(b)}"]
    return []


PROPERTIES: dict[str, Property] = {
    p.name: p
    for p in [
        Property("axioms", check_axioms, salt=1),
        Property("adherence", check_adherence, salt=2),
        Property("reflectors", check_reflectors, salt=3),
        Property("compactness", check_compactness, salt=4),
        Property("covers", check_covers, salt=5),
        Property("precauchy", check_precauchy, salt=6),
        Property("rdc-erected", check_rdc_erected, salt=7),
        Property("regularity", check_regularity, salt=8),
        Property("dual", check_dual, salt=9),
        Property("dagger-closure", check_dagger_closure, salt=10),
        Property("dagger-roots", check_dagger_roots, salt=22),
        Property("dagger-dual", check_dagger_dual, max_n=4, salt=11),
        Property("paving", check_paving, salt=12),
        Property("paving-saturation", check_paving_saturation, salt=13),
        Property("pseudopavement", check_pseudopavement, domain="pseudotopology", salt=14),
        Property("duality-ultra", check_duality_ultra, domain="star-regular", max_n=4, salt=15),
        Property("duality-plain", check_duality_plain, domain="star-regular", max_n=4, salt=16),
        Property("maps", check_maps, max_n=3, salt=17),
        Property("probe-dagger-additivity", probe_dagger_additivity, probe=True, salt=18),
        Property("probe-pseudopavement-nonpseudo", probe_pseudopavement_nonpseudo, max_n=4, probe=True, salt=19),
        Property("probe-image-cover-nonideal", probe_image_cover_nonideal, max_n=3, probe=True, salt=20),
        Property("probe-biquotient-relative", probe_biquotient_relative, max_n=2, probe=True, salt=21),
    ]
}
