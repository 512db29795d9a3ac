"""Run the property catalogue over exhaustive and random instances.

Carriers of size at most 3 are covered exhaustively; larger sizes draw
``trials`` random spaces each.  Every trial gets its own sub-seed derived
from ``(seed, size, index)``, so verdicts and transcripts do not depend on
the order in which trials are evaluated.  ``CONVLAB_JOBS`` sets the number
of worker processes (default 1).
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from ..dual import is_star_regular
from ..space import Convergence, is_pseudotopology, reflector_s, reflector_t
from .enumeration import all_convergences, bottom_up_tables, top_down_tables
from .properties import EXHAUSTIVE_CAP, PROPERTIES, Instance, Property
from .rng import SplitMix64, random_space, sub_seed

DENSITIES = (0.15, 0.3, 0.5, 0.7, 0.9)
MAX_TRANSCRIPTS = 3
STAR_ATTEMPTS = 12


@dataclass
class PropertyResult:
    name: str
    probe: bool
    instances: int = 0
    failed: int = 0
    transcripts: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.probe or self.failed == 0


@dataclass
class SuiteReport:
    seed: int
    n_min: int
    n_max: int
    trials: int
    results: list[PropertyResult]
    enumeration: dict[int, tuple[int, int, bool]]
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results) and all(e[2] for e in self.enumeration.values())

    def result(self, name: str) -> PropertyResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def render(self) -> str:
        """Deterministic text form; wall time is left out on purpose."""
        lines = [f"suite seed={self.seed} n={self.n_min}..{self.n_max} trials={self.trials}"]
        for n, (up, down, agree) in sorted(self.enumeration.items()):
            lines.append(f"enumeration n={n} bottom_up={up} top_down={down} agree={str(agree).lower()}")
        for r in self.results:
            if r.probe:
                lines.append(f"probe={r.name} instances={r.instances} observed={r.failed}")
                for t in r.transcripts:
                    lines.append(f"example probe={r.name} {t}")
            else:
                status = "pass" if r.passed else "fail"
                lines.append(f"property={r.name} status={status} instances={r.instances} failures={r.failed}")
                for t in r.transcripts:
                    lines.append(f"counterexample property={r.name} {t}")
        failed = sum(1 for r in self.results if not r.passed)
        lines.append(f"result={'pass' if self.ok else 'fail'} failed_properties={failed}")
        return "\n".join(lines) + "\n"


# -- instance streams ---------------------------------------------------------


def trial_seed(seed: int, n: int, index: int) -> int:
    return sub_seed(sub_seed(seed, n), index)


def random_trial(seed: int, n: int, index: int) -> Instance:
    s = trial_seed(seed, n, index)
    conv = random_space(s, n, DENSITIES[index % len(DENSITIES)])
    return Instance(n, index, "random", s, conv)


def star_regular_trial(seed: int, n: int, index: int) -> Instance:
    """A *-regular space drawn by rejection.

    Raw draws and their pseudotopological reflections are tried first; if
    none qualifies, the topological reflection of the last draw is used,
    which is always *-regular.
    """
    s = trial_seed(seed ^ 0x57A2, n, index)
    rng = SplitMix64(s)
    draw = None
    for attempt in range(STAR_ATTEMPTS):
        draw = random_space(rng.next_u64(), n, DENSITIES[rng.below(3)])
        if attempt % 2:
            draw = reflector_s(draw).tabulate()
        if is_star_regular(draw):
            return Instance(n, index, "star-regular", s, draw)
    return Instance(n, index, "star-regular", s, reflector_t(draw).tabulate())


@lru_cache(maxsize=None)
def _exhaustive_pool(n: int, domain: str) -> tuple[int, ...]:
    """Indices of the enumerated spaces belonging to ``domain``."""
    pool = all_convergences(n)
    if domain == "star-regular":
        return tuple(i for i, c in enumerate(pool) if is_star_regular(c))
    if domain == "pseudotopology":
        return tuple(i for i, c in enumerate(pool) if is_pseudotopology(c))
    return tuple(range(len(pool)))


def _instances(prop: Property, n: int, seed: int, trials: int, start: int, stop: int) -> Iterable[Instance]:
    if n <= EXHAUSTIVE_CAP:
        pool = all_convergences(n)
        for i in _exhaustive_pool(n, prop.domain)[start:stop]:
            yield Instance(n, i, "exhaustive", trial_seed(seed, n, i), pool[i])
        return
    for i in range(start, min(stop, trials)):
        if prop.domain == "star-regular":
            yield star_regular_trial(seed, n, i)
            continue
        inst = random_trial(seed, n, i)
        if prop.domain == "pseudotopology":
            conv: Convergence = reflector_s(inst.conv).tabulate()
            inst = Instance(n, i, inst.regime, inst.seed, conv)
        yield inst


def _stream_size(prop: Property, n: int, trials: int) -> int:
    if n <= EXHAUSTIVE_CAP:
        return len(_exhaustive_pool(n, prop.domain))
    return trials


# -- running ------------------------------------------------------------------


def _run_chunk(task: tuple[str, int, int, int, int, int]) -> tuple[int, int, list[str]]:
    name, n, seed, trials, start, stop = task
    prop = PROPERTIES[name]
    count = failed = 0
    transcripts: list[str] = []
    for inst in _instances(prop, n, seed, trials, start, stop):
        count += 1
        problems = prop.check(inst)
        if problems:
            failed += 1
            if len(transcripts) < MAX_TRANSCRIPTS:
                transcripts.append(f"instance={inst.label()} detail={problems[0]} space={inst.conv.describe()}")
    return count, failed, transcripts


def _jobs() -> int:
    raw = os.environ.get("CONVLAB_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _chunks(prop: Property, n: int, seed: int, trials: int, jobs: int) -> list[tuple]:
    size = _stream_size(prop, n, trials)
    step = max(1, -(-size // (jobs * 4))) if jobs > 1 else max(size, 1)
    return [(prop.name, n, seed, trials, lo, lo + step) for lo in range(0, size, step)]


def select_properties(props: Optional[Sequence[str]]) -> list[Property]:
    if not props:
        return list(PROPERTIES.values())
    unknown = [p for p in props if p not in PROPERTIES]
    if unknown:
        raise KeyError(f"unknown properties: {', '.join(unknown)}")
    return [PROPERTIES[p] for p in PROPERTIES if p in props]


def run_suite(
    n_min: int = 1,
    n_max: int = 5,
    trials: int = 300,
    seed: int = 1,
    props: Optional[Sequence[str]] = None,
) -> SuiteReport:
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    if n_max > 5:
        raise ValueError("the suite is limited to carriers of size <= 5")
    started = time.perf_counter()
    chosen = select_properties(props)
    enumeration = {}
    if "axioms" in {p.name for p in chosen}:
        for n in range(n_min, min(n_max, EXHAUSTIVE_CAP) + 1):
            up, down = bottom_up_tables(n), top_down_tables(n)
            enumeration[n] = (len(up), len(down), set(up) == set(down) and len(up) == len(set(up)))
    tasks: list[tuple] = []
    owners: list[int] = []
    jobs = _jobs()
    for pi, prop in enumerate(chosen):
        for n in range(n_min, n_max + 1):
            if prop.max_n is not None and n > prop.max_n:
                continue
            for task in _chunks(prop, n, seed, trials, jobs):
                tasks.append(task)
                owners.append(pi)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_chunk, tasks))
    else:
        outcomes = [_run_chunk(t) for t in tasks]
    results = [PropertyResult(p.name, p.probe) for p in chosen]
    for pi, (count, failed, transcripts) in zip(owners, outcomes):
        r = results[pi]
        r.instances += count
        r.failed += failed
        room = MAX_TRANSCRIPTS - len(r.transcripts)
        r.transcripts.extend(transcripts[:room])
    report = SuiteReport(seed, n_min, n_max, trials, results, enumeration)
    report.wall_time = time.perf_counter() - started
    return report
