"""Line-oriented text format for spaces and maps.

Space file::

    # comments start with '#'
    space: chain
    points: a b c
    mode: topology            # or: explicit | generators
    open: {} {a} {a,b} {a,b,c}

``explicit`` and ``generators`` modes use ``lim: {a,b} -> {b,c}`` entries.
An explicit table must list every nonempty kernel exactly once.

Map file: one ``map: a -> p`` line per source point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..families import MAX_CARRIER, Carrier, CapacityError, sorted_family
from ..maps import SpaceMap
from ..space import Convergence, generate_convergence, require_valid, topology_convergence

MODES = ("explicit", "generators", "topology")
_LABEL = re.compile(r"^[^\s{},#]+$")
_SET = re.compile(r"\{[^{}\s]*\}")


class SpaceFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class SpaceFile:
    name: str
    carrier: Carrier
    mode: str
    conv: Convergence


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def _parse_set(carrier: Carrier, token: str, lineno: int) -> int:
    if not _SET.fullmatch(token):
        raise SpaceFileError(f"malformed set literal {token!r}", lineno)
    try:
        return carrier.parse(token)
    except KeyError as exc:
        raise SpaceFileError(str(exc.args[0]), lineno) from None


def parse_space_file(text: str) -> SpaceFile:
    name = "unnamed"
    carrier: Carrier | None = None
    mode: str | None = None
    lims: list[tuple[int, int, int]] = []
    opens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise SpaceFileError(f"expected 'key: value', got {line!r}", lineno)
        key, value = key.strip(), value.strip()
        if key == "space":
            name = value
        elif key == "points":
            labels = value.split()
            bad = [l for l in labels if not _LABEL.match(l) or "->" in l]
            if bad:
                raise SpaceFileError(f"invalid labels {bad}", lineno)
            if len(labels) > MAX_CARRIER:
                raise CapacityError(f"line {lineno}: {len(labels)} points exceed cap {MAX_CARRIER}")
            try:
                carrier = Carrier(tuple(labels))
            except ValueError as exc:
                raise SpaceFileError(str(exc), lineno) from None
        elif key == "mode":
            if value not in MODES:
                raise SpaceFileError(f"unknown mode {value!r}", lineno)
            mode = value
        elif key == "lim":
            if carrier is None:
                raise SpaceFileError("'points:' must come before entries", lineno)
            left, arrow, right = value.partition("->")
            if not arrow:
                raise SpaceFileError("expected '{...} -> {...}'", lineno)
            lims.append((_parse_set(carrier, left.strip(), lineno), _parse_set(carrier, right.strip(), lineno), lineno))
        elif key == "open":
            if carrier is None:
                raise SpaceFileError("'points:' must come before entries", lineno)
            for token in value.split():
                opens.append(_parse_set(carrier, token, lineno))
        else:
            raise SpaceFileError(f"unknown key {key!r}", lineno)
    if carrier is None:
        raise SpaceFileError("missing 'points:' line")
    if mode is None:
        raise SpaceFileError("missing 'mode:' line")

    if mode == "topology":
        if lims:
            raise SpaceFileError("'lim:' entries are not allowed in topology mode", lims[0][2])
        try:
            conv = topology_convergence(carrier, opens)
        except ValueError as exc:
            raise SpaceFileError(str(exc)) from None
    else:
        if opens:
            raise SpaceFileError(f"'open:' entries are not allowed in {mode} mode")
        for k, _, lineno in lims:
            if k == 0:
                raise SpaceFileError("kernels must be nonempty", lineno)
        if mode == "generators":
            conv = generate_convergence(carrier, [(k, v) for k, v, _ in lims])
        else:
            table = [None] * (1 << carrier.size)
            for k, v, lineno in lims:
                if table[k] is not None:
                    raise SpaceFileError(f"duplicate entry for {carrier.format(k)}", lineno)
                table[k] = v
            missing = [k for k in carrier.kernels() if table[k] is None]
            if missing:
                raise SpaceFileError(f"explicit table misses kernel {carrier.format(missing[0])}")
            table[0] = 0
            conv = Convergence.from_table(carrier, table)
    require_valid(conv)
    return SpaceFile(name, carrier, mode, conv)


def parse_space(text: str) -> Convergence:
    return parse_space_file(text).conv


def serialize_space(c: Convergence, name: str = "space") -> str:
    carrier = c.carrier
    lines = [f"space: {name}", "points: " + " ".join(carrier.names), "mode: explicit"]
    for k in sorted_family(carrier.kernels()):
        lines.append(f"lim: {carrier.format(k)} -> {carrier.format(c.lim(k))}")
    return "\n".join(lines) + "\n"


def parse_map(text: str, source: Convergence, target: Convergence) -> SpaceMap:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        key, sep, value = line.partition(":")
        if key.strip() != "map" or not sep:
            raise SpaceFileError(f"expected 'map: a -> p', got {line!r}", lineno)
        left, arrow, right = value.partition("->")
        if not arrow:
            raise SpaceFileError("expected 'a -> p'", lineno)
        src, dst = left.strip(), right.strip()
        if src in pairs:
            raise SpaceFileError(f"point {src!r} mapped twice", lineno)
        if src not in source.carrier.names:
            raise SpaceFileError(f"unknown source label {src!r}", lineno)
        if dst not in target.carrier.names:
            raise SpaceFileError(f"unknown target label {dst!r}", lineno)
        pairs[src] = dst
    try:
        return SpaceMap.from_labels(source, target, pairs)
    except ValueError as exc:
        raise SpaceFileError(str(exc)) from None
