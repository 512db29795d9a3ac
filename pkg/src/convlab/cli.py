"""Command-line interface.

Output is one ``key=value`` record per line in a fixed order.  Exit codes:
0 success, 1 a checked property or equality failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .covers import completeness_number
from .dual import DualSpace, regularity_predicates
from .families import CapacityError
from .graph import graph_of
from .harness.duality import duality_check
from .harness.spacefile import parse_map, parse_space_file, serialize_space
from .harness.suite import run_suite
from .maps import final_convergence, is_continuous, map_class
from .paving import KINDS, paving_number
from .space import (
    Convergence,
    InvalidSpace,
    closed_sets,
    compact_parts,
    is_pseudotopology,
    is_topological,
)

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _emit(pairs: Iterable[tuple[str, object]]) -> None:
    for key, value in pairs:
        if isinstance(value, bool):
            value = _bool(value)
        print(f"{key}={value}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    return parse_space_file(_read(path))


def _filters(c: Convergence, kernels) -> str:
    return ";".join(c.carrier.format(f.kernel) for f in kernels) or "none"


# -- commands -----------------------------------------------------------------


def cmd_validate(args) -> int:
    text = _read(args.file)
    try:
        sf = parse_space_file(text)
    except InvalidSpace as exc:
        _emit([("valid", False), ("violations", len(exc.violations))])
        for v in exc.violations:
            print(f"violation={v}")
        return FAILED
    _emit([("valid", True), ("name", sf.name), ("points", sf.carrier.size), ("mode", sf.mode)])
    return OK


def cmd_info(args) -> int:
    sf = _load(args.file)
    c = sf.conv
    g = graph_of(c)
    reg = regularity_predicates(c)
    parts = compact_parts(c)
    _emit(
        [
            ("name", sf.name),
            ("points", " ".join(c.carrier.names)),
            ("mode", sf.mode),
            ("topological", is_topological(c)),
            ("pseudotopology", is_pseudotopology(c)),
            ("closed_sets", c.carrier.format_family(closed_sets(c))),
            ("star_regular", reg.star_regular),
            ("bullet_regular", reg.bullet_regular),
            ("reciprocal", reg.reciprocal),
            ("roots", c.carrier.format(g.roots())),
            ("ends", c.carrier.format(g.ends())),
            ("grounded", g.dagger_closure(0) == 0),
            ("cocompactoid", c.carrier.format(parts.cocompactoid.kernel)),
            ("locally_compactoid", parts.locally_compactoid),
        ]
    )
    return OK


def cmd_dual(args) -> int:
    sf = _load(args.file)
    d = DualSpace(sf.conv)
    _emit([("name", sf.name), ("dual_points", d.size), ("labels", " ".join(d.carrier.names))])
    if args.emit:
        try:
            text = serialize_space(d.conv.tabulate(), f"dual-{sf.name}")
        except CapacityError as exc:
            raise InputError(str(exc)) from None
        try:
            Path(args.emit).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {args.emit}: {exc.strerror}") from None
        _emit([("emitted", args.emit)])
    return OK


def cmd_paving(args) -> int:
    c = _load(args.file).conv
    try:
        x = c.carrier.index(args.at)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    r = paving_number(c, x, args.kind)
    _emit([("kind", r.kind), ("at", args.at), ("value", r.value), ("witness", _filters(c, r.witness))])
    return OK


def cmd_complete(args) -> int:
    c = _load(args.file).conv
    try:
        target = c.carrier.parse(args.target)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc.args[0])) from None
    kind = "ultra" if args.ultra else "plain"
    r = completeness_number(c, target, kind)
    _emit(
        [
            ("kind", kind),
            ("target", c.carrier.format(target)),
            ("value", r.value),
            ("witness", _filters(c, r.witness)),
            ("classic_value", r.classic_value),
            ("classic_witness", _filters(c, r.classic_witness)),
        ]
    )
    return OK


def cmd_duality(args) -> int:
    sf = _load(args.file)
    c = sf.conv
    rows = duality_check(c)
    status = OK
    _emit([("name", sf.name), ("rows", len(rows))])
    for r in rows:
        if not (r.equal_ultra and r.equal_plain):
            status = FAILED
        print(
            f"target={c.carrier.format(r.target)} ucompl={r.ucompl} pavement={r.pavement} "
            f"equal_ultra={_bool(r.equal_ultra)} compl={r.compl} dagger={r.dagger} "
            f"equal_plain={_bool(r.equal_plain)}"
        )
        if r.note:
            print(f"note target={c.carrier.format(r.target)} {r.note}")
    _emit([("result", "pass" if status == OK else "fail")])
    return status


def cmd_map(args) -> int:
    src, dst = _load(args.src).conv, _load(args.dst).conv
    m = parse_map(_read(args.mapfile), src, dst)
    cont = is_continuous(m)
    pairs: list[tuple[str, object]] = [("continuous", cont.ok)]
    if not cont.ok:
        pairs.append(("witness", src.carrier.format(cont.witness)))
    pairs.append(("onto", m.onto))
    if m.onto:
        fin = final_convergence(m)
        pairs.append(("final", fin.describe()))
    if m.onto and cont.ok:
        mc = map_class(m)
        pairs += [("almost_open", mc.almost_open), ("biquotient", mc.biquotient), ("quotient", mc.quotient)]
    _emit(pairs)
    return OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return int(lo), int(lo)
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def cmd_suite(args) -> int:
    n_min, n_max = args.n
    props = [p.strip() for p in args.props.split(",") if p.strip()] if args.props else None
    try:
        report = run_suite(n_min, n_max, args.trials, args.seed, props)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc.args[0])) from None
    sys.stdout.write(report.render())
    print(f"wall_seconds={report.wall_time:.2f}", file=sys.stderr)
    return OK if report.ok else FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="convlab", description="Finite convergence space laboratory.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and check the axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="summary of a space")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("dual", help="dual space of closed sets")
    p.add_argument("file")
    p.add_argument("--emit", metavar="OUT", help="write the tabulated dual as a space file")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("paving", help="paving number at a point")
    p.add_argument("file")
    p.add_argument("--at", required=True, metavar="POINT")
    p.add_argument("--kind", choices=KINDS, default="pavement")
    p.set_defaults(func=cmd_paving)

    p = sub.add_parser("complete", help="completeness number relative to a closed target")
    p.add_argument("file")
    p.add_argument("--target", default="{}", metavar="SET")
    p.add_argument("--ultra", action="store_true")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("duality", help="compare completeness numbers with paving numbers on the dual")
    p.add_argument("file")
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("map", help="continuity and class of a map between two spaces")
    p.add_argument("mapfile")
    p.add_argument("src")
    p.add_argument("dst")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("suite", help="run the property suite")
    p.add_argument("--n", type=_parse_range, default=(1, 5), metavar="A..B")
    p.add_argument("--trials", type=int, default=300)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--props", default=None, metavar="LIST", help="comma-separated property names")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        # file, grammar, axiom, capacity and *-regularity problems all land here
        print(f"error={exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
