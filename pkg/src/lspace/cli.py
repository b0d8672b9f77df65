"""Command-line front end.

Exit codes: 0 ok, 2 bad input, 3 not an L-space link on the box,
4 box too small.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import catalog
from .classify import (
    Kind,
    QPInput,
    classify_type,
    invariants_from_classification,
    is_special,
    qp_obstruction,
    refine_with_fibered,
)
from .cone_oracle import oracle_check
from .errors import LSpaceError, SchemaError
from .hfl2 import hfl_minus_table, s_top_and_fibered
from .hfunction import DEFAULT_MARGIN, HTable, LinkInput, solve_link
from .io import dump_link_input, dumps, parse_link_input, table_to_ascii, table_to_csv, table_to_dict
from .lattice import Box

log = logging.getLogger("lspace")

COMMANDS = ("hfunc", "classify", "hfl", "oracle-check", "qp", "catalog")


def parse_box(text: str) -> Box:
    """``lo1,lo2:hi1,hi2`` in doubled coordinates."""
    try:
        lo, hi = text.split(":")
        return Box.from_doubled([int(x) for x in lo.split(",")], [int(x) for x in hi.split(",")])
    except ValueError as exc:
        raise SchemaError(f"bad --box {text!r}: expected lo1,lo2:hi1,hi2 ({exc})") from None


def load_link(source: str) -> tuple[LinkInput, Box | None]:
    if source.startswith("catalog:"):
        entry = catalog.get(source[len("catalog:"):])
        return entry.input, entry.box
    data = sys.stdin.buffer.read() if source == "-" else _read(source)
    return parse_link_input(data), None


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None


def load_qp(source: str) -> QPInput:
    if source.startswith("catalog:"):
        return catalog.get_qp(source[len("catalog:"):])
    try:
        obj = json.loads(_read(source) if source != "-" else sys.stdin.buffer.read())
        return QPInput(
            int(obj["n"]), int(obj["tau"]), int(obj["mirror_tau"]),
            bool(obj["components_unknotted"]), bool(obj["total_linking_zero"]),
        )
    except (ValueError, KeyError, TypeError) as exc:
        raise SchemaError(f"bad quasi-positivity input: {exc}") from None


def _half(d: int):
    return d // 2 if d % 2 == 0 else f"{d}/2"


def classification_report(h: HTable, link: LinkInput) -> dict:
    cls = classify_type(h)
    if cls.kind is Kind.TYPE_B:
        cls = is_special(h, cls, link.component_genera)
    report = invariants_from_classification(h, cls, h.n, link.component_genera)
    top = None
    if h.n == 2:
        top = s_top_and_fibered(h)
        report = refine_with_fibered(report, top.fibered, top.s_top if top.certified else None, h.n)
    out = {
        "name": link.name,
        "n": h.n,
        "kind": cls.kind.value,
        "corner2": None if cls.corner is None else list(cls.corner.doubled),
        "corner": None if cls.corner is None else [_half(d) for d in cls.corner.doubled],
        "special": cls.special,
        "failures": list(cls.failures),
        "eq1_checked": cls.eq1_checked,
        "fibered": report.fibered.value,
        "sqp": report.sqp.value,
        "fibered_and_sqp": report.fibered_and_sqp.value,
        "g3": report.g3_link,
        "tau": report.tau,
        "nu_plus": report.nu_plus,
        "s_top": report.s_top,
        "component_genera": list(report.component_genera),
        "notes": list(cls.notes) + list(report.notes) + ([top.note] if top is not None and top.note else []),
        "box": {"lo2": list(h.box.lo.doubled), "hi2": list(h.box.hi.doubled)},
    }
    return out


def hfl_report(h: HTable) -> dict:
    table = hfl_minus_table(h)
    top = s_top_and_fibered(h, table)
    return {
        "name": h.name,
        "points": [
            {"s2": list(p.doubled), "dims": {str(g): d for g, d in v.dims}}
            for p, v in sorted(table.items(), key=lambda kv: kv[0].doubled)
        ],
        "s_top": top.s_top,
        "fibered": top.fibered.value,
        "top_certified": top.certified,
        "hat_dim_at_top": top.hat_dim,
    }


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = argparse.ArgumentParser(prog="lspace", description="H-functions of L-space links")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("source", nargs="?", help="input JSON path, '-' for stdin, or catalog:NAME")
    parser.add_argument("--box", help="lo1,lo2:hi1,hi2 in doubled coordinates")
    parser.add_argument("--format", choices=("json", "csv", "ascii"), default="json")
    parser.add_argument("--sign", choices=("auto", "plus", "minus"), default="auto")
    parser.add_argument("--margin", type=int, default=DEFAULT_MARGIN)
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")

    try:
        out.write(_dispatch(args))
    except LSpaceError as exc:
        print(f"lspace: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


def _dispatch(args) -> str:
    if args.command == "catalog":
        if not args.source:
            return "\n".join(catalog.NAMES) + "\n"
        name = args.source[len("catalog:"):] if args.source.startswith("catalog:") else args.source
        return dump_link_input(catalog.get(name).input)
    if not args.source:
        raise SchemaError(f"{args.command} needs an input")
    if args.command == "qp":
        v = qp_obstruction(load_qp(args.source))
        return dumps({
            "obstructed": v.obstructed,
            "reason": v.reason,
            "mirror_violated": v.mirror_violated,
            "self_linking_violated": v.self_linking_violated,
        })

    link, box = load_link(args.source)
    if args.box:
        box = parse_box(args.box)
    if args.margin < 1:
        raise SchemaError("--margin must be at least 1")
    h = solve_link(link, box, sign=args.sign, margin=args.margin)

    if args.command == "hfunc":
        if args.format == "csv":
            return table_to_csv(h)
        if args.format == "ascii":
            return table_to_ascii(h)
        return dumps(table_to_dict(h))
    if args.command == "classify":
        return dumps(classification_report(h, link))
    if h.n != 2:
        raise SchemaError(f"{args.command} is only available for 2-component links")
    if args.command == "hfl":
        return dumps(hfl_report(h))
    rep = oracle_check(h)
    rep["mismatches"] = [{**m, "point": list(m["point"].doubled)} for m in rep["mismatches"]]
    return dumps(rep)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
