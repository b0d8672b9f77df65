"""LinkInput JSON and the output formats.

Input schema (all coordinates doubled, so ``1/2`` is written ``1``)::

    {
      "name": "whitehead",
      "n": 2,
      "linking": [[0, 0], [0, 0]],
      "alexander": {"terms": [{"exp2": [1, 1], "coeff": -1}, ...]},
      "h_table": {"origin2": [-8, -8], "dims": [9, 9], "values": [...]},
      "component_genera": [0, 1],
      "sublinks": [{"components": [0, 1], "alexander": {...}}]
    }

``linking`` holds the integer linking numbers, i.e. the doubled lattice
shifts lk/2.  Exactly one of ``alexander`` / ``h_table`` is present; the
table values are listed with the first axis varying slowest.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from typing import Any

import jsonschema

from .errors import SchemaError
from .hfunction import HTable, LinkInput
from .laurent import LaurentSeries
from .lattice import Box, format_doubled

_TERMS = {
    "type": "object",
    "required": ["terms"],
    "properties": {
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["exp2", "coeff"],
                "properties": {
                    "exp2": {"type": "array", "items": {"type": "integer"}},
                    "coeff": {"type": "integer"},
                },
            },
        }
    },
}

_TABLE = {
    "type": "object",
    "required": ["origin2", "dims", "values"],
    "properties": {
        "origin2": {"type": "array", "items": {"type": "integer"}},
        "dims": {"type": "array", "items": {"type": "integer"}},
        "values": {"type": "array", "items": {"type": "integer"}},
    },
}

_PAYLOAD = {"oneOf": [{"required": ["alexander"]}, {"required": ["h_table"]}]}

LINK_SCHEMA = {
    "type": "object",
    "required": ["name", "n"],
    "allOf": [_PAYLOAD],
    "properties": {
        "name": {"type": "string"},
        "n": {"type": "integer", "minimum": 1},
        "linking": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "alexander": _TERMS,
        "h_table": _TABLE,
        "component_genera": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "sublinks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["components"],
                "allOf": [_PAYLOAD],
                "properties": {
                    "components": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "alexander": _TERMS,
                    "h_table": _TABLE,
                },
            },
        },
    },
}


def _table_from_json(obj: dict, n: int) -> HTable:
    origin, dims, values = obj["origin2"], obj["dims"], obj["values"]
    if len(origin) != n or len(dims) != n:
        raise SchemaError("h_table origin2/dims must have length n")
    if any(d < 1 for d in dims):
        raise SchemaError("h_table dims must be positive")
    if len(values) != _prod(dims):
        raise SchemaError(f"h_table has {len(values)} values, expected {_prod(dims)}")
    hi = [o + 2 * (d - 1) for o, d in zip(origin, dims)]
    keys = itertools.product(*(range(o, h + 1, 2) for o, h in zip(origin, hi)))
    return HTable(Box.from_doubled(origin, hi), dict(zip(keys, values)))


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _payload(obj: dict, n: int) -> dict:
    if "alexander" in obj:
        return {"alexander": LaurentSeries.from_terms(n, obj["alexander"]["terms"])}
    return {"h_table": _table_from_json(obj["h_table"], n)}


def link_from_dict(obj: dict) -> LinkInput:
    try:
        jsonschema.validate(obj, LINK_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"input does not match the schema: {exc.message}") from None
    n = obj["n"]
    linking = obj.get("linking")
    if linking is None and n == 1:
        linking = [[0]]
    link = LinkInput(
        obj["name"],
        n,
        None if linking is None else tuple(tuple(r) for r in linking),
        component_genera=tuple(obj["component_genera"]) if "component_genera" in obj else None,
        **_payload(obj, n),
    )
    subs = {}
    for s in obj.get("sublinks", []):
        kept = tuple(sorted(s["components"]))
        if not kept or len(set(kept)) != len(kept) or kept[-1] >= n or len(kept) >= n:
            raise SchemaError(f"bad sublink components {s['components']}")
        lk = None if link.linking is None else tuple(tuple(link.linking[a][b] for b in kept) for a in kept)
        subs[kept] = LinkInput(f"{link.name}{list(kept)}", len(kept), lk, **_payload(s, len(kept)))
    if subs:
        link = LinkInput(link.name, n, link.linking, link.alexander, link.h_table, link.component_genera, subs)
    return link


def parse_link_input(data: bytes | str) -> LinkInput:
    """Parse UTF-8 JSON into a LinkInput; raises SchemaError on any problem."""
    try:
        if isinstance(data, bytes):
            data = data.decode("utf-8")
        obj = json.loads(data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise SchemaError("top-level JSON value must be an object")
    return link_from_dict(obj)


def _table_to_json(h: HTable) -> dict:
    keys = itertools.product(*(h.box.axis(i) for i in range(h.n)))
    return {"origin2": list(h.box.lo.doubled), "dims": list(h.box.shape), "values": [h.values[k] for k in keys]}


def _payload_to_json(link: LinkInput) -> dict:
    if link.alexander is not None:
        return {"alexander": {"terms": link.alexander.to_terms()}}
    return {"h_table": _table_to_json(link.h_table)}


def link_to_dict(link: LinkInput) -> dict:
    out: dict[str, Any] = {"name": link.name, "n": link.n}
    if link.linking is not None:
        out["linking"] = [list(r) for r in link.linking]
    out.update(_payload_to_json(link))
    if link.component_genera is not None:
        out["component_genera"] = list(link.component_genera)
    if link.sublinks:
        out["sublinks"] = [
            {"components": list(k), **_payload_to_json(v)} for k, v in sorted(link.sublinks.items())
        ]
    return out


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dump_link_input(link: LinkInput) -> str:
    return dumps(link_to_dict(link))


# --------------------------------------------------------------------------- tables


def table_to_dict(h: HTable) -> dict:
    out = {"name": h.name, "n": h.n, "box": {"lo2": list(h.box.lo.doubled), "hi2": list(h.box.hi.doubled)}}
    out["sign"] = {1: "+", -1: "-", None: None}[h.sign]
    out["h_table"] = _table_to_json(h)
    return out


def table_to_csv(h: HTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"s{i + 1}_doubled" for i in range(h.n)] + ["H"])
    for k in itertools.product(*(h.box.axis(i) for i in range(h.n))):
        w.writerow(list(k) + [h.values[k]])
    return buf.getvalue()


def table_to_ascii(h: HTable) -> str:
    """Grid with s1 increasing to the right and s2 increasing upward."""
    grid = h.as_grid()
    xs = [format_doubled(x) for x in h.box.axis(0)]
    ys = [format_doubled(y) for y in reversed(h.box.axis(1))] if h.n == 2 else [""]
    width = max(len(x) for x in xs + [str(v) for row in grid for v in row])
    label = max(len(y) for y in ys)
    lines = []
    for y, row in zip(ys, grid):
        lines.append(f"{y:>{label}} | " + " ".join(f"{v:>{width}}" for v in row))
    lines.append(" " * label + " +-" + "-" * ((width + 1) * len(xs) - 1))
    lines.append(" " * label + "   " + " ".join(f"{x:>{width}}" for x in xs))
    return "\n".join(lines) + "\n"
