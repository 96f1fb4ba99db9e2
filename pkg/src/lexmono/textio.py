"""Text forms: single-level maps, elements, and raw windowed tables (JSON)."""

from __future__ import annotations

import json
from typing import Any

from .core import CofiniteMonotoneMap
from .errors import ParseError
from .oracle import WindowedMap
from .product import Element


def _load(text: str) -> Any:
    def no_duplicates(pairs):
        keys = [k for k, _ in pairs]
        if len(keys) != len(set(keys)):
            raise ParseError(f"duplicate key among {keys}")
        return dict(pairs)

    try:
        return json.loads(text, object_pairs_hook=no_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None


def _int(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def _keys(obj: Any, keys: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    if set(obj) != keys:
        raise ParseError(f"{where}: expected keys {sorted(keys)}, got {sorted(obj)}")


def _points(value: Any, where: str) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list")
    pts = tuple(_int(v, f"{where}[{i}]") for i, v in enumerate(value))
    for i, (p, q) in enumerate(zip(pts, pts[1:]), start=1):
        if p >= q:
            raise ParseError(f"{where}[{i}]: entries must be strictly increasing, {p} then {q}")
    return pts


def _map_from(obj: Any, where: str) -> CofiniteMonotoneMap:
    _keys(obj, {"D", "R", "c"}, where)
    return CofiniteMonotoneMap(_points(obj["D"], f"{where}.D"),
                               _points(obj["R"], f"{where}.R"),
                               _int(obj["c"], f"{where}.c"))


def _element_from(obj: Any, where: str = "element") -> Element:
    if isinstance(obj, dict) and "comps" in obj:
        _keys(obj, {"n", "comps"}, where)
        n = _int(obj["n"], f"{where}.n")
        comps = obj["comps"]
        if not isinstance(comps, list) or len(comps) != n or n < 1:
            raise ParseError(f"{where}.comps: expected a list of {n} maps")
        return Element(n, tuple(_map_from(c, f"{where}.comps[{i}]") for i, c in enumerate(comps)))
    return Element(1, (_map_from(obj, where),))


def parse_map(text: str) -> CofiniteMonotoneMap:
    return _map_from(_load(text), "map")


def parse_element(text: str) -> Element:
    """Accepts the element form ``{"n":..,"comps":[..]}`` or a bare map (n = 1)."""
    return _element_from(_load(text))


def parse_elements(text: str) -> list[Element]:
    """One element per non-blank line."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            try:
                out.append(parse_element(line))
            except ParseError as exc:
                raise ParseError(str(exc), line=lineno, column=exc.column) from None
    return out


def map_to_obj(a: CofiniteMonotoneMap) -> dict:
    return {"D": list(a.D), "R": list(a.R), "c": a.c}


def format_map(a: CofiniteMonotoneMap) -> str:
    return json.dumps(map_to_obj(a), separators=(",", ":"))


def format_element(a: Element) -> str:
    """Bare map form when n = 1, element form otherwise."""
    if a.n == 1:
        return format_map(a.comps[0])
    obj = {"n": a.n, "comps": [map_to_obj(x) for x in a.comps]}
    return json.dumps(obj, separators=(",", ":"))


def parse_raw(text: str) -> WindowedMap:
    obj = _load(text)
    _keys(obj, {"n", "W", "table", "tails"}, "raw")
    n, W = _int(obj["n"], "raw.n"), _int(obj["W"], "raw.W")
    if not isinstance(obj["table"], list):
        raise ParseError("raw.table: expected a list")
    table = {}
    for idx, row in enumerate(obj["table"]):
        where = f"raw.table[{idx}]"
        if not isinstance(row, list) or len(row) != 4:
            raise ParseError(f"{where}: expected [i,k,j,m]")
        i, k, j, m = (_int(v, where) for v in row)
        if (i, k) in table:
            raise ParseError(f"{where}: source ({i},{k}) listed twice")
        table[(i, k)] = (j, m)
    if not isinstance(obj["tails"], list):
        raise ParseError("raw.tails: expected a list")
    tails = []
    for idx, t in enumerate(obj["tails"]):
        _keys(t, {"cL", "cR"}, f"raw.tails[{idx}]")
        tails.append((_int(t["cL"], f"raw.tails[{idx}].cL"), _int(t["cR"], f"raw.tails[{idx}].cR")))
    return WindowedMap(n, W, table, tuple(tails))


def format_raw(x: WindowedMap) -> str:
    rows = [[i, k, j, m] for (i, k), (j, m) in sorted(x.table.items())]
    obj = {"n": x.n, "W": x.W, "table": rows,
           "tails": [{"cL": a, "cR": b} for a, b in x.tails]}
    return json.dumps(obj, separators=(",", ":"))
