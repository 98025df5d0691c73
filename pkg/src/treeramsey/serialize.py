"""JSON forms for trees, maps, colorings, reports, and the fixtures file.

Every payload carries a schema name and version; loaders refuse version
mismatches.  Trees serialize as {"kind": "tree"|"forest", "parent": [...]}
with null marking the root (or component minima); vertex ids are 0-based.
The fixtures file is append-only: an existing key can only ever be asserted
equal, never rewritten.
"""

from __future__ import annotations

import json
import os
from typing import Any, Union

from .colorsearch import SearchStats
from .errors import NotCanonical, SchemaError
from .maps import TreeMap
from .trees import OrderedForest, OrderedTree, canonicalize
from .witness import WitnessReport

SCHEMA_VERSIONS = {
    "tree": 1,
    "map": 1,
    "coloring": 1,
    "report": 1,
    "fixtures": 1,
}


def _check_version(payload: dict, schema: str) -> None:
    if payload.get("schema") != schema:
        raise SchemaError(f"expected schema {schema!r}, got {payload.get('schema')!r}")
    if payload.get("version") != SCHEMA_VERSIONS[schema]:
        raise SchemaError(
            f"schema {schema} version {payload.get('version')!r} unsupported "
            f"(expected {SCHEMA_VERSIONS[schema]})"
        )


def tree_to_json(t: Union[OrderedTree, OrderedForest]) -> dict:
    kind = "tree" if isinstance(t, OrderedTree) else "forest"
    return {
        "schema": "tree",
        "version": SCHEMA_VERSIONS["tree"],
        "kind": kind,
        "parent": list(t.parent),
    }


def tree_from_json(payload: dict, normalize: bool = False) -> Union[OrderedTree, OrderedForest]:
    _check_version(payload, "tree")
    parent = payload.get("parent")
    if not isinstance(parent, list):
        raise SchemaError("tree payload needs a parent array")
    entries = tuple(None if p is None else int(p) for p in parent)
    kind = payload.get("kind", "tree")
    if kind == "forest":
        return OrderedForest(entries)
    if kind != "tree":
        raise SchemaError(f"unknown tree kind {kind!r}")
    try:
        return OrderedTree(entries)
    except NotCanonical:
        if not normalize:
            raise
        canon, _ = canonicalize(entries)
        return canon


def map_to_json(m: TreeMap) -> dict:
    return {
        "schema": "map",
        "version": SCHEMA_VERSIONS["map"],
        "dom": tree_to_json(m.dom),
        "cod": tree_to_json(m.cod),
        "values": list(m.values),
    }


def map_from_json(payload: dict, normalize: bool = False) -> TreeMap:
    _check_version(payload, "map")
    dom = tree_from_json(payload["dom"], normalize=normalize)
    cod = tree_from_json(payload["cod"], normalize=normalize)
    if not isinstance(dom, OrderedTree) or not isinstance(cod, OrderedTree):
        raise SchemaError("maps go between trees, not forests")
    return TreeMap(dom, cod, tuple(int(v) for v in payload["values"]))


def coloring_to_json(colors, b: int) -> dict:
    return {
        "schema": "coloring",
        "version": SCHEMA_VERSIONS["coloring"],
        "b": b,
        "colors": list(colors),
    }


def coloring_from_json(payload: dict) -> tuple[tuple[int, ...], int]:
    _check_version(payload, "coloring")
    return tuple(int(c) for c in payload["colors"]), int(payload["b"])


def report_to_json(r: WitnessReport) -> dict:
    # elapsed is intentionally omitted: serialized reports must be byte-stable
    return {
        "schema": "report",
        "version": SCHEMA_VERSIONS["report"],
        "verdict": r.verdict,
        "b": r.b,
        "mode": r.mode,
        "s": list(r.s),
        "t": list(r.t),
        "u": list(r.u),
        "counterexample": None if r.counterexample is None else list(r.counterexample),
        "stats": {
            "vertices": r.stats.vertices,
            "edges": r.stats.edges,
            "nodes": r.stats.nodes,
            "colorings_examined": r.stats.colorings_examined,
        },
    }


def report_from_json(payload: dict) -> WitnessReport:
    _check_version(payload, "report")
    stats = SearchStats(
        vertices=payload["stats"]["vertices"],
        edges=payload["stats"]["edges"],
        nodes=payload["stats"]["nodes"],
        colorings_examined=payload["stats"]["colorings_examined"],
    )
    cex = payload.get("counterexample")
    return WitnessReport(
        verdict=payload["verdict"],
        b=payload["b"],
        mode=payload["mode"],
        s=tuple(None if p is None else int(p) for p in payload["s"]),
        t=tuple(None if p is None else int(p) for p in payload["t"]),
        u=tuple(None if p is None else int(p) for p in payload["u"]),
        counterexample=None if cex is None else tuple(cex),
        stats=stats,
    )


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def save_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(payload))


def load_fixtures(path: str) -> dict:
    if not os.path.exists(path):
        return {"schema": "fixtures", "version": SCHEMA_VERSIONS["fixtures"], "entries": {}}
    payload = load_json(path)
    _check_version(payload, "fixtures")
    return payload


def record_fixture(path: str, key: str, value: Any) -> bool:
    """Append-only recording: store on first computation, assert equality after.

    Returns True when the value was newly stored, False when it matched an
    existing entry; raises SchemaError on a mismatch.
    """
    payload = load_fixtures(path)
    entries = payload["entries"]
    if key in entries:
        if entries[key] != value:
            raise SchemaError(
                f"fixture {key!r} changed: stored {entries[key]!r}, computed {value!r}"
            )
        return False
    entries[key] = value
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    save_json(path, payload)
    return True
