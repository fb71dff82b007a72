"""Graph interchange files: a JSON document with integer vertices and edges.

Load is order-insensitive; save writes a canonical form (vertices sorted by
id, edges as sorted pairs in sorted order) so that load-then-save round-trips
to identical bytes.
"""

from __future__ import annotations

import json
from typing import TextIO, Union

from .graph import GeoGraph, GraphError, edge_key

COORD_LIMIT = 2 ** 63  # coordinates must fit signed 64-bit


class FormatError(GraphError):
    pass


def _check_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{what} must be an integer, got {value!r}")
    return value


def graph_to_dict(g: GeoGraph) -> dict:
    return {
        "vertices": [{"id": v, "x": g.pos(v).x, "y": g.pos(v).y}
                     for v in g.vertex_ids],
        "edges": [list(e) for e in g.edges],
    }


def graph_from_dict(doc: dict) -> GeoGraph:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    try:
        raw_vertices = doc["vertices"]
        raw_edges = doc["edges"]
    except KeyError as exc:
        raise FormatError(f"missing field {exc}") from None
    vertices = []
    for entry in raw_vertices:
        vid = _check_int(entry["id"], "vertex id")
        x = _check_int(entry["x"], "coordinate")
        y = _check_int(entry["y"], "coordinate")
        if not (-COORD_LIMIT <= x < COORD_LIMIT and -COORD_LIMIT <= y < COORD_LIMIT):
            raise FormatError(f"coordinate out of 64-bit range at vertex {vid}")
        vertices.append((vid, (x, y)))
    edges = []
    for pair in raw_edges:
        if len(pair) != 2:
            raise FormatError(f"edge must be a pair, got {pair!r}")
        a = _check_int(pair[0], "edge endpoint")
        b = _check_int(pair[1], "edge endpoint")
        edges.append(edge_key(a, b))
    try:
        return GeoGraph(vertices, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def save_graph(g: GeoGraph, target: Union[str, TextIO]) -> None:
    text = json.dumps(graph_to_dict(g), indent=2, sort_keys=True) + "\n"
    if isinstance(target, str):
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        target.write(text)


def load_graph(source: Union[str, TextIO]) -> GeoGraph:
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return graph_from_dict(doc)
