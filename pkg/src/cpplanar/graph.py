"""Geometric graph model and checkers for the structural graph properties.

A :class:`GeoGraph` is immutable after construction: vertices are integer ids
with exact integer plane positions, edges an unordered-pair set.  All checkers
are pure functions of the graph value, so they can run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .geometry import Point, between, inside, intersects

MAX_WITNESSES = 1000


class GraphError(ValueError):
    pass


class UnknownVertex(GraphError):
    pass


def edge_key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


@dataclass
class PropertyReport:
    property: str
    violations: list[tuple] = field(default_factory=list)
    truncated: bool = False

    @property
    def holds(self) -> bool:
        return not self.violations

    def add(self, witness: tuple) -> None:
        if len(self.violations) < MAX_WITNESSES:
            self.violations.append(witness)
        else:
            self.truncated = True


class GeoGraph:
    """Undirected geometric graph without self-loops."""

    def __init__(self, vertices: Iterable[tuple[int, tuple[int, int]]],
                 edges: Iterable[tuple[int, int]]):
        pos: dict[int, Point] = {}
        for vid, p in vertices:
            if vid in pos:
                raise GraphError(f"duplicate vertex id {vid}")
            pos[int(vid)] = Point(int(p[0]), int(p[1]))
        eset: set[tuple[int, int]] = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if a not in pos or b not in pos:
                raise GraphError(f"edge ({a},{b}) references unknown vertex")
            eset.add(edge_key(a, b))
        self._pos = pos
        self._edges = frozenset(eset)
        self._adj: dict[int, frozenset[int]] = {}
        adj: dict[int, set[int]] = {v: set() for v in pos}
        for a, b in eset:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = {v: frozenset(s) for v, s in adj.items()}

    # -- accessors ---------------------------------------------------------
    @property
    def vertex_ids(self) -> list[int]:
        return sorted(self._pos)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def pos(self, vid: int) -> Point:
        try:
            return self._pos[vid]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vid}") from None

    def has_vertex(self, vid: int) -> bool:
        return vid in self._pos

    def has_edge(self, a: int, b: int) -> bool:
        return edge_key(a, b) in self._edges

    def neighbors(self, vid: int) -> frozenset[int]:
        try:
            return self._adj[vid]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vid}") from None

    def num_vertices(self) -> int:
        return len(self._pos)

    def num_edges(self) -> int:
        return len(self._edges)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GeoGraph) and self._pos == other._pos
                and self._edges == other._edges)

    def __repr__(self) -> str:
        return f"GeoGraph(n={len(self._pos)}, m={len(self._edges)})"

    # -- geometric helpers ---------------------------------------------------
    def segments_cross(self, e: tuple[int, int], f: tuple[int, int]) -> bool:
        return intersects(self._pos[e[0]], self._pos[e[1]],
                          self._pos[f[0]], self._pos[f[1]])

    def validate(self) -> list[str]:
        """Non-fatal validation warnings (e.g. coincident vertex positions)."""
        warnings = []
        seen: dict[Point, int] = {}
        for vid in self.vertex_ids:
            p = self._pos[vid]
            if p in seen:
                warnings.append(
                    f"vertices {seen[p]} and {vid} share position {tuple(p)}")
            else:
                seen[p] = vid
        return warnings


def crossing_pairs(g: GeoGraph) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All unordered pairs of edges that intersect as segments."""
    edges = g.edges
    out = []
    for i, e in enumerate(edges):
        pe0, pe1 = g.pos(e[0]), g.pos(e[1])
        for f in edges[i + 1:]:
            if intersects(pe0, pe1, g.pos(f[0]), g.pos(f[1])):
                out.append((e, f))
    return out


def is_plane(g: GeoGraph) -> bool:
    return not crossing_pairs(g)


def check_redundancy(g: GeoGraph) -> PropertyReport:
    """Every crossing edge pair has one endpoint adjacent to the other three."""
    report = PropertyReport("redundancy")
    for (u, v), (w, x) in crossing_pairs(g):
        ok = ((g.has_edge(u, w) and g.has_edge(u, x))
              or (g.has_edge(v, w) and g.has_edge(v, x))
              or (g.has_edge(w, u) and g.has_edge(w, v))
              or (g.has_edge(x, u) and g.has_edge(x, v)))
        if not ok:
            report.add((u, v, w, x))
    return report


def _triangles(g: GeoGraph) -> Iterable[tuple[int, int, int]]:
    ids = g.vertex_ids
    for i, u in enumerate(ids):
        nu = g.neighbors(u)
        for v in sorted(nu):
            if v <= u:
                continue
            common = nu & g.neighbors(v)
            for w in sorted(common):
                if w > v:
                    yield (u, v, w)


def interior_vertices(g: GeoGraph, u: int, v: int, w: int) -> list[int]:
    """Vertices inside triangle uvw in the oriented, degenerate-aware sense."""
    pu, pv, pw = g.pos(u), g.pos(v), g.pos(w)
    out = []
    for x in g.vertex_ids:
        if x in (u, v, w):
            continue
        px = g.pos(x)
        if inside(pu, pv, pw, px) or inside(pu, pw, pv, px):
            out.append(x)
    return out


def check_coexistence(g: GeoGraph, weak: bool = False) -> PropertyReport:
    """Interior vertices of edge-triangles connect to the border vertices.

    Strong form: all three border edges must exist; weak form: at least two.
    Degenerate (collinear) triangles contribute their oriented open-segment
    interiors.
    """
    report = PropertyReport("weak-coexistence" if weak else "coexistence")
    for u, v, w in _triangles(g):
        for x in interior_vertices(g, u, v, w):
            have = sum((g.has_edge(u, x), g.has_edge(v, x), g.has_edge(w, x)))
            if have < (2 if weak else 3):
                report.add((u, v, w, x))
    return report


def is_rcg(g: GeoGraph) -> bool:
    return check_redundancy(g).holds and check_coexistence(g).holds


def components(g: GeoGraph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    seen: set[int] = set()
    comps = []
    for start in g.vertex_ids:
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for nb in g.neighbors(v):
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def is_connected(g: GeoGraph) -> bool:
    return len(components(g)) <= 1


def two_hop(g: GeoGraph, u: int) -> set[int]:
    """Vertices reachable from u in at most two edges, excluding u."""
    if not g.has_vertex(u):
        raise UnknownVertex(f"unknown vertex {u}")
    first = set(g.neighbors(u))
    second = set()
    for v in first:
        second |= g.neighbors(v)
    out = first | second
    out.discard(u)
    return out


def check_collinear_closure(g: GeoGraph) -> PropertyReport:
    """For uv in E and w strictly between u and v, uw and wv must be in E."""
    report = PropertyReport("collinear-closure")
    for u, v in g.edges:
        pu, pv = g.pos(u), g.pos(v)
        for w in g.vertex_ids:
            if w in (u, v):
                continue
            if between(pu, pv, g.pos(w)):
                if not (g.has_edge(u, w) and g.has_edge(w, v)):
                    report.add((u, v, w))
    return report


def induced_subgraph(g: GeoGraph, ids: Iterable[int],
                     extra_edges: Optional[Iterable[tuple[int, int]]] = None
                     ) -> GeoGraph:
    keep = set(ids)
    verts = [(v, tuple(g.pos(v))) for v in sorted(keep)]
    edges = [e for e in g.edges if e[0] in keep and e[1] in keep]
    if extra_edges:
        edges += [e for e in extra_edges if e[0] in keep and e[1] in keep]
    return GeoGraph(verts, edges)
