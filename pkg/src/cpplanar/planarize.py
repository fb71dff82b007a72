"""The global planarization algorithm, its deleting relation, and empirical
verifiers for the structural lemmas behind its correctness argument.

The algorithm keeps a working set of edges and repeatedly takes the next edge
in a caller-supplied total order.  An edge survives iff for every edge of the
*input* graph crossing it both redundancy edges exist at one of its endpoints;
a surviving edge evicts all crossing edges from the working set.  The kept set
is therefore plane by construction; connectivity (on connected inputs with
the redundancy and coexistence properties) is what the verifiers check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import geometry
from .geometry import crossing_parameter, inside, intersection_point, intersects
from .graph import (GeoGraph, GraphError, PropertyReport, components, edge_key,
                    is_connected, is_rcg)
from .rng import SplitMix64

Edge = tuple[int, int]


class InvalidOrder(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class NoCrossingInF(GraphError):
    pass


class DegenerateAnchor(GraphError):
    """The crossing point nearest the anchor coincides with a vertex."""


class CorruptKeptSet(GraphError):
    """Two kept edges cross the anchor edge at the same point."""


class BadPartition(GraphError):
    pass


@dataclass
class CpTrace:
    """Full execution record of one planarization run."""

    order: list[Edge] = field(default_factory=list)
    kept: frozenset[Edge] = frozenset()
    removed_from_w: dict[Edge, tuple] = field(default_factory=dict)
    deletions: list[tuple[int, int, int, int]] = field(default_factory=list)

    def to_text(self) -> str:
        lines = ["kept:"]
        for a, b in sorted(self.kept):
            lines.append(f"  {a} {b}")
        lines.append("removed:")
        for e in sorted(self.removed_from_w):
            kind, payload = self.removed_from_w[e]
            if kind == "kept-crossing":
                lines.append(f"  {e[0]} {e[1]}  crossed-by {payload[0]} {payload[1]}")
            else:
                witnesses = " ".join(f"{w[0]}-{w[1]}" for w in payload)
                lines.append(f"  {e[0]} {e[1]}  condition-failed {witnesses}")
        lines.append("deletions:")
        for u, v, w, x in self.deletions:
            lines.append(f"  {w} {x} deletes {u} {v}")
        lines.append("processed:")
        for a, b in self.order:
            lines.append(f"  {a} {b}")
        return "\n".join(lines) + "\n"


def lex_order(g: GeoGraph) -> list[Edge]:
    return g.edges


def seeded_order(g: GeoGraph, seed: int) -> list[Edge]:
    edges = g.edges
    SplitMix64(seed).shuffle(edges)
    return edges


def crossing_map(g: GeoGraph) -> dict[Edge, list[Edge]]:
    """edge -> sorted list of input edges crossing it (computed once)."""
    edges = g.edges
    cross: dict[Edge, list[Edge]] = {e: [] for e in edges}
    for i, e in enumerate(edges):
        pe0, pe1 = g.pos(e[0]), g.pos(e[1])
        for f in edges[i + 1:]:
            if intersects(pe0, pe1, g.pos(f[0]), g.pos(f[1])):
                cross[e].append(f)
                cross[f].append(e)
    for lst in cross.values():
        lst.sort()
    return cross


def condition_holds(g: GeoGraph, uv: Edge, crossers: Sequence[Edge]) -> tuple[bool, list[Edge]]:
    u, v = uv
    bad = []
    for w, x in crossers:
        if (g.has_edge(u, w) and g.has_edge(u, x)) or \
           (g.has_edge(v, w) and g.has_edge(v, x)):
            continue
        bad.append((w, x))
    return (not bad, bad)


def cp_condition(g: GeoGraph, uv: Edge,
                 cross: Optional[dict[Edge, list[Edge]]] = None) -> tuple[bool, list[Edge]]:
    """Does uv satisfy the keep condition against all crossing input edges?

    Returns (True, []) or (False, violating edges).
    """
    uv = edge_key(*uv)
    if uv not in set(g.edges):
        raise UnknownEdge(f"edge {uv} not in graph")
    crossers = (cross or crossing_map(g))[uv]
    return condition_holds(g, uv, crossers)


def _oriented_deletions(g: GeoGraph, uv: Edge, wx: Edge) -> list[tuple[int, int, int, int]]:
    """Record (u,v,w,x) for each endpoint of wx adjacent to both u and v."""
    u, v = uv
    out = []
    for w, x in (wx, (wx[1], wx[0])):
        if g.has_edge(u, w) and g.has_edge(v, w):
            out.append((u, v, w, x))
    return out


def cp_global(g: GeoGraph, order: Optional[Sequence[Edge]] = None) -> CpTrace:
    """Run the planarization loop over the given total edge order."""
    edges = g.edges
    if order is None:
        order = edges
    else:
        order = [edge_key(*e) for e in order]
        if sorted(order) != edges or len(order) != len(edges):
            raise InvalidOrder("order must be a permutation of the edge set")
    cross = crossing_map(g)
    working = set(edges)
    kept: list[Edge] = []
    trace = CpTrace()
    for uv in order:
        if uv not in working:
            continue
        working.discard(uv)
        trace.order.append(uv)
        ok, bad = condition_holds(g, uv, cross[uv])
        if ok:
            kept.append(uv)
            for wx in cross[uv]:
                if wx in working:
                    working.discard(wx)
                    trace.removed_from_w[wx] = ("kept-crossing", uv)
                    trace.deletions.extend(_oriented_deletions(g, wx, uv))
        else:
            trace.removed_from_w[uv] = ("condition-failed", tuple(bad))
            for wx in bad:
                trace.deletions.extend(_oriented_deletions(g, uv, wx))
    trace.kept = frozenset(kept)
    return trace


def deleting(g: GeoGraph, kept: frozenset[Edge], u: int, v: int, w: int, x: int) -> bool:
    """Oriented 4-ary relation: the edge wx prohibits uv from being kept.

    Requires the crossing, the redundancy pair at w, and either the total
    absence of the pair at x or wx itself being kept.
    """
    if not (g.has_edge(u, v) and g.has_edge(w, x)):
        return False
    if not intersects(g.pos(u), g.pos(v), g.pos(w), g.pos(x)):
        return False
    if not (g.has_edge(u, w) and g.has_edge(v, w)):
        return False
    if edge_key(w, x) in kept:
        return True
    return not g.has_edge(u, x) and not g.has_edge(v, x)


# --- Lemma-level verifiers ---------------------------------------------------


def kept_subgraph(g: GeoGraph, trace: CpTrace) -> GeoGraph:
    return GeoGraph([(v, tuple(g.pos(v))) for v in g.vertex_ids], trace.kept)


def verify_lemma1(g: GeoGraph, trace: CpTrace) -> PropertyReport:
    """Every dropped edge must be crossed by some kept edge."""
    report = PropertyReport("dropped-edge-crossed-by-kept")
    kept = sorted(trace.kept)
    for e in g.edges:
        if e in trace.kept:
            continue
        pe0, pe1 = g.pos(e[0]), g.pos(e[1])
        if not any(intersects(pe0, pe1, g.pos(f[0]), g.pos(f[1])) for f in kept):
            report.add(e)
    return report


def verify_lemma2(g: GeoGraph, trace: CpTrace, part: set[int]) -> Optional[Edge]:
    """Find a cross-partition input edge whose kept crossers all avoid part.

    ``part`` must be a union of connected components of the kept subgraph,
    with a nonempty complement, on a connected input.  Returns the witness
    edge oriented (inside, outside), or None when no edge qualifies.
    """
    ids = set(g.vertex_ids)
    if not part or not part < ids:
        raise BadPartition("part must be a nonempty proper vertex subset")
    if not is_connected(g):
        raise BadPartition("input graph must be connected")
    comps = components(kept_subgraph(g, trace))
    for comp in comps:
        cset = set(comp)
        if not (cset <= part or cset.isdisjoint(part)):
            raise BadPartition(f"not a union of kept components: {comp}")
    other = ids - part
    kept = sorted(trace.kept)
    for a, b in g.edges:
        if (a in part) == (b in part):
            continue
        u, v = (a, b) if a in part else (b, a)
        pu, pv = g.pos(u), g.pos(v)
        good = True
        for w, x in kept:
            if intersects(pu, pv, g.pos(w), g.pos(x)):
                if w not in other or x not in other:
                    good = False
                    break
        if good:
            return (u, v)
    return None


@dataclass
class HullPath:
    """Finest convex-hull chain between the two anchor vertices.

    ``nodes`` runs from the anchor endpoint to the kept crossing edge's near
    endpoint; consecutive nodes are expected to be kept-adjacent (checked by
    verify_lemma3, not here).
    """

    u1: int
    v1: int
    w1: int
    x1: int
    q: geometry.RationalPoint
    nodes: list[int]

    def next_map(self) -> dict[int, Optional[int]]:
        nxt: dict[int, Optional[int]] = {}
        for a, b in zip(self.nodes, self.nodes[1:]):
            nxt[a] = b
        nxt[self.nodes[-1]] = None
        return nxt


def _wrap_chain(g: GeoGraph, start: int, goal: int, pool: list[int]) -> list[int]:
    """Gift-wrap walk from start to goal keeping every pool point weakly left.

    Collinear frontier points are taken nearest-first, which makes the chain
    the finest path (every hull vertex lying on a hull edge is included).
    """
    chain = [start]
    remaining = set(pool) | {goal}
    current = start
    for _ in range(len(pool) + 2):
        if current == goal:
            return chain
        pc = g.pos(current)
        best = None
        for cand in sorted(remaining):
            p = g.pos(cand)
            if p == pc:
                continue
            if best is None:
                best = cand
                continue
            pb = g.pos(best)
            cross = (pb.x - pc.x) * (p.y - pc.y) - (pb.y - pc.y) * (p.x - pc.x)
            if cross < 0:
                best = cand
            elif cross == 0:
                db = (pb.x - pc.x) ** 2 + (pb.y - pc.y) ** 2
                dp = (p.x - pc.x) ** 2 + (p.y - pc.y) ** 2
                if dp < db:
                    best = cand
        if best is None:
            break
        chain.append(best)
        remaining.discard(best)
        current = best
    if chain[-1] != goal:
        raise CorruptKeptSet("hull walk failed to reach the far anchor")
    return chain


def hull_path(g: GeoGraph, trace: CpTrace, u1v1: tuple[int, int]) -> HullPath:
    """Finest hull chain for a dropped edge around its nearest kept crossing.

    The anchor edge is taken oriented: distances are measured from the first
    endpoint.  Raises NoCrossingInF when no kept edge crosses the anchor, and
    DegenerateAnchor when the nearest crossing point lies on a vertex or the
    crossing edge cannot be oriented consistently.
    """
    u1, v1 = u1v1
    if edge_key(u1, v1) not in set(g.edges):
        raise UnknownEdge(f"edge {u1v1} not in graph")
    if edge_key(u1, v1) in trace.kept:
        raise GraphError(f"edge {u1v1} was kept; hull paths cover dropped edges")
    pu, pv = g.pos(u1), g.pos(v1)
    crossers = []
    for w, x in sorted(trace.kept):
        if intersects(pu, pv, g.pos(w), g.pos(x)):
            t = crossing_parameter(pu, pv, g.pos(w), g.pos(x))
            crossers.append((t, (w, x)))
    if not crossers:
        raise NoCrossingInF(f"no kept edge crosses {u1v1}")
    crossers.sort(key=lambda item: item[0])
    t_min = crossers[0][0]
    nearest = [e for t, e in crossers if t == t_min]
    if len(nearest) > 1:
        raise CorruptKeptSet(f"two kept edges cross {u1v1} at the same point")
    w1x1 = nearest[0]
    q = intersection_point(pu, pv, g.pos(w1x1[0]), g.pos(w1x1[1]))
    for vid in g.vertex_ids:
        p = g.pos(vid)
        if Fraction(p.x) == q.x and Fraction(p.y) == q.y:
            raise DegenerateAnchor(f"crossing point {q} coincides with vertex {vid}")
    # Orient the crossing edge: w1 on the left of u1->v1, and the full
    # orientation block must hold.
    w1 = x1 = None
    for w, x in (w1x1, (w1x1[1], w1x1[0])):
        pw, px = g.pos(w), g.pos(x)
        if geometry.left(pu, pv, pw) and geometry.left(pv, pu, px) and \
           geometry.left(px, pw, pu) and geometry.left(pw, px, pv):
            if w1 is not None:
                raise DegenerateAnchor(f"ambiguous orientation for {w1x1}")
            w1, x1 = w, x
    if w1 is None:
        raise DegenerateAnchor(f"no consistent orientation for {w1x1}")
    pw, px = g.pos(w1), g.pos(x1)
    pool = []
    for y in g.vertex_ids:
        if y in (u1, v1, w1, x1):
            continue
        py = g.pos(y)
        if inside(pu, pv, pw, py) and inside(pu, px, pw, py):
            pool.append(y)
    nodes = _wrap_chain(g, u1, w1, pool)
    return HullPath(u1, v1, w1, x1, q, nodes)


def verify_lemma3(g: GeoGraph, trace: CpTrace, u1v1: tuple[int, int]) -> PropertyReport:
    """Chain edges must be kept and no kept edge may cross a chain segment."""
    path = hull_path(g, trace, u1v1)
    report = PropertyReport("hull-chain-kept")
    for a, b in zip(path.nodes, path.nodes[1:]):
        if edge_key(a, b) not in trace.kept:
            report.add(("chain-edge-not-kept", a, b))
    for a, b in zip(path.nodes, path.nodes[1:]):
        pa, pb = g.pos(a), g.pos(b)
        for w, x in sorted(trace.kept):
            if intersects(pa, pb, g.pos(w), g.pos(x)):
                report.add(("kept-edge-crosses-chain", (a, b), (w, x)))
    return report


def verify_kept_contract(g: GeoGraph, trace: CpTrace) -> PropertyReport:
    """Post-hoc structural checks on the kept set: crossing-free, no vertex on
    a kept edge, and every crossing input edge has a redundancy pair at one
    endpoint of the kept edge."""
    report = PropertyReport("kept-contract")
    kept = sorted(trace.kept)
    if not frozenset(kept) <= frozenset(g.edges):
        report.add(("kept-not-subset",))
    for i, e in enumerate(kept):
        for f in kept[i + 1:]:
            if g.segments_cross(e, f):
                report.add(("kept-crossing", e, f))
    for u, v in kept:
        pu, pv = g.pos(u), g.pos(v)
        for w in g.vertex_ids:
            if w not in (u, v) and geometry.between(pu, pv, g.pos(w)):
                report.add(("vertex-on-kept-edge", (u, v), w))
        for w, x in g.edges:
            if (w, x) == (u, v):
                continue
            if intersects(pu, pv, g.pos(w), g.pos(x)):
                if not ((g.has_edge(u, w) and g.has_edge(u, x))
                        or (g.has_edge(v, w) and g.has_edge(v, x))):
                    report.add(("kept-condition", (u, v), (w, x)))
    return report


def verify_theorem1(g: GeoGraph, trace: CpTrace) -> PropertyReport:
    """Kept set must be plane; on connected valid inputs also connected."""
    report = PropertyReport("plane-and-connected")
    sub = kept_subgraph(g, trace)
    kept = sorted(trace.kept)
    for i, e in enumerate(kept):
        for f in kept[i + 1:]:
            if g.segments_cross(e, f):
                report.add(("crossing", e, f))
    if is_connected(g) and is_rcg(g):
        comps = components(sub)
        if len(comps) > 1:
            report.add(("disconnected", len(comps)))
    return report
