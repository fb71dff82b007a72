"""Round-based simulation of the per-vertex planarization algorithm.

Every vertex owns a frozen 2-hop view (vertices within two hops, plus all
edges incident to itself or a neighbor) and decides its incident edges from
that view alone.  A global edge priority serialises conflicting decisions:
an edge is decided only once every higher-priority crossing edge has been
decided, which the scheduler realises as deterministic dependency rounds.
Removal notifications are the only communication; their counts are part of
the result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .geometry import Point, intersects
from .graph import GeoGraph, PropertyReport, edge_key, two_hop
from .planarize import InvalidOrder, crossing_map

Edge = tuple[int, int]


@dataclass
class NodeView:
    """What one vertex knows: ids, positions and edges up to two hops."""

    self_id: int
    pos: dict[int, Point]
    adj: dict[int, frozenset[int]]

    def knows_edge(self, a: int, b: int) -> bool:
        return b in self.adj.get(a, frozenset())


@dataclass
class NodeState:
    view: NodeView
    decided: dict[Edge, str] = field(default_factory=dict)  # keep | remove
    inbox: int = 0
    outbox: int = 0


@dataclass
class SimResult:
    kept: frozenset[Edge]
    rounds: int
    messages: dict[str, int]
    schedule: list[list[Edge]] = field(default_factory=list)

    def to_text(self) -> str:
        lines = ["kept:"]
        for a, b in sorted(self.kept):
            lines.append(f"  {a} {b}")
        lines.append(f"rounds: {self.rounds}")
        lines.append("messages:")
        for kind in sorted(self.messages):
            lines.append(f"  {kind}: {self.messages[kind]}")
        return "\n".join(lines) + "\n"


def build_view(g: GeoGraph, u: int) -> NodeView:
    """Frozen 2-hop knowledge of u: all edges incident to u or a neighbor."""
    known = two_hop(g, u) | {u}
    pos = {v: g.pos(v) for v in known}
    adj: dict[int, set[int]] = {v: set() for v in known}
    core = g.neighbors(u) | {u}
    for a in core:
        for b in g.neighbors(a):
            adj[a].add(b)
            adj[b].add(a)
    return NodeView(u, pos, {v: frozenset(s) for v, s in adj.items()})


def local_condition(view: NodeView, u: int, v: int) -> bool:
    """The per-vertex keep test for edge uv, evaluated inside the view only."""
    pu, pv = view.pos[u], view.pos[v]
    for w in sorted(view.adj[u]):
        for x in sorted(view.adj[w]):
            if {w, x} == {u, v}:
                continue
            if not intersects(pu, pv, view.pos[w], view.pos[x]):
                continue
            if not view.knows_edge(v, x) and not view.knows_edge(u, x):
                return False
    return True


def cp_distributed(g: GeoGraph, priority: Optional[Sequence[Edge]] = None) -> SimResult:
    """Simulate the distributed run; kept set equals the global run's."""
    edges = g.edges
    if priority is None:
        priority = edges
    else:
        priority = [edge_key(*e) for e in priority]
        if sorted(priority) != edges or len(priority) != len(edges):
            raise InvalidOrder("priority must be a permutation of the edge set")
    rank = {e: i for i, e in enumerate(priority)}
    cross = crossing_map(g)

    # Dependency rounds: an edge waits for every higher-priority crossing edge.
    round_of: dict[Edge, int] = {}
    for e in priority:
        deps = [round_of[f] for f in cross[e] if rank[f] < rank[e]]
        round_of[e] = 1 + max(deps, default=0)
    n_rounds = max(round_of.values(), default=0)
    schedule = [[] for _ in range(n_rounds)]
    for e in priority:
        schedule[round_of[e] - 1].append(e)

    nodes = {u: NodeState(build_view(g, u)) for u in g.vertex_ids}
    removed: set[Edge] = set()
    kept: list[Edge] = []
    messages = {"remove-intersecting": 0, "remove-own": 0}

    def send(kind: str, recipients: int) -> None:
        messages[kind] += recipients

    for round_edges in schedule:
        for uv in round_edges:
            u, v = uv
            if uv in removed:
                nodes[u].decided[uv] = "remove"
                nodes[v].decided[uv] = "remove"
                continue
            cu = local_condition(nodes[u].view, u, v)
            cv = local_condition(nodes[v].view, v, u)
            if cu != cv:
                raise AssertionError(
                    f"endpoints disagree on {uv}; redundancy violated?")
            if cu:
                kept.append(uv)
                nodes[u].decided[uv] = "keep"
                nodes[v].decided[uv] = "keep"
                for wx in cross[uv]:
                    if wx in removed or wx in kept:
                        continue
                    removed.add(wx)
                    # each endpoint that detects the crossing informs both
                    # endpoints of the crossed edge
                    for side in (u, v):
                        if _detects(nodes[side].view, side, uv, wx):
                            send("remove-intersecting", 2)
            else:
                removed.add(uv)
                nodes[u].decided[uv] = "remove"
                nodes[v].decided[uv] = "remove"
                send("remove-own", len(g.neighbors(u)))
                send("remove-own", len(g.neighbors(v)))
    return SimResult(frozenset(kept), n_rounds, messages, schedule)


def _detects(view: NodeView, owner: int, uv: Edge, wx: Edge) -> bool:
    w, x = wx
    return (w in view.adj.get(owner, frozenset()) and view.knows_edge(w, x)) or \
           (x in view.adj.get(owner, frozenset()) and view.knows_edge(x, w))


def detectability_check(g: GeoGraph) -> PropertyReport:
    """Crossings that can veto an edge must be visible within two hops."""
    report = PropertyReport("two-hop-detectability")
    hop2 = {u: two_hop(g, u) for u in g.vertex_ids}
    edges = g.edges
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if not g.segments_cross(e, f):
                continue
            for (u, v), (w, x) in (((e[0], e[1]), f), ((e[1], e[0]), f),
                                   ((f[0], f[1]), e), ((f[1], f[0]), e)):
                blocking = not (g.has_edge(v, w) and g.has_edge(v, x))
                if blocking and w not in hop2[u] and x not in hop2[u]:
                    report.add((u, v, w, x))
    return report
