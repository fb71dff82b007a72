"""Independent test oracles, deliberately built on different machinery than
the library (rational interval arithmetic instead of orientation combos)."""

from __future__ import annotations

from fractions import Fraction


def segments_intersect_oracle(u, v, w, x) -> bool:
    """Closed segments share a point that is not an endpoint of both.

    Degenerate segments never intersect; collinear segments intersect iff
    their overlap is longer than a single shared endpoint.
    """
    if tuple(u) == tuple(v) or tuple(w) == tuple(x):
        return False
    if {tuple(u), tuple(v)} == {tuple(w), tuple(x)}:
        return False  # a segment does not intersect itself
    d1 = (v[0] - u[0], v[1] - u[1])
    d2 = (x[0] - w[0], x[1] - w[1])
    r = (w[0] - u[0], w[1] - u[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if denom != 0:
        t = Fraction(r[0] * d2[1] - r[1] * d2[0], denom)
        s = Fraction(r[0] * d1[1] - r[1] * d1[0], denom)
        if not (0 <= t <= 1 and 0 <= s <= 1):
            return False
        p = (u[0] + t * d1[0], u[1] + t * d1[1])
        on_uv_end = p == (Fraction(u[0]), Fraction(u[1])) or \
            p == (Fraction(v[0]), Fraction(v[1]))
        on_wx_end = p == (Fraction(w[0]), Fraction(w[1])) or \
            p == (Fraction(x[0]), Fraction(x[1]))
        return not (on_uv_end and on_wx_end)
    # parallel
    if r[0] * d1[1] - r[1] * d1[0] != 0:
        return False
    # collinear: compare 1-d projections onto d1
    len2 = d1[0] ** 2 + d1[1] ** 2
    b0 = r[0] * d1[0] + r[1] * d1[1]
    b1 = (x[0] - u[0]) * d1[0] + (x[1] - u[1]) * d1[1]
    lo = max(0, min(b0, b1))
    hi = min(len2, max(b0, b1))
    return lo < hi


def crossing_pairs_oracle(g):
    edges = g.edges
    out = []
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if segments_intersect_oracle(g.pos(e[0]), g.pos(e[1]),
                                         g.pos(f[0]), g.pos(f[1])):
                out.append((e, f))
    return out


def hull_chain_oracle(points, start, goal):
    """Finest start-to-goal boundary chain by brute force over subsets.

    A point belongs to the chain iff no other chain candidate lies strictly
    right of any walk edge; computed by exhaustively testing every candidate
    sequence is infeasible, so instead: a point p is ON the chain iff p is on
    the boundary walk, i.e. there is no pair (a, b) of input points with p
    strictly right of a->b while every input point is weakly left of a->b.
    The chain is then ordered by the walk from start.
    """
    from cpplanar.geometry import Point

    def cross(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    pts = [Point(*p) for p in points]
    chain_members = []
    for p in pts:
        dominated = False
        for a in pts:
            for b in pts:
                if a == b or p in (a, b):
                    continue
                if all(cross(a, b, q) >= 0 for q in pts) and cross(a, b, p) < 0:
                    dominated = True
        if not dominated:
            chain_members.append(p)
    return chain_members
