"""Exact planar predicates over integer coordinates.

Everything in this module is pure integer / rational arithmetic: there is no
floating point anywhere, so all predicates are decided exactly, including the
limit cases (point on a line, endpoint touching, collinear overlap).  Python
integers are unbounded, hence products of 64-bit coordinates never overflow.

The orientation predicate ``left`` is the primitive everything else is built
from: ``left(u, v, w)`` holds when ``w`` lies strictly left of the oriented
line through ``u`` and ``v``, or on the open ray from ``u`` through ``v``
(``w != u``; the ray includes ``v`` itself and every collinear point ahead of
``u``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple


class Point(NamedTuple):
    x: int
    y: int


class RationalPoint(NamedTuple):
    """Exact rational plane point (reduced, positive denominators)."""

    x: Fraction
    y: Fraction

    @property
    def x_num(self) -> int:
        return self.x.numerator

    @property
    def x_den(self) -> int:
        return self.x.denominator

    @property
    def y_num(self) -> int:
        return self.y.numerator

    @property
    def y_den(self) -> int:
        return self.y.denominator

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1


class NotIntersecting(ValueError):
    """intersection_point was called on segments that do not intersect."""


class CollinearOverlap(ValueError):
    """Segments overlap in a subsegment; there is no single crossing point."""


def left(u, v, w) -> bool:
    """w strictly left of the oriented line u->v, or on the open ray u->v.

    False whenever u == v or u == w; true for w == v when u != v.
    """
    ux, uy = u[0], u[1]
    ax = v[0] - ux
    ay = v[1] - uy
    bx = w[0] - ux
    by = w[1] - uy
    cross = ax * by - ay * bx
    if cross != 0:
        return cross > 0
    # Collinear: on the ray iff the projection is strictly positive.
    return ax * bx + ay * by > 0


def between(u, v, w) -> bool:
    """w strictly between u and v (open segment)."""
    return left(u, v, w) and left(v, u, w)


def intersects(u, v, w, x) -> bool:
    """Segments uv and wx share a point that is not an endpoint of both.

    Degenerate segments (u == v or w == x) never intersect anything.
    Collinear segments intersect iff they overlap in more than a single
    shared endpoint.
    """
    luvw = left(u, v, w)
    luvx = left(u, v, x)
    lvuw = left(v, u, w)
    lvux = left(v, u, x)
    if luvw and lvux:
        lwxu = left(w, x, u)
        lwxv = left(w, x, v)
        lxwu = left(x, w, u)
        lxwv = left(x, w, v)
        if lwxu and lxwv and not (u == x and v == w):
            return True
        if lwxv and lxwu:
            return True
    if luvx and lvuw:
        lwxu = left(w, x, u)
        lwxv = left(w, x, v)
        lxwu = left(x, w, u)
        lxwv = left(x, w, v)
        if lwxu and lxwv:
            return True
        if lwxv and lxwu and not (u == w and v == x):
            return True
    return False


def inside(u, v, w, x) -> bool:
    """x inside or on the boundary of the oriented triangle uvw, x not a corner.

    For collinear u, v, w this degenerates to the open subsegment given by the
    orientation (between u and w when w lies between u and v).
    """
    return left(u, v, x) and left(v, w, x) and left(w, u, x)


def intersection_point(u, v, w, x) -> RationalPoint:
    """Exact crossing point of segments uv and wx.

    Raises NotIntersecting when the segments do not intersect, and
    CollinearOverlap when they overlap in a subsegment (infinitely many
    common points, reported distinctly so callers can tell the cases apart).
    """
    if not intersects(u, v, w, x):
        raise NotIntersecting(f"segments {u}-{v} and {w}-{x} do not intersect")
    dx1 = v[0] - u[0]
    dy1 = v[1] - u[1]
    dx2 = x[0] - w[0]
    dy2 = x[1] - w[1]
    denom = dx1 * dy2 - dy1 * dx2
    if denom == 0:
        raise CollinearOverlap(f"segments {u}-{v} and {w}-{x} overlap")
    t = Fraction((w[0] - u[0]) * dy2 - (w[1] - u[1]) * dx2, denom)
    return RationalPoint(u[0] + t * dx1, u[1] + t * dy1)


def crossing_parameter(u, v, w, x) -> Fraction:
    """Parameter t in [0, 1] of the crossing point along u->v (exact)."""
    dx1 = v[0] - u[0]
    dy1 = v[1] - u[1]
    dx2 = x[0] - w[0]
    dy2 = x[1] - w[1]
    denom = dx1 * dy2 - dy1 * dx2
    if denom == 0:
        raise CollinearOverlap(f"segments {u}-{v} and {w}-{x} overlap")
    return Fraction((w[0] - u[0]) * dy2 - (w[1] - u[1]) * dx2, denom)


def on_segment(p: RationalPoint, a, b) -> bool:
    """Exact membership of a rational point in the closed segment ab."""
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    cross = (bx - ax) * (p.y - ay) - (by - ay) * (p.x - ax)
    if cross != 0:
        return False
    dot = (p.x - ax) * (bx - ax) + (p.y - ay) * (by - ay)
    if dot < 0:
        return False
    return dot <= (bx - ax) ** 2 + (by - ay) ** 2
