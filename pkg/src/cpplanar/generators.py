"""Random geometric graph generation and the bundled example fixtures.

All generators are deterministic per seed (splitmix64 stream, documented in
:mod:`cpplanar.rng`).  Fixtures are shipped as interchange-format files under
``data/fixtures``; coordinates are the source drawings scaled by 100 (or a
convenient integer factor), which preserves every orientation predicate.
"""

from __future__ import annotations

from importlib import resources
from typing import Optional

from .graph import GeoGraph, is_connected, is_rcg
from .graphio import load_graph
from .rng import SplitMix64


class BadRadii(ValueError):
    pass


class UnknownFixture(KeyError):
    pass


FIXTURE_NAMES = (
    "fig1a_1", "fig1a_2", "fig1a_3", "fig1a_4", "fig1b", "fig2", "fig3",
    "fig6b", "fig8_counterexample", "fig9_cycle3", "cycle4",
)

# Vertex-id meanings for the fixtures whose tests refer to named vertices.
FIXTURE_LABELS = {
    "fig2": {"u": 0, "v": 1, "w": 2, "x": 3, "y": 4},
    "fig3": {"u": 0, "v": 1, "w": 2, "x": 3, "y": 4},
    "fig6b": {"u1": 0, "v1": 1, "w1": 2, "x1": 3, "i1": 4, "i2": 5,
              "i3": 6, "i4": 7, "i5": 8, "p1": 9, "p2": 10},
    "fig8_counterexample": {"z": 0, "x1": 1, "x2": 2, "x3": 3,
                            "y1": 4, "y2": 5, "y3": 6},
    "fig9_cycle3": {"y": 0, "u1": 1, "u2": 2, "u3": 3,
                    "v1": 4, "v2": 5, "v3": 6},
    "cycle4": {"y": 0, "u1": 1, "u2": 2, "u3": 3, "u4": 4,
               "v1": 5, "v2": 6, "v3": 7, "v4": 8},
}


def unit_disk(n: int, radius: int, extent: int, seed: int) -> GeoGraph:
    """n vertices uniform on the integer grid [0, extent]^2; edges where the
    squared distance is at most radius^2 (boundary inclusive)."""
    if n < 0 or radius <= 0 or extent <= 0:
        raise ValueError("need n >= 0, radius > 0, extent > 0")
    rng = SplitMix64(seed)
    pts = [(rng.below(extent + 1), rng.below(extent + 1)) for _ in range(n)]
    rr = radius * radius
    edges = []
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n):
            dx = pts[j][0] - xi
            dy = pts[j][1] - yi
            if dx * dx + dy * dy <= rr and pts[i] != pts[j]:
                edges.append((i, j))
    return GeoGraph(list(enumerate(pts)), edges)


def quasi_unit_disk(n: int, r_min: int, r_max: int, extent: int,
                    seed: int) -> GeoGraph:
    """Edges certain below r_min, absent above r_max, a fair coin between."""
    if not (0 < r_min <= r_max):
        raise BadRadii(f"need 0 < r_min <= r_max, got {r_min}, {r_max}")
    if n < 0 or extent <= 0:
        raise ValueError("need n >= 0, extent > 0")
    rng = SplitMix64(seed)
    pts = [(rng.below(extent + 1), rng.below(extent + 1)) for _ in range(n)]
    lo = r_min * r_min
    hi = r_max * r_max
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            dx = pts[j][0] - pts[i][0]
            dy = pts[j][1] - pts[i][1]
            dd = dx * dx + dy * dy
            if dd > hi or pts[i] == pts[j]:
                continue
            if dd <= lo or rng.coin():
                edges.append((i, j))
    return GeoGraph(list(enumerate(pts)), edges)


def sample_rcg(n: int, radius: int, extent: int, seed: int,
               max_attempts: int = 200) -> Optional[GeoGraph]:
    """First connected graph passing the redundancy and coexistence checks.

    Returns None when max_attempts unit-disk draws are exhausted (reported,
    not raised: exhaustion is an expected outcome for sparse parameters).
    """
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        g = unit_disk(n, radius, extent, rng.next_u64())
        if g.num_vertices() and is_connected(g) and is_rcg(g):
            return g
    return None


def fixture(name: str) -> GeoGraph:
    if name not in FIXTURE_NAMES:
        raise UnknownFixture(f"unknown fixture {name!r}; see FIXTURE_NAMES")
    ref = resources.files("cpplanar").joinpath(f"data/fixtures/{name}.json")
    with ref.open("r", encoding="utf-8") as fh:
        return load_graph(fh)
