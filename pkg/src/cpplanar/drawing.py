"""Rendering of geometric graphs: SVG 1.1 text and matplotlib figures.

Both renderers draw kept edges solid and removed edges dashed, mirroring the
source drawings.  The SVG output is plain deterministic text (byte-stable for
golden tests); matplotlib is imported lazily so library users without a
display stack pay nothing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .graph import GeoGraph, edge_key

VIEW = 1000
MARGIN = 40


def _transform(g: GeoGraph):
    xs = [g.pos(v).x for v in g.vertex_ids] or [0]
    ys = [g.pos(v).y for v in g.vertex_ids] or [0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    scale = Fraction(VIEW - 2 * MARGIN, span)
    x0, y1 = min(xs), max(ys)

    def to_view(p):
        # flip y: svg grows downward
        return (float(MARGIN + (p.x - x0) * scale),
                float(MARGIN + (y1 - p.y) * scale))

    return to_view


def render_svg(g: GeoGraph, kept: Optional[Iterable[tuple[int, int]]] = None,
               labels: bool = True) -> str:
    keep = None if kept is None else {edge_key(*e) for e in kept}
    to_view = _transform(g)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {VIEW} {VIEW}">',
        f'<rect width="{VIEW}" height="{VIEW}" fill="white"/>',
    ]
    for a, b in g.edges:
        xa, ya = to_view(g.pos(a))
        xb, yb = to_view(g.pos(b))
        dashed = keep is not None and (a, b) not in keep
        style = 'stroke="black" stroke-width="2"'
        if dashed:
            style += ' stroke-dasharray="8 6" stroke-width="1.2"'
        lines.append(f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" '
                     f'y2="{yb:.2f}" {style}/>')
    for v in g.vertex_ids:
        x, y = to_view(g.pos(v))
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="5" fill="black"/>')
        if labels:
            lines.append(f'<text x="{x + 8:.2f}" y="{y - 8:.2f}" '
                         f'font-size="20">{v}</text>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"


def save_svg(g: GeoGraph, path: str,
             kept: Optional[Iterable[tuple[int, int]]] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(g, kept))


def save_figure(g: GeoGraph, path: str,
                kept: Optional[Iterable[tuple[int, int]]] = None,
                title: str = "") -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    keep = None if kept is None else {edge_key(*e) for e in kept}
    fig, ax = plt.subplots(figsize=(6, 6))
    for a, b in g.edges:
        pa, pb = g.pos(a), g.pos(b)
        dashed = keep is not None and (a, b) not in keep
        ax.plot([pa.x, pb.x], [pa.y, pb.y],
                linestyle="--" if dashed else "-",
                linewidth=1.0 if dashed else 1.8, color="black")
    xs = [g.pos(v).x for v in g.vertex_ids]
    ys = [g.pos(v).y for v in g.vertex_ids]
    ax.scatter(xs, ys, s=24, color="black", zorder=3)
    for v in g.vertex_ids:
        ax.annotate(str(v), (g.pos(v).x, g.pos(v).y),
                    textcoords="offset points", xytext=(5, 5), fontsize=8)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_duration_chart(rows, path: str) -> None:
    """Bar chart of suite run durations next to the tabular report."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [r.task_id for r in rows]
    secs = [r.seconds for r in rows]
    colors = ["tab:blue" if r.ok else "tab:red" for r in rows]
    fig, ax = plt.subplots(figsize=(max(6, 0.35 * len(names)), 4))
    ax.bar(range(len(names)), secs, color=colors)
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=90, fontsize=7)
    ax.set_ylabel("seconds")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
