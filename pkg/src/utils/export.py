"""
DOT and SVG writers for quivers, seeds and triangulations.

Render a DOT file with graphviz, e.g. ``dot -Tpng -O quiver.gv``.
"""

import math

from src.models.quiver import Quiver, Seed
from src.models.triangulation import Triangulation

SVG_SIZE = 400
SVG_MARGIN = 40


def quiver_to_dot(q: Quiver | Seed, name: str = "quiver") -> str:
    lines = [f"digraph {name} {{", "\tnode [shape=circle];"]
    n = q.n
    for v in range(1, n + 1):
        lines.append(f'\t"{v}" [label="{v}"];')
    if isinstance(q, Seed):
        for v in range(1, n + 1):
            lines.append(
                f"\t\"{v}'\" [label=\"{v}'\", shape=box, style=filled, fillcolor=lightgray];"
            )
    for a, b in q.arrows:
        lines.append(f'\t"{a}" -> "{b}";')
    if isinstance(q, Seed):
        for a, b in q.frozen_arrows:
            lines.append(f'\t"{a}" -> "{b}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _polygon_points(m: int) -> list[tuple[float, float]]:
    radius = SVG_SIZE / 2 - SVG_MARGIN
    center = SVG_SIZE / 2
    points = []
    for k in range(m):
        angle = 2 * math.pi * k / m - math.pi / 2
        # counterclockwise on screen: y grows downwards
        points.append(
            (center + radius * math.cos(angle), center - radius * math.sin(angle))
        )
    return points


def triangulation_to_dot(t: Triangulation, name: str = "triangulation") -> str:
    points = _polygon_points(t.m)
    scale = 72.0
    lines = [f"graph {name} {{", "\tnode [shape=point];"]
    for k, (x, y) in enumerate(points):
        lines.append(
            f'\t"{k}" [xlabel="{k}", pos="{x / scale:.3f},{-y / scale:.3f}!"];'
        )
    for k in range(t.m):
        lines.append(f'\t"{k}" -- "{(k + 1) % t.m}";')
    for label, (u, v) in enumerate(t.chords, start=1):
        lines.append(f'\t"{u}" -- "{v}" [label="{label}", color=blue];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def triangulation_to_svg(t: Triangulation) -> str:
    """Static SVG: polygon on a circle, arcs drawn as labeled chords."""
    points = _polygon_points(t.m)
    outline = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" '
        f'height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'  <polygon points="{outline}" fill="none" stroke="black"/>',
    ]
    for label, (u, v) in enumerate(t.chords, start=1):
        (x1, y1), (x2, y2) = points[u], points[v]
        lines.append(
            f'  <line class="arc" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" '
            f'y2="{y2:.2f}" stroke="blue"/>'
        )
        lines.append(
            f'  <text x="{(x1 + x2) / 2:.2f}" y="{(y1 + y2) / 2:.2f}" '
            f'font-size="12" fill="blue">{label}</text>'
        )
    for k, (x, y) in enumerate(points):
        lines.append(f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
        lines.append(
            f'  <text x="{x + 6:.2f}" y="{y - 6:.2f}" font-size="12">{k}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def quiver_to_svg(q: Quiver | Seed) -> str:
    """Vertices on a circle, arrows as straight lines with arrowheads."""
    n = q.n
    points = _polygon_points(max(n, 1))
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" '
        f'height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        "  <defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" "
        'refX="14" refY="4" orient="auto"><path d="M0,0 L8,4 L0,8 z"/></marker></defs>',
    ]
    for a, b in q.arrows:
        (x1, y1), (x2, y2) = points[a - 1], points[b - 1]
        lines.append(
            f'  <line class="arrow" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" '
            f'y2="{y2:.2f}" stroke="black" marker-end="url(#head)"/>'
        )
    for v in range(1, n + 1):
        x, y = points[v - 1]
        lines.append(f'  <circle cx="{x:.2f}" cy="{y:.2f}" r="10" fill="white" stroke="black"/>')
        lines.append(
            f'  <text x="{x:.2f}" y="{y + 4:.2f}" font-size="12" '
            f'text-anchor="middle">{v}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
