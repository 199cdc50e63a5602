from src.models.quiver import Quiver
from src.models.triangulation import Triangulation
from src.services.mutations import frame
from src.utils.export import (
    quiver_to_dot,
    quiver_to_svg,
    triangulation_to_dot,
    triangulation_to_svg,
)


def test_quiver_to_dot(three_cycle: Quiver):
    dot = quiver_to_dot(three_cycle)
    assert dot.startswith("digraph quiver {")
    assert '"1" -> "2";' in dot
    assert '"3" -> "1";' in dot
    assert dot.count("->") == 3


def test_seed_to_dot_marks_frozen_vertices(a2: Quiver):
    dot = quiver_to_dot(frame(a2))
    assert "\"1'\" [label=\"1'\", shape=box" in dot
    assert "\"1\" -> \"1'\" [style=dashed];" in dot


def test_triangulation_to_dot(hexagon_triangle: Triangulation):
    dot = triangulation_to_dot(hexagon_triangle)
    assert dot.startswith("graph triangulation {")
    assert '"0" -- "2" [label="1", color=blue];' in dot
    assert dot.count(" -- ") == 6 + 3


def test_svg_output(hexagon_triangle: Triangulation, three_cycle: Quiver):
    svg = triangulation_to_svg(hexagon_triangle)
    assert svg.startswith("<svg")
    assert svg.count('class="arc"') == 3
    assert quiver_to_svg(three_cycle).count('class="arrow"') == 3
