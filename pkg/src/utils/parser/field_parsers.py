import re

FROZEN_MARK = "'"

_INT = re.compile(r"^[+-]?\d+$")


def parse_int(value: str) -> int:
    value = value.strip()
    if not _INT.match(value):
        raise ValueError(f"Invalid integer: '{value}'")
    return int(value)


def parse_count(value: str) -> int:
    number = parse_int(value)
    if number < 0:
        raise ValueError(f"Expected a non-negative count, got {number}")
    return number


def parse_vertex(value: str, n: int) -> tuple[int, bool]:
    """A 1-based vertex, optionally primed to mark the frozen copy. Returns (vertex, frozen)."""
    value = value.strip()
    frozen = value.endswith(FROZEN_MARK)
    vertex = parse_int(value[:-1] if frozen else value)
    if not 1 <= vertex <= n:
        raise ValueError(f"Vertex {vertex} outside 1..{n}")
    return vertex, frozen


def parse_polygon_vertex(value: str, m: int) -> int:
    vertex = parse_int(value)
    if not 0 <= vertex < m:
        raise ValueError(f"Polygon vertex {vertex} outside 0..{m - 1}")
    return vertex


def parse_steps(value: str) -> list[int]:
    """A sequence of 1-based vertices separated by spaces or commas."""
    tokens = [token for token in re.split(r"[\s,]+", value.strip()) if token]
    steps = [parse_int(token) for token in tokens]
    if any(step < 1 for step in steps):
        raise ValueError("Sequence vertices are 1-based")
    return steps
