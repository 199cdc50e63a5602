"""
Triangulated polygons: quivers of triangulations, flips, rotation, exhaustive
enumeration, and the repeated-flip witnesses behind the ``n + t`` lower bound.
"""

from collections import Counter
from collections.abc import Iterator, Sequence
from functools import lru_cache
from itertools import combinations, product

import networkx as nx
import numpy as np

import src.services.exceptions as service_exceptions
from src.config import get_settings
from src.logger import triangulation_logger
from src.models.quiver import Quiver
from src.models.triangulation import (
    Chord,
    InscribedPolygon,
    Triangulation,
    Triple,
    normalize_chord,
)
from src.schemas.sequence import MutationSequence
from src.services.green_sequences import is_mgs
from src.services.mutations import mutate

settings = get_settings()

SERVICE_NAME = "Triangulations"


def crosses(first: Chord, second: Chord, m: int) -> bool:
    """
    Chords cross iff they share no endpoint and exactly one endpoint of
    ``second`` lies strictly between the endpoints of ``first``.
    """
    a, b = normalize_chord(*first, m)
    c, d = normalize_chord(*second, m)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def is_side(chord: Chord, m: int) -> bool:
    u, v = normalize_chord(*chord, m)
    return v - u in (1, m - 1)


def validation_errors(t: Triangulation) -> list[str]:
    errors = []
    if t.m < 3:
        errors.append(f"polygon needs at least 3 vertices, got {t.m}")
        return errors
    if t.n != t.m - 3:
        errors.append(f"{t.n} arcs, a triangulation of a {t.m}-gon has {t.m - 3}")
    for label, (u, v) in enumerate(t.chords, start=1):
        if u == v or is_side((u, v), t.m):
            errors.append(f"arc {label} = {{{u},{v}}} is not a diagonal")
    if len(set(t.chords)) != t.n:
        errors.append("repeated arcs")
    for (i, first), (j, second) in combinations(enumerate(t.chords, start=1), 2):
        if crosses(first, second, t.m):
            errors.append(f"arcs {i} and {j} cross")
    return errors


def is_valid(t: Triangulation) -> bool:
    return not validation_errors(t)


def require_valid(t: Triangulation) -> None:
    errors = validation_errors(t)
    if errors:
        triangulation_logger.warning(
            "Invalid triangulation", extra={"m": t.m, "errors": errors}
        )
        raise service_exceptions.StructureError(SERVICE_NAME, "; ".join(errors))


def _edges(t: Triangulation) -> set[Chord]:
    sides = {normalize_chord(i, i + 1, t.m) for i in range(t.m)}
    return sides | t.chord_set()


def triangles(t: Triangulation) -> list[Triple]:
    """The ``m - 2`` triangles, each as increasing (hence counterclockwise) vertices."""
    edges = _edges(t)
    return [
        (x, y, z)
        for x, y, z in combinations(range(t.m), 3)
        if (x, y) in edges and (y, z) in edges and (x, z) in edges
    ]


def interior_triangles(t: Triangulation) -> list[Triple]:
    """Triangles whose three sides are all arcs."""
    arcs = t.chord_set()
    return [
        (x, y, z)
        for x, y, z in triangles(t)
        if {(x, y), (y, z), (x, z)} <= arcs
    ]


def quiver_from_triangulation(t: Triangulation) -> Quiver:
    """
    One vertex per arc; inside each triangle an arrow from an arc to the arc
    that follows it counterclockwise.

    :raises service_exceptions.StructureError: If ``t`` is not a triangulation.
    """
    require_valid(t)
    matrix = np.zeros((t.n, t.n), dtype=np.int64)
    for x, y, z in triangles(t):
        sides = [t.label_of((x, y)), t.label_of((y, z)), t.label_of((z, x))]
        for current, following in zip(sides, sides[1:] + sides[:1]):
            if current is not None and following is not None:
                matrix[current - 1, following - 1] += 1
                matrix[following - 1, current - 1] -= 1
    return Quiver(matrix)


def flip(t: Triangulation, label: int) -> Triangulation:
    """Replace arc ``label`` by the other diagonal of its quadrilateral, keeping the label."""
    if label not in t.labels:
        raise service_exceptions.MutationArgumentError(
            SERVICE_NAME, f"no arc labeled {label}"
        )
    a, c = t.arc(label)
    edges = _edges(t)
    apexes = [
        x
        for x in range(t.m)
        if x not in (a, c)
        and normalize_chord(a, x, t.m) in edges
        and normalize_chord(c, x, t.m) in edges
    ]
    if len(apexes) != 2:
        raise service_exceptions.StructureError(
            SERVICE_NAME, f"arc {label} does not bound two triangles"
        )
    b, d = apexes
    return t.replace(label, normalize_chord(b, d, t.m))


def apply_flips(t: Triangulation, seq: MutationSequence | Sequence[int]) -> Triangulation:
    steps = seq.steps if isinstance(seq, MutationSequence) else seq
    for label in steps:
        t = flip(t, label)
    return t


def rotate(t: Triangulation, shift: int) -> Triangulation:
    return Triangulation(t.m, tuple((u + shift, v + shift) for u, v in t.chords))


def tau(t: Triangulation) -> Triangulation:
    """Clockwise rotation by one polygon vertex, labels preserved."""
    return rotate(t, -1)


def tau_inv(t: Triangulation) -> Triangulation:
    return rotate(t, 1)


@lru_cache(maxsize=None)
def _chord_sets(vertices: tuple[int, ...]) -> tuple[frozenset[Chord], ...]:
    """All triangulations of the convex polygon on ``vertices`` (in order)."""
    if len(vertices) <= 3:
        return (frozenset(),)
    first, last = vertices[0], vertices[-1]
    result = []
    for k in range(1, len(vertices) - 1):
        apex = vertices[k]
        own = set()
        if k > 1:
            own.add((first, apex))
        if k < len(vertices) - 2:
            own.add((apex, last))
        for left, right in product(
            _chord_sets(vertices[: k + 1]), _chord_sets(vertices[k:])
        ):
            result.append(frozenset(own) | left | right)
    return tuple(result)


def enumerate_triangulations(m: int) -> Iterator[Triangulation]:
    """
    Every triangulation of the ``m``-gon exactly once, arcs labeled ``1..n``
    in lexicographic chord order.

    :raises service_exceptions.EnumerationLimitError: If ``m`` is above
        ``ENUMERATION_MAX_POLYGON``.
    """
    if m < 3:
        raise service_exceptions.StructureError(
            SERVICE_NAME, f"polygon needs at least 3 vertices, got {m}"
        )
    if m > settings.ENUMERATION_MAX_POLYGON:
        raise service_exceptions.EnumerationLimitError(
            SERVICE_NAME,
            f"m={m} is above the enumeration limit {settings.ENUMERATION_MAX_POLYGON}",
        )
    chord_sets = sorted(sorted(chords) for chords in _chord_sets(tuple(range(m))))
    triangulation_logger.info(f"Enumerated {len(chord_sets)} triangulations of the {m}-gon")
    for chords in chord_sets:
        yield Triangulation(m, tuple(chords))


def flip_mutation_square(t: Triangulation, label: int) -> bool:
    """The quiver of the flipped triangulation equals the mutated quiver."""
    return quiver_from_triangulation(flip(t, label)) == mutate(
        quiver_from_triangulation(t), label
    )


def _require_mgs(t: Triangulation, seq: MutationSequence | Sequence[int]) -> None:
    if not is_mgs(quiver_from_triangulation(t), seq):
        raise service_exceptions.PreconditionError(
            SERVICE_NAME, "sequence is not a maximal green sequence of the triangulation"
        )


def mgs_endpoint_is_tau(t: Triangulation, seq: MutationSequence | Sequence[int]) -> bool:
    """
    Flipping along a maximal green sequence ends at the rotated triangulation
    (as a set of chords).

    :raises service_exceptions.PreconditionError: If ``seq`` is not an MGS.
    """
    _require_mgs(t, seq)
    return apply_flips(t, seq).chord_set() == tau(t).chord_set()


def _triangle_arcs(t: Triangulation, triangle: Triple) -> list[int]:
    x, y, z = triangle
    return [t.label_of((x, y)), t.label_of((y, z)), t.label_of((x, z))]


def _adjacency(t: Triangulation) -> nx.Graph:
    """Interior triangles, joined when they share an arc."""
    graph = nx.Graph()
    inner = interior_triangles(t)
    graph.add_nodes_from(inner)
    for first, second in combinations(inner, 2):
        if len(set(first) & set(second)) == 2:
            graph.add_edge(first, second)
    return graph


def _polygon(t: Triangulation, members: frozenset[Triple]) -> InscribedPolygon:
    arcs = Counter(label for triangle in members for label in _triangle_arcs(t, triangle))
    return InscribedPolygon(
        triangles=tuple(sorted(members)),
        boundary=tuple(sorted(label for label, uses in arcs.items() if uses == 1)),
    )


def maximal_inscribed_polygons(t: Triangulation) -> list[InscribedPolygon]:
    graph = _adjacency(t)
    return sorted(
        (_polygon(t, frozenset(component)) for component in nx.connected_components(graph)),
        key=lambda polygon: polygon.triangles,
    )


def inscribed_polygons(t: Triangulation) -> list[InscribedPolygon]:
    """
    Every closed polygon made of arcs: each connected union of interior
    triangles glued along arcs, maximal ones included.

    :raises service_exceptions.EnumerationLimitError: If there are more than
        ``INSCRIBED_POLYGON_MAX_TRIANGLES`` interior triangles.
    """
    require_valid(t)
    graph = _adjacency(t)
    if graph.number_of_nodes() > settings.INSCRIBED_POLYGON_MAX_TRIANGLES:
        raise service_exceptions.EnumerationLimitError(
            SERVICE_NAME,
            f"{graph.number_of_nodes()} interior triangles is above the limit "
            f"{settings.INSCRIBED_POLYGON_MAX_TRIANGLES}",
        )
    seen: set[frozenset[Triple]] = set()
    frontier = [frozenset([node]) for node in graph.nodes]
    while frontier:
        members = frontier.pop()
        if members in seen:
            continue
        seen.add(members)
        for triangle in members:
            for neighbour in graph.neighbors(triangle):
                if neighbour not in members:
                    frontier.append(members | {neighbour})
    return sorted(
        (_polygon(t, members) for members in seen),
        key=lambda polygon: (len(polygon.triangles), polygon.triangles),
    )


def double_flip_witness(t: Triangulation, seq: MutationSequence | Sequence[int]) -> bool:
    """
    Check the repeated-flip structure of a maximal green sequence.

    Every inscribed polygon must have a boundary arc flipped at least twice.
    Peeling each maximal polygon one triangle at a time (drop the triangle
    holding the chosen twice-flipped boundary arc, recurse on what is left)
    must then find a distinct twice-flipped arc for every interior triangle.

    :raises service_exceptions.PreconditionError: If ``seq`` is not an MGS.
    """
    _require_mgs(t, seq)
    steps = seq.steps if isinstance(seq, MutationSequence) else seq
    flips = Counter(steps)

    for polygon in inscribed_polygons(t):
        if not any(flips[label] >= 2 for label in polygon.boundary):
            triangulation_logger.info(
                f"Polygon {polygon.triangles} has no arc flipped twice"
            )
            return False

    graph = _adjacency(t)
    witnesses: set[int] = set()
    stack = [frozenset(component) for component in nx.connected_components(graph)]
    while stack:
        members = stack.pop()
        polygon = _polygon(t, members)
        candidates = [
            label
            for label in polygon.boundary
            if flips[label] >= 2 and label not in witnesses
        ]
        if not candidates:
            return False
        chosen = candidates[0]
        witnesses.add(chosen)
        (holder,) = [tr for tr in members if chosen in _triangle_arcs(t, tr)]
        rest = graph.subgraph(members - {holder})
        stack.extend(frozenset(part) for part in nx.connected_components(rest))
    return len(witnesses) == graph.number_of_nodes()
