"""Structural parse of type A quivers into fans, zigzags and 3-cycle configurations."""

from collections.abc import Iterable

import networkx as nx

import src.services.exceptions as service_exceptions
from src.logger import procedures_logger
from src.models.quiver import Quiver
from src.schemas.decomposition import (
    CycleConfig,
    Decomposition,
    InnermostRegion,
    Region,
    RegionCycle,
    Triple,
)

SERVICE_NAME = "TypeADecomposition"


def three_cycles(q: Quiver, vertices: Iterable[int] | None = None) -> list[Triple]:
    """
    Oriented 3-cycles ``(a, b, c)`` with arrows ``a -> b -> c -> a`` and ``a``
    the smallest vertex, optionally restricted to ``vertices``.
    """
    allowed = set(q.vertices if vertices is None else vertices)
    triangles = []
    for a in sorted(allowed):
        for b in q.successors(a):
            if b <= a or b not in allowed:
                continue
            for c in q.successors(b):
                if c > a and c in allowed and q.b(c, a) > 0:
                    triangles.append((a, b, c))
    return sorted(triangles)


def count_three_cycles(q: Quiver) -> int:
    return len(three_cycles(q))


def triangle_edges(triangle: Triple) -> list[tuple[int, int]]:
    a, b, c = triangle
    return [(a, b), (b, c), (c, a)]


def successor_in(triangle: Triple, v: int) -> int:
    index = triangle.index(v)
    return triangle[(index + 1) % 3]


def predecessor_in(triangle: Triple, v: int) -> int:
    index = triangle.index(v)
    return triangle[(index - 1) % 3]


def connected_components(q: Quiver) -> list[list[int]]:
    """Vertex sets of the connected components of the underlying graph, by smallest vertex."""
    graph = q.to_digraph().to_undirected()
    return sorted(sorted(component) for component in nx.connected_components(graph))


def is_type_a(q: Quiver) -> bool:
    """
    Structural test for quivers mutation equivalent to a type A orientation
    (component-wise).

    Arrows are simple, every chordless cycle of the underlying graph is an
    oriented 3-cycle, every vertex has at most four neighbours, a vertex with
    four neighbours lies in two 3-cycles covering all of them, and a vertex
    with three neighbours lies in exactly one 3-cycle.
    """
    if not q.is_simply_laced():
        return False

    undirected = q.to_digraph().to_undirected()
    for cycle in nx.chordless_cycles(undirected):
        if len(cycle) != 3:
            return False
        a, b, c = cycle
        if not (
            q.b(a, b) == q.b(b, c) == q.b(c, a) == 1
            or q.b(b, a) == q.b(c, b) == q.b(a, c) == 1
        ):
            return False

    triangles = three_cycles(q)
    edge_use: dict[frozenset[int], int] = {}
    at_vertex: dict[int, list[Triple]] = {v: [] for v in q.vertices}
    for triangle in triangles:
        for u, w in triangle_edges(triangle):
            edge = frozenset((u, w))
            edge_use[edge] = edge_use.get(edge, 0) + 1
            if edge_use[edge] > 1:
                return False
        for v in triangle:
            at_vertex[v].append(triangle)

    for v in q.vertices:
        degree = len(q.neighbors(v))
        if degree > 4:
            return False
        if degree == 4:
            if len(at_vertex[v]) != 2:
                return False
            covered = {u for triangle in at_vertex[v] for u in triangle} - {v}
            if covered != set(q.neighbors(v)):
                return False
        elif degree == 3 and len(at_vertex[v]) != 1:
            return False
    return True


def require_type_a(q: Quiver) -> None:
    if not is_type_a(q):
        procedures_logger.warning(f"Quiver with n={q.n} is not of type A")
        raise service_exceptions.StructureError(
            SERVICE_NAME, "quiver is not of type A"
        )


def cycle_configs(q: Quiver, vertices: Iterable[int] | None = None) -> list[CycleConfig]:
    """Maximal connected unions of 3-cycles, ordered by smallest vertex."""
    triangles = three_cycles(q, vertices)
    graph = nx.Graph()
    for triangle in triangles:
        graph.add_edges_from(triangle_edges(triangle))

    configs = []
    for component in sorted(sorted(c) for c in nx.connected_components(graph)):
        members = set(component)
        own = [triangle for triangle in triangles if triangle[0] in members]
        configs.append(_build_config(sorted(members), own))
    return configs


def _build_config(vertices: list[int], triangles: list[Triple]) -> CycleConfig:
    membership: dict[int, list[int]] = {}
    for index, triangle in enumerate(triangles):
        for v in triangle:
            membership.setdefault(v, []).append(index)
    shared = sorted(v for v, owners in membership.items() if len(owners) == 2)
    tree_edges = sorted(tuple(sorted(membership[v])) for v in shared)
    return CycleConfig(
        vertices=vertices,
        triangles=triangles,
        shared_vertices=shared,
        tree_edges=tree_edges,
    )


def triangle_graph(cfg: CycleConfig) -> nx.Graph:
    """One node per 3-cycle of ``cfg``, one edge per shared vertex."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(cfg.triangles)))
    for first, second in cfg.tree_edges:
        shared = set(cfg.triangles[first]) & set(cfg.triangles[second])
        graph.add_edge(first, second, shared=shared.pop())
    return graph


def maximal_directed_runs(q: Quiver, arrows: set[tuple[int, int]]) -> list[list[int]]:
    """
    Maximal directed paths in the graph formed by ``arrows``, whose vertices
    have at most two incident arrows each. Ordered by (start, second vertex).
    """
    out_arrows: dict[int, list[int]] = {}
    in_degree: dict[int, int] = {}
    for source, target in arrows:
        out_arrows.setdefault(source, []).append(target)
        in_degree[target] = in_degree.get(target, 0) + 1

    runs = []
    for start in sorted(out_arrows):
        if in_degree.get(start, 0):
            continue
        for second in sorted(out_arrows[start]):
            run = [start, second]
            current = second
            while in_degree.get(current, 0) == 1 and len(out_arrows.get(current, [])) == 1:
                current = out_arrows[current][0]
                run.append(current)
            runs.append(run)
    return runs


def decompose(q: Quiver) -> Decomposition:
    """
    Split a type A quiver into 3-cycle configurations, maximal fans, and the
    sources ``C_i`` and sinks ``K_j`` of its acyclic part.

    ``C_i`` and ``K_j`` are numbered by ascending vertex label, not by position
    along a zigzag; ``F_h_j`` numbers fans in the order of
    :func:`maximal_directed_runs` and interior vertices from source to sink.

    :raises service_exceptions.StructureError: If ``q`` is not of type A.
    """
    require_type_a(q)

    configs = cycle_configs(q)
    in_config = {v for cfg in configs for v in cfg.vertices}
    cycle_arrows = {
        edge for cfg in configs for t in cfg.triangles for edge in triangle_edges(t)
    }
    plain_arrows = {arrow for arrow in q.arrows if arrow not in cycle_arrows}

    fans = [run for run in maximal_directed_runs(q, plain_arrows) if len(run) >= 3]

    sources, sinks = [], []
    roles: dict[int, list[str]] = {v: [] for v in q.vertices}
    for v in q.vertices:
        if v in in_config:
            roles[v].append("cycle")
            continue
        if not q.predecessors(v):
            sources.append(v)
            roles[v].append("source")
        elif not q.successors(v):
            sinks.append(v)
            roles[v].append("sink")

    labels: dict[int, str] = {}
    for i, v in enumerate(sources, start=1):
        labels[v] = f"C_{i}"
    for j, v in enumerate(sinks, start=1):
        labels[v] = f"K_{j}"
    for h, fan in enumerate(fans, start=1):
        for j, v in enumerate(fan[1:-1], start=1):
            labels[v] = f"F_{h}_{j}"
        for v in fan:
            roles[v].append("fan")
    for cfg in configs:
        for v in cfg.shared_vertices:
            roles[v].append("shared")

    decomposition = Decomposition(
        n=q.n,
        fans=fans,
        sources=sources,
        sinks=sinks,
        cycle_configs=configs,
        labels=labels,
        roles=roles,
    )
    procedures_logger.info(
        f"Decomposed quiver n={q.n}: {len(configs)} configurations, "
        f"{len(fans)} fans, {len(sources)} sources, {len(sinks)} sinks"
    )
    return decomposition


def region_decomposition(cfg: CycleConfig) -> CycleConfig:
    """
    Choose the innermost 3-cycle and peel the others into regions.

    The innermost 3-cycle is the leaf of the triangle tree with the smallest
    minimum vertex. Region ``i`` consists of the leaves of what remains after
    regions ``1..i-1`` are removed, never including the innermost 3-cycle. In
    each peeled 3-cycle the leader is the vertex with an arrow into the shared
    vertex, and the follower is the vertex the shared vertex points to.

    :raises service_exceptions.StructureError: If the 3-cycles of ``cfg`` are
        not connected or do not form a tree.
    """
    if not cfg.triangles:
        raise service_exceptions.StructureError(
            SERVICE_NAME, "configuration has no 3-cycles"
        )
    graph = triangle_graph(cfg)
    if not nx.is_connected(graph):
        raise service_exceptions.StructureError(
            SERVICE_NAME, "3-cycles of the configuration are not connected"
        )
    if not nx.is_tree(graph):
        procedures_logger.error(f"Triangle graph of {cfg.vertices} has a cycle")
        raise service_exceptions.StructureError(
            SERVICE_NAME, "3-cycles of the configuration do not form a tree"
        )

    triangles = cfg.triangles
    leaves = [node for node in graph.nodes if graph.degree(node) <= 1]
    innermost = min(leaves, key=lambda node: (min(triangles[node]), node))

    residual = graph.copy()
    regions: list[Region] = []
    while residual.number_of_nodes() > 1:
        peeled = [
            node
            for node in residual.nodes
            if node != innermost and residual.degree(node) == 1
        ]
        cycles = []
        for node in peeled:
            (neighbour,) = residual.neighbors(node)
            shared = residual.edges[node, neighbour]["shared"]
            triangle = triangles[node]
            cycles.append(
                RegionCycle(
                    triangle=triangle,
                    shared=shared,
                    leader=predecessor_in(triangle, shared),
                    follower=successor_in(triangle, shared),
                )
            )
        regions.append(
            Region(
                index=len(regions) + 1,
                cycles=sorted(cycles, key=lambda cycle: cycle.leader),
            )
        )
        residual.remove_nodes_from(peeled)

    triangle = triangles[innermost]
    if graph.degree(innermost):
        (neighbour,) = graph.neighbors(innermost)
        s = graph.edges[innermost, neighbour]["shared"]
        inner = InnermostRegion(
            triangle=triangle,
            v_m1=predecessor_in(triangle, s),
            v_m2=successor_in(triangle, s),
            s=s,
        )
    else:
        inner = InnermostRegion(triangle=triangle, v_m1=triangle[1], v_m2=triangle[0])

    procedures_logger.info(
        f"Innermost 3-cycle {triangle}, {len(regions)} regions around it"
    )
    return cfg.model_copy(update={"regions": regions, "innermost": inner})
