"""
Exhaustive search over the graph of green mutations starting at the framed seed.

States are labeled seeds keyed by :func:`canonical_key`. Successors are
explored in increasing vertex order, so every result is deterministic.
"""

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx
import numpy as np

import src.services.exceptions as service_exceptions
from src.config import get_settings
from src.logger import search_logger
from src.models.quiver import Quiver, Seed, VertexColor
from src.schemas.report import SearchReport
from src.schemas.sequence import MutationSequence
from src.services.mutations import (
    canonical_key,
    coframe,
    frame,
    green_vertices,
    is_isomorphic_fixing_frozen,
    mutate_seed,
    mutate_sequence,
)

settings = get_settings()

SERVICE_NAME = "MgsSearch"

Key = bytes


@dataclass
class SearchGraph:
    """
    Green-mutation reachability graph of one quiver.

    ``edges[key]`` lists ``(vertex, child_key)`` in increasing vertex order.
    ``parents`` holds the BFS tree, so walking it back from a sink gives a
    shortest maximal green sequence.
    """

    quiver: Quiver
    source: Key
    edges: dict[Key, list[tuple[int, Key]]] = field(default_factory=dict)
    parents: dict[Key, tuple[Key, int] | None] = field(default_factory=dict)
    sinks: list[Key] = field(default_factory=list)
    checked_sinks: set[Key] = field(default_factory=set)

    @property
    def node_count(self) -> int:
        return len(self.edges)

    @property
    def edge_count(self) -> int:
        return sum(len(children) for children in self.edges.values())

    def to_digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.edges)
        for key, children in self.edges.items():
            for vertex, child in children:
                graph.add_edge(key, child, vertex=vertex)
        return graph

    def topological_order(self) -> list[Key]:
        """
        :raises service_exceptions.SearchIntegrityError: If the graph has a cycle.
        """
        try:
            return list(nx.topological_sort(self.to_digraph()))
        except nx.NetworkXUnfeasible as e:
            search_logger.error(
                "Green mutation graph is not acyclic", exc_info=True
            )
            raise service_exceptions.SearchIntegrityError(
                SERVICE_NAME, f"cycle in the green mutation graph: {e}"
            )

    def path_to(self, key: Key) -> list[int]:
        steps: list[int] = []
        while (parent := self.parents[key]) is not None:
            key, vertex = parent
            steps.append(vertex)
        return steps[::-1]


def build_search_graph(q: Quiver, max_states: int | None = None) -> SearchGraph:
    """
    Breadth-first expansion of the framed seed along green mutations.

    :raises service_exceptions.SearchLimitError: If more than ``max_states``
        distinct seeds are reached.
    :raises service_exceptions.SearchIntegrityError: If a mutation returns the
        seed it started from.
    """
    if max_states is None:
        max_states = settings.SEARCH_MAX_STATES
    return _build_search_graph(q, max_states)


@lru_cache(maxsize=16)
def _build_search_graph(q: Quiver, max_states: int) -> SearchGraph:
    search_logger.info(f"Building green mutation graph for n={q.n}")

    start = frame(q)
    start_key = canonical_key(start)
    graph = SearchGraph(quiver=q, source=start_key)
    graph.parents[start_key] = None
    queue: deque[tuple[Key, Seed]] = deque([(start_key, start)])

    while queue:
        key, seed = queue.popleft()
        greens = green_vertices(seed)
        children: list[tuple[int, Key]] = []
        for k in greens:
            child = mutate_seed(seed, k)
            child_key = canonical_key(child)
            if child_key == key:
                raise service_exceptions.SearchIntegrityError(
                    SERVICE_NAME, f"mutation at {k} returned the same seed"
                )
            children.append((k, child_key))
            if child_key not in graph.parents:
                if len(graph.parents) >= max_states:
                    search_logger.error(
                        f"Green mutation graph exceeds {max_states} states"
                    )
                    raise service_exceptions.SearchLimitError(
                        SERVICE_NAME, f"more than {max_states} states reached"
                    )
                graph.parents[child_key] = (key, k)
                queue.append((child_key, child))
        graph.edges[key] = children
        if not greens:
            graph.sinks.append(key)

    search_logger.info(
        f"Green mutation graph: {graph.node_count} states, "
        f"{graph.edge_count} mutations, {len(graph.sinks)} all-red states"
    )
    return graph


def _require_sinks(graph: SearchGraph) -> None:
    if not graph.sinks:
        search_logger.error(f"No all-red seed reachable for n={graph.quiver.n}")
        raise service_exceptions.NoMaximalGreenSequenceError(
            SERVICE_NAME, "no all-red seed is reachable by green mutations"
        )


def _green(steps: list[int]) -> MutationSequence:
    return MutationSequence(steps=steps, trace=[VertexColor.GREEN] * len(steps))


def _check_endpoint(graph: SearchGraph, key: Key, steps: list[int]) -> None:
    """
    The seed reached by ``steps`` must be the coframed quiver up to a
    permutation of mutable vertices. Each all-red state is checked once.

    :raises service_exceptions.SearchIntegrityError: If it is not.
    """
    if key in graph.checked_sinks:
        return
    q = graph.quiver
    endpoint = mutate_sequence(frame(q), steps)
    if not is_isomorphic_fixing_frozen(endpoint, coframe(q)):
        search_logger.error(
            f"All-red seed reached by {steps} is not isomorphic to the coframed quiver"
        )
        raise service_exceptions.SearchIntegrityError(
            SERVICE_NAME, f"endpoint of {steps} is not the coframed quiver"
        )
    graph.checked_sinks.add(key)


def shortest_mgs(q: Quiver, graph: SearchGraph | None = None) -> MutationSequence:
    """
    One shortest maximal green sequence.

    BFS discovers states in order of depth, so the first all-red state in
    discovery order is a nearest one.

    :raises service_exceptions.NoMaximalGreenSequenceError: If none exists.
    """
    graph = graph or build_search_graph(q)
    _require_sinks(graph)
    depth = {key: len(graph.path_to(key)) for key in graph.sinks}
    nearest = min(graph.sinks, key=lambda key: depth[key])
    steps = graph.path_to(nearest)
    _check_endpoint(graph, nearest, steps)
    return _green(steps)


def _longest_paths(graph: SearchGraph) -> dict[Key, tuple[int, Key | None, int]]:
    best: dict[Key, tuple[int, Key | None, int]] = {graph.source: (0, None, 0)}
    for key in graph.topological_order():
        if key not in best:
            continue
        length = best[key][0]
        for vertex, child in graph.edges[key]:
            if child not in best or best[child][0] < length + 1:
                best[child] = (length + 1, key, vertex)
    return best


def longest_mgs(q: Quiver, graph: SearchGraph | None = None) -> MutationSequence:
    """A longest maximal green sequence, found by DP over topological order."""
    graph = graph or build_search_graph(q)
    _require_sinks(graph)
    best = _longest_paths(graph)
    sink = max(graph.sinks, key=lambda sink: best[sink][0])
    key = sink
    steps = []
    while (parent := best[key][1]) is not None:
        steps.append(best[key][2])
        key = parent
    steps.reverse()
    _check_endpoint(graph, sink, steps)
    result = _green(steps)
    upper_bound = q.n * (q.n + 1) // 2
    if result.length > upper_bound:
        search_logger.warning(
            f"Longest maximal green sequence has length {result.length}, "
            f"above n(n+1)/2 = {upper_bound}"
        )
    return result


def longest_mgs_length(q: Quiver, graph: SearchGraph | None = None) -> int:
    return longest_mgs(q, graph).length


def mgs_length_spectrum(q: Quiver, graph: SearchGraph | None = None) -> set[int]:
    """All lengths of maximal green sequences of ``q``."""
    graph = graph or build_search_graph(q)
    _require_sinks(graph)
    lengths: dict[Key, set[int]] = {graph.source: {0}}
    for key in graph.topological_order():
        here = lengths.get(key)
        if not here:
            continue
        for _, child in graph.edges[key]:
            lengths.setdefault(child, set()).update(length + 1 for length in here)
    return set().union(*(lengths[sink] for sink in graph.sinks))


def count_mgs(q: Quiver, graph: SearchGraph | None = None) -> int:
    """Number of distinct maximal green sequences, as an exact integer."""
    graph = graph or build_search_graph(q)
    _require_sinks(graph)
    paths: dict[Key, int] = {graph.source: 1}
    for key in graph.topological_order():
        count = paths.get(key, 0)
        if not count:
            continue
        for _, child in graph.edges[key]:
            paths[child] = paths.get(child, 0) + count
    return sum(paths[sink] for sink in graph.sinks)


def enumerate_mgs(
    q: Quiver, limit: int | None = None, graph: SearchGraph | None = None
) -> Iterator[MutationSequence]:
    """
    Every maximal green sequence of ``q``, in lexicographic order of steps.

    :param limit: Stop after this many sequences.
    """
    graph = graph or build_search_graph(q)
    sinks = set(graph.sinks)
    produced = 0
    stack: list[tuple[Key, list[int], int]] = [(graph.source, [], 0)]
    while stack:
        key, steps, position = stack.pop()
        children = graph.edges[key]
        if key in sinks:
            _check_endpoint(graph, key, steps)
            yield _green(list(steps))
            produced += 1
            if limit is not None and produced >= limit:
                return
            continue
        if position < len(children):
            stack.append((key, steps, position + 1))
            vertex, child = children[position]
            stack.append((child, [*steps, vertex], 0))


def search_report(
    q: Quiver,
    t: int | None = None,
    shortest: bool = True,
    longest: bool = True,
    spectrum: bool = True,
    count: bool = True,
) -> SearchReport:
    graph = build_search_graph(q)
    report = SearchReport(n=q.n, t=t)
    if shortest:
        witness = shortest_mgs(q, graph)
        report.length_min = witness.length
        report.witness_sequence = list(witness.steps)
    if longest:
        report.length_max = longest_mgs_length(q, graph)
    if spectrum:
        report.spectrum = sorted(mgs_length_spectrum(q, graph))
        report.length_min = report.spectrum[0]
        report.length_max = report.spectrum[-1]
    if count:
        report.count = count_mgs(q, graph)
    return report


def random_mgs(
    q: Quiver, rng: np.random.Generator, graph: SearchGraph | None = None
) -> MutationSequence:
    """A maximal green sequence drawn by a uniform random walk over green mutations."""
    graph = graph or build_search_graph(q)
    _require_sinks(graph)
    key = graph.source
    steps = []
    while children := graph.edges[key]:
        vertex, key = children[int(rng.integers(len(children)))]
        steps.append(vertex)
    return _green(steps)
