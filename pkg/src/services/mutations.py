"""Matrix mutation of quivers and framed seeds, and green/red classification."""

from collections.abc import Iterable, Sequence

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher

import src.services.exceptions as service_exceptions
from src.logger import core_logger
from src.models.quiver import Quiver, Seed, VertexColor

SERVICE_NAME = "QuiverCore"


def mutate_matrix(matrix: np.ndarray, index: int) -> np.ndarray:
    """
    Fomin-Zelevinsky mutation of a skew-symmetric matrix at a 0-based index.

    ``b'[i, j] = -b[i, j]`` if ``index`` is ``i`` or ``j``, otherwise
    ``b[i, j] + sign(b[i, k]) * max(b[i, k] * b[k, j], 0)``.
    """
    column = matrix[:, index]
    row = matrix[index, :]
    result = matrix + (
        np.outer(np.abs(column), row) + np.outer(column, np.abs(row))
    ) // 2
    result[index, :] = -row
    result[:, index] = -column
    return result


def _check_vertex(n: int, k: int, what: str) -> None:
    if not 1 <= k <= n:
        core_logger.warning(
            "Rejected mutation", extra={"vertex": k, "n": n, "kind": what}
        )
        raise service_exceptions.MutationArgumentError(
            SERVICE_NAME, f"vertex {k} is not a mutable vertex of the {what} (1..{n})"
        )


def mutate(q: Quiver, k: int) -> Quiver:
    """
    Mutate a quiver at vertex ``k``.

    :param q: The quiver, left unchanged.
    :param k: 1-based vertex.
    :return: The mutated quiver.
    :raises service_exceptions.MutationArgumentError: If ``k`` is out of range.
    """
    _check_vertex(q.n, k, "quiver")
    return Quiver(mutate_matrix(q.matrix, k - 1))


def mutate_seed(s: Seed, k: int) -> Seed:
    """
    Mutate a seed at mutable vertex ``k``; frozen vertices are never mutated.

    :raises service_exceptions.MutationArgumentError: If ``k`` is not mutable.
    :raises service_exceptions.SignCoherenceError: If the result would have
        arrows between frozen vertices.
    """
    _check_vertex(s.n, k, "seed")
    matrix = mutate_matrix(s.matrix, k - 1)
    n = s.n
    if np.any(matrix[n:, n:]):
        core_logger.error(
            f"Mutation at {k} created arrows between frozen vertices",
            extra={"c_column": s.c[:, k - 1].tolist()},
        )
        raise service_exceptions.SignCoherenceError(
            SERVICE_NAME,
            f"c-column {k} is not sign-coherent, mutation links frozen vertices",
        )
    return Seed(matrix)


def mutate_sequence(s: Seed, steps: Iterable[int]) -> Seed:
    for k in steps:
        s = mutate_seed(s, k)
    return s


def frame(q: Quiver) -> Seed:
    """Framed seed: one arrow ``i -> i'`` per vertex, all vertices green."""
    return Seed.from_blocks(q, -np.eye(q.n, dtype=np.int64))


def coframe(q: Quiver) -> Seed:
    """Coframed seed: one arrow ``i' -> i`` per vertex, all vertices red."""
    return Seed.from_blocks(q, np.eye(q.n, dtype=np.int64))


def color(s: Seed, i: int) -> VertexColor:
    """
    Green iff no frozen vertex has an arrow into ``i``; red iff ``i`` has no
    arrow into a frozen vertex.

    :raises service_exceptions.SignCoherenceError: On a mixed-sign c-column.
    """
    _check_vertex(s.n, i, "seed")
    column = s.c[:, i - 1]
    if np.all(column <= 0) and np.any(column < 0):
        return VertexColor.GREEN
    if np.all(column >= 0) and np.any(column > 0):
        return VertexColor.RED
    core_logger.error(
        f"Vertex {i} is neither green nor red", extra={"c_column": column.tolist()}
    )
    raise service_exceptions.SignCoherenceError(
        SERVICE_NAME, f"sign-coherence violated at vertex {i}: {column.tolist()}"
    )


def colors(s: Seed) -> dict[int, VertexColor]:
    green = _green_mask(s)
    return {
        i: VertexColor.GREEN if green[i - 1] else VertexColor.RED
        for i in range(1, s.n + 1)
    }


def _green_mask(s: Seed) -> np.ndarray:
    c = s.c
    green = np.all(c <= 0, axis=0) & np.any(c < 0, axis=0)
    red = np.all(c >= 0, axis=0) & np.any(c > 0, axis=0)
    if not np.all(green | red):
        broken = [int(i) + 1 for i in np.nonzero(~(green | red))[0]]
        core_logger.error(f"Seed is not sign-coherent at vertices {broken}")
        raise service_exceptions.SignCoherenceError(
            SERVICE_NAME, f"sign-coherence violated at vertices {broken}"
        )
    return green


def green_vertices(s: Seed) -> list[int]:
    return [int(i) + 1 for i in np.nonzero(_green_mask(s))[0]]


def is_all_red(s: Seed) -> bool:
    return all(value == VertexColor.RED for value in colors(s).values())


def is_all_green(s: Seed) -> bool:
    return all(value == VertexColor.GREEN for value in colors(s).values())


def is_isomorphic_fixing_frozen(a: Seed, b: Seed) -> bool:
    """
    True iff some permutation of the mutable vertices carries the full arrow
    data of ``a`` onto ``b`` while every frozen vertex stays in place.

    Frozen vertices are pinned through a per-node label, so the VF2 matcher
    can only map ``j'`` to ``j'``. Multiplicities must agree as well.
    """
    if a.n != b.n:
        return False

    def node_label(graph: nx.DiGraph) -> None:
        for node, data in graph.nodes(data=True):
            data["pin"] = node if data["frozen"] else None

    graph_a, graph_b = a.to_digraph(), b.to_digraph()
    node_label(graph_a)
    node_label(graph_b)
    matcher = DiGraphMatcher(
        graph_a,
        graph_b,
        node_match=lambda x, y: x["pin"] == y["pin"],
        edge_match=lambda x, y: x["weight"] == y["weight"],
    )
    return matcher.is_isomorphic()


def canonical_key(s: Seed) -> bytes:
    """
    Exact encoding of the labeled extended matrix, used to deduplicate search
    states. Small entries are packed one byte each; the first byte records
    the packing so the two encodings never collide.
    """
    matrix = s.matrix
    if matrix.size == 0 or np.abs(matrix).max() < 128:
        return b"\x01" + s.n.to_bytes(2, "little") + matrix.astype(np.int8).tobytes()
    return b"\x08" + s.n.to_bytes(2, "little") + matrix.tobytes()


def is_source(q: Quiver, k: int) -> bool:
    return not q.predecessors(k)


def is_sink(q: Quiver, k: int) -> bool:
    return not q.successors(k)


def is_source_mutation(s: Seed, k: int) -> bool:
    """``k`` has no incoming arrow from a mutable vertex of ``s``."""
    return is_source(s.quiver, k)


def is_admissible_source_sequence(q: Quiver, steps: Sequence[int]) -> bool:
    """
    Every step mutates a source of the current quiver and every vertex is
    mutated exactly once.
    """
    if sorted(steps) != list(q.vertices):
        return False
    current = q
    for k in steps:
        if not is_source(current, k):
            return False
        current = mutate(current, k)
    return True


def full_subquiver(q: Quiver, vertices: Sequence[int]) -> Quiver:
    """Induced subquiver on ``vertices``, relabeled ``1..len(vertices)`` in the given order."""
    index = [v - 1 for v in vertices]
    return Quiver(q.matrix[np.ix_(index, index)])


def disjoint_union(
    first: Quiver, second: Quiver, bridges: Iterable[tuple[int, int]] = ()
) -> Quiver:
    """
    Place ``second`` after ``first`` (its vertex ``j`` becomes ``first.n + j``)
    and add the given arrows, written in the combined labels.
    """
    n = first.n + second.n
    matrix = np.zeros((n, n), dtype=np.int64)
    matrix[: first.n, : first.n] = first.matrix
    matrix[first.n :, first.n :] = second.matrix
    for source, target in bridges:
        matrix[source - 1, target - 1] += 1
        matrix[target - 1, source - 1] -= 1
    return Quiver(matrix)
