import enum
from collections.abc import Iterable
from typing import Any

import networkx as nx
import numpy as np

from src.models.base import MatrixBacked


class VertexColor(str, enum.Enum):
    GREEN = "green"
    RED = "red"


class Quiver(MatrixBacked):
    """
    A loop-free, 2-cycle-free quiver on the vertices ``1..n``.

    Stored as the skew-symmetric exchange matrix ``b`` where ``b[i, j]`` is the
    number of arrows ``i -> j`` minus the number of arrows ``j -> i``. Indices
    into the matrix are 0-based; every public method takes 1-based vertices.
    """

    __slots__ = ()

    repr_cols = ("n", "arrows")

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int]]) -> "Quiver":
        matrix = np.zeros((n, n), dtype=np.int64)
        for source, target in arrows:
            if not (1 <= source <= n and 1 <= target <= n):
                raise ValueError(f"arrow {source}->{target} outside 1..{n}")
            if source == target:
                raise ValueError(f"loop at vertex {source}")
            matrix[source - 1, target - 1] += 1
            matrix[target - 1, source - 1] -= 1
        return cls(matrix)

    @classmethod
    def empty(cls, n: int) -> "Quiver":
        return cls(np.zeros((n, n), dtype=np.int64))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def b(self, i: int, j: int) -> int:
        return int(self.matrix[i - 1, j - 1])

    @property
    def arrows(self) -> list[tuple[int, int]]:
        """Arrows as 1-based pairs, repeated by multiplicity, in row-major order."""
        result = []
        for i, j in zip(*np.nonzero(self.matrix > 0)):
            result.extend([(int(i) + 1, int(j) + 1)] * int(self.matrix[i, j]))
        return result

    def successors(self, i: int) -> list[int]:
        return [int(j) + 1 for j in np.nonzero(self.matrix[i - 1] > 0)[0]]

    def predecessors(self, i: int) -> list[int]:
        return [int(j) + 1 for j in np.nonzero(self.matrix[i - 1] < 0)[0]]

    def neighbors(self, i: int) -> list[int]:
        return [int(j) + 1 for j in np.nonzero(self.matrix[i - 1])[0]]

    def is_simply_laced(self) -> bool:
        return bool(np.all(np.abs(self.matrix) <= 1))

    def to_digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        for i, j in zip(*np.nonzero(self.matrix > 0)):
            graph.add_edge(int(i) + 1, int(j) + 1, weight=int(self.matrix[i, j]))
        return graph


class Seed(MatrixBacked):
    """
    A quiver extended by one frozen vertex ``j'`` per mutable vertex ``j``.

    The extended matrix has size ``2n``; rows and columns ``0..n-1`` are the
    mutable vertices and ``n..2n-1`` the frozen ones. ``c[j, i]`` is the signed
    number of arrows from ``j'`` into ``i``, so a framed seed has ``c = -I``.
    """

    __slots__ = ()

    repr_cols = ("n", "arrows", "frozen_arrows")

    def __init__(self, matrix: Any):
        super().__init__(matrix)
        if self.matrix.shape[0] % 2:
            raise ValueError("extended matrix must have even size")
        n = self.matrix.shape[0] // 2
        if np.any(self.matrix[n:, n:]):
            raise ValueError("arrows between frozen vertices")

    @classmethod
    def from_blocks(cls, quiver: Quiver, c: Any) -> "Seed":
        n = quiver.n
        c = np.array(c, dtype=np.int64).reshape(n, n)
        matrix = np.zeros((2 * n, 2 * n), dtype=np.int64)
        matrix[:n, :n] = quiver.matrix
        matrix[n:, :n] = c
        matrix[:n, n:] = -c.T
        return cls(matrix)

    @property
    def n(self) -> int:
        return self.matrix.shape[0] // 2

    @property
    def quiver(self) -> Quiver:
        return Quiver(self.matrix[: self.n, : self.n])

    @property
    def c(self) -> np.ndarray:
        return self.matrix[self.n :, : self.n]

    @property
    def arrows(self) -> list[tuple[int, int]]:
        return self.quiver.arrows

    @property
    def frozen_arrows(self) -> list[tuple[str, str]]:
        """Arrows touching frozen vertices, written ``("i", "j'")`` or ``("j'", "i")``."""
        result = []
        c = self.c
        for j, i in zip(*np.nonzero(c)):
            multiplicity = int(abs(c[j, i]))
            if c[j, i] > 0:
                result.extend([(f"{j + 1}'", f"{i + 1}")] * multiplicity)
            else:
                result.extend([(f"{i + 1}", f"{j + 1}'")] * multiplicity)
        return result

    def to_digraph(self) -> nx.DiGraph:
        """Mutable vertices are ``1..n``, frozen vertices ``"1'".."n'"`` with ``frozen=True``."""
        graph = self.quiver.to_digraph()
        nx.set_node_attributes(graph, False, "frozen")
        graph.add_nodes_from((f"{j}'" for j in range(1, self.n + 1)), frozen=True)
        c = self.c
        for j, i in zip(*np.nonzero(c)):
            frozen, mutable = f"{j + 1}'", int(i) + 1
            weight = int(abs(c[j, i]))
            if c[j, i] > 0:
                graph.add_edge(frozen, mutable, weight=weight)
            else:
                graph.add_edge(mutable, frozen, weight=weight)
        return graph
