"""Simple undirected graphs on vertices 1..n.

Adjacency is held as a dense read-only boolean matrix (row ``v - 1`` is the
neighbor mask of vertex ``v``).  Every public method speaks 1-based vertex ids;
the matrix itself is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Immutable simple undirected graph.

    Args:
        adjacency: square boolean matrix, symmetric with a zero diagonal.
    """

    __slots__ = ("_adj", "_degrees")

    def __init__(self, adjacency: np.ndarray):
        adj = np.array(adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        if adj.diagonal().any():
            v = int(np.flatnonzero(adj.diagonal())[0]) + 1
            raise ValueError(f"self-loop at vertex {v}")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency matrix is not symmetric")
        adj.flags.writeable = False
        self._adj = adj
        self._degrees = None

    @classmethod
    def _trusted(cls, adj: np.ndarray) -> "Graph":
        # caller guarantees symmetry and zero diagonal; skips the O(n^2) checks
        g = cls.__new__(cls)
        adj.flags.writeable = False
        g._adj = adj
        g._degrees = None
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(np.zeros((n, n), dtype=bool))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        adj = np.ones((n, n), dtype=bool)
        np.fill_diagonal(adj, False)
        return cls._trusted(adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from 1-based vertex pairs.

        Self-loops and endpoints outside 1..n raise ``ValueError``; duplicate
        pairs (in either orientation) are merged.
        """
        if n < 0:
            raise ValueError("n must be nonnegative")
        adj = np.zeros((n, n), dtype=bool)
        for i, j in edges:
            i, j = int(i), int(j)
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i}, {j}) out of range 1..{n}")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            adj[i - 1, j - 1] = adj[j - 1, i - 1] = True
        return cls._trusted(adj)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only 0-based boolean adjacency matrix."""
        return self._adj

    @property
    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            d = self._adj.sum(axis=1, dtype=np.int64)
            d.flags.writeable = False
            self._degrees = d
        return self._degrees

    @property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self._adj[i - 1, j - 1])

    def neighbors(self, v: int) -> set[int]:
        return {int(u) + 1 for u in np.flatnonzero(self._adj[v - 1])}

    def degree(self, v: int) -> int:
        return int(self.degrees[v - 1])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted 1-based pairs ``(i, j)`` with ``i < j``."""
        rows, cols = np.nonzero(np.triu(self._adj, k=1))
        return [(int(i) + 1, int(j) + 1) for i, j in zip(rows, cols)]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``; vertex ``k`` of the result is ``vertices[k-1]``."""
        idx = np.asarray(vertices, dtype=np.int64) - 1
        return Graph._trusted(self._adj[np.ix_(idx, idx)].copy())

    def relabeled(self, order: Sequence[int]) -> "Graph":
        """Same graph with vertex ``order[k-1]`` renamed to ``k``."""
        if sorted(order) != list(range(1, self.n + 1)):
            raise ValueError("order must be a permutation of 1..n")
        return self.induced_subgraph(order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class DensityReport:
    n: int
    edge_count: int
    density: float


def edge_density(g: Graph) -> DensityReport:
    """Fraction of vertex pairs that are edges; 0 for graphs with fewer than two vertices."""
    n, m = g.n, g.edge_count
    density = 2.0 * m / (n * (n - 1)) if n >= 2 else 0.0
    return DensityReport(n=n, edge_count=m, density=density)


def complement(g: Graph) -> Graph:
    adj = ~g.adjacency
    np.fill_diagonal(adj, False)
    return Graph._trusted(adj)


def degree_sequence(g: Graph) -> list[int]:
    """Degrees of vertices 1..n, in vertex order."""
    return [int(d) for d in g.degrees]
