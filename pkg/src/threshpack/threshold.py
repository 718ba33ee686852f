"""Threshold graph recognition and the structure read off a recognized graph.

A graph is threshold when vertex weights ``p`` in [0, 1] and a threshold ``d``
exist with ``(i, j)`` an edge iff ``(p_i + p_j) / 2 <= d``.  Equivalently, once
vertices are listed by nonincreasing degree, the neighbors of the vertex in
position ``i`` are exactly positions ``1..last_col(i)`` minus ``i`` itself, with
``last_col`` nonincreasing (a staircase adjacency matrix).

Positions below are 1-based ranks in the certificate ordering; results handed
back to callers are always original vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph import Graph

__all__ = [
    "ThresholdCertificate",
    "Rejection",
    "IntervalModel",
    "recognize_threshold",
    "degree_ordering",
    "compute_last_col",
    "max_clique",
    "max_independent_set",
    "universal_vertices",
    "derive_interval_model",
    "intersection_graph",
    "realize_threshold_representation",
    "rebuild_from_weights",
]


@dataclass(frozen=True, eq=False)
class ThresholdCertificate:
    """Witness that ``graph`` is threshold.

    Attributes:
        graph: the recognized graph.
        ordering: ``ordering[k]`` is the original id of the vertex at position ``k + 1``.
        last_col: per-position last neighbor column (0 when column 1 is empty).
        t: size of the maximum clique formed by positions ``1..t``.
        g: number of universal vertices (degree ``n - 1``).
    """

    graph: Graph
    ordering: tuple[int, ...]
    last_col: tuple[int, ...]
    t: int
    g: int
    is_threshold: bool = field(default=True, init=False)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def omega(self) -> int:
        return self.t

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Rejection:
    """Outcome for a non-threshold graph.

    ``position`` is the first row of the degree-ordered matrix that breaks the
    staircase; ``vertex`` is that row's original id.
    """

    vertex: int
    position: int
    reason: str
    is_threshold: bool = field(default=False, init=False)

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class IntervalModel:
    """Open intervals ``(left[k], right[k])`` for vertices ``1..n``.

    ``left == right`` is tolerated and denotes an empty interval (an isolated
    vertex); ``left > right`` is rejected.
    """

    left: tuple[float, ...]
    right: tuple[float, ...]

    def __post_init__(self):
        if len(self.left) != len(self.right):
            raise ValueError("left and right endpoint lists differ in length")
        for k, (lo, hi) in enumerate(zip(self.left, self.right), start=1):
            if lo > hi:
                raise ValueError(f"interval {k} has left endpoint {lo} > right endpoint {hi}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[float, float]]) -> "IntervalModel":
        return cls(tuple(float(a) for a, _ in pairs), tuple(float(b) for _, b in pairs))

    @property
    def intervals(self) -> list[tuple[float, float]]:
        return list(zip(self.left, self.right))

    def __len__(self) -> int:
        return len(self.left)


def degree_ordering(g: Graph) -> np.ndarray:
    """0-based vertex indices sorted by nonincreasing degree, ties by ascending index."""
    return np.argsort(-g.degrees, kind="stable")


def _last_col_rows(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # returns (1-based index of the last 1 in each row or 0, whether the
    # row's first off-diagonal column holds a 1)
    n = m.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=bool)
    last = n - np.argmax(m[:, ::-1], axis=1)
    nonempty = m.any(axis=1)
    last = np.where(nonempty, last, 0).astype(np.int64)
    first = m[:, 0].copy()
    if n > 1:
        first[0] = m[0, 1]
    return last, first


def compute_last_col(ordered: Graph) -> list[int]:
    """``last_col`` of a graph whose vertex ids already follow the degree ordering.

    Row ``i`` gets the largest column holding a 1, or 0 when the row's first
    column is empty.  For row 1 the diagonal is skipped, so "first column"
    means column 2 there.
    """
    last, first = _last_col_rows(ordered.adjacency)
    return [int(x) for x in np.where(first, last, 0)]


def recognize_threshold(g: Graph) -> ThresholdCertificate | Rejection:
    """Recognize a threshold graph by checking the staircase shape of its degree-ordered matrix.

    Runs in O(n^2) vectorized time.  Rejection is a normal return value.
    """
    n = g.n
    order = degree_ordering(g)
    m = g.adjacency[np.ix_(order, order)]
    last, first = _last_col_rows(m)
    pos = np.arange(n)
    deg = g.degrees[order]
    # a row is the prefix {1..L} minus itself iff its 1-count fills that prefix
    expected = last - (pos < last)
    bad_rows = np.flatnonzero(deg != expected)
    last_col = np.where(first, last, 0)
    drops = np.flatnonzero(np.diff(last_col) > 0) + 1

    if bad_rows.size or drops.size:
        row = min(
            int(bad_rows[0]) if bad_rows.size else n,
            int(drops[0]) if drops.size else n,
        )
        if bad_rows.size and row == bad_rows[0]:
            reason = "neighborhood is not a prefix of the degree ordering"
        else:
            reason = "last_col increases"
        return Rejection(vertex=int(order[row]) + 1, position=row + 1, reason=reason)

    if n <= 1:
        t = n
    else:
        superdiag = m[pos[:-1], pos[1:]]
        zeros = np.flatnonzero(~superdiag)
        t = int(zeros[0]) + 1 if zeros.size else n
    g_count = int(np.count_nonzero(g.degrees == n - 1)) if n > 1 else n
    return ThresholdCertificate(
        graph=g,
        ordering=tuple(int(v) + 1 for v in order),
        last_col=tuple(int(x) for x in last_col),
        t=t,
        g=g_count,
    )


def max_clique(cert: ThresholdCertificate) -> list[int]:
    """Vertices at positions ``1..t``: a maximum clique."""
    return list(cert.ordering[: cert.t])


def max_independent_set(cert: ThresholdCertificate) -> list[int]:
    """Vertices at positions ``t..n``: a maximum independent set of size ``n - t + 1``."""
    if cert.n == 0:
        return []
    return list(cert.ordering[cert.t - 1 :])


def universal_vertices(cert: ThresholdCertificate) -> list[int]:
    """Vertices adjacent to every other vertex, in certificate order.

    Degree-based, so a complete graph reports all ``n`` vertices (``last_col(n)``
    would give ``n - 1``).
    """
    return list(cert.ordering[: cert.g])


def derive_interval_model(cert: ThresholdCertificate) -> IntervalModel:
    """Interval model whose open-interval intersection graph is the certified graph.

    Positions ``t..n`` get consecutive unit intervals ``(j - t, j - t + 1)``;
    positions ``1..t-1`` get ``(0, last_col(j) - t + 1)``.
    """
    n, t = cert.n, cert.t
    left = [0.0] * n
    right = [0.0] * n
    for j in range(1, n + 1):
        v = cert.ordering[j - 1] - 1
        if j >= t:
            left[v], right[v] = float(j - t), float(j - t + 1)
        else:
            right[v] = float(cert.last_col[j - 1] - t + 1)
    return IntervalModel(tuple(left), tuple(right))


def intersection_graph(model: IntervalModel) -> Graph:
    """Graph with an edge wherever two open intervals share a point."""
    lo = np.asarray(model.left, dtype=float)
    hi = np.asarray(model.right, dtype=float)
    adj = (lo[:, None] < hi[None, :]) & (lo[None, :] < hi[:, None])
    np.fill_diagonal(adj, False)
    return Graph._trusted(adj)


def rebuild_from_weights(p: Sequence[float], d: float) -> Graph:
    """Threshold graph with an edge ``(i, j)`` iff ``(p_i + p_j) / 2 <= d``."""
    p = np.asarray(p, dtype=float)
    adj = (p[:, None] + p[None, :]) / 2.0 <= d
    np.fill_diagonal(adj, False)
    return Graph._trusted(adj)


def realize_threshold_representation(cert: ThresholdCertificate) -> tuple[np.ndarray, float]:
    """Weights ``p`` in [0, 1] and threshold ``d`` that rebuild the certified graph.

    Clique positions ``1..t`` get weights below 1/2, the remaining positions
    weights above 1/2 increasing with position, placed so that a clique vertex
    with ``c`` neighbors outside the clique reaches exactly the first ``c`` of
    them at ``2d = 1``.  ``d`` is then recentred midway between the largest
    adjacent pair mean and the smallest non-adjacent one.
    """
    n, t = cert.n, cert.t
    s = n - t
    scale = 2.0 * (s + 1)
    p = np.empty(n, dtype=float)
    for j in range(1, n + 1):
        v = cert.ordering[j - 1] - 1
        if j <= t:
            outside = max(cert.last_col[j - 1], t) - t
            p[v] = 0.5 - (outside + 0.5) / scale
        else:
            p[v] = 0.5 + (j - t) / scale

    # p is nondecreasing along the ordering and rows are prefixes, so the
    # heaviest neighbor and lightest non-neighbor of each row sit at the
    # prefix boundary
    q = p[np.asarray(cert.ordering) - 1]
    lo, hi = 0.0, 1.0
    for i, width in enumerate(cert.last_col):
        nb = width - 1 if width - 1 != i else width - 2
        if nb >= 0:
            lo = max(lo, (q[i] + q[nb]) / 2.0)
        far = width if width != i else width + 1
        if far < n:
            hi = min(hi, (q[i] + q[far]) / 2.0)
    return p, (lo + hi) / 2.0
