"""Seeded random conflict-graph generators and BPPC instance assembly.

Randomness comes from numpy's PCG64 bit generator.  A seed (unsigned 64-bit
integer) is expanded with ``numpy.random.SeedSequence(seed).spawn(2)``: child 0
is the *weights* stream, child 1 the *edges* stream.  Graph generators only
consume the edges stream, so item weights for a given seed do not depend on
which graph is drawn or on its density parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bppc import BppcInstance
from .graph import Graph
from .threshold import IntervalModel, intersection_graph

__all__ = [
    "GeneratorSpec",
    "KINDS",
    "CLASS_KINDS",
    "streams",
    "gen_threshold",
    "gen_soriano_gendreau",
    "gen_uniform_arbitrary",
    "gen_interval",
    "target_edge_count",
    "generate_graph",
    "gen_bppc_instance",
]

KINDS = ("threshold", "soriano_gendreau", "uniform_arbitrary", "interval")
CLASS_KINDS = {"T": "threshold", "I": "interval", "A": "uniform_arbitrary", "SG": "soriano_gendreau"}

_ROW_BLOCK = 512


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate.

    ``param`` is the threshold ``d`` for ``threshold``, the target density for
    ``uniform_arbitrary`` and ``interval``, and ignored for ``soriano_gendreau``.
    """

    kind: str
    n: int
    param: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; expected one of {KINDS}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.kind != "soriano_gendreau" and not (0.0 <= self.param <= 1.0):
            raise ValueError(f"param must lie in [0, 1], got {self.param!r}")
        _check_seed(self.seed)


def _check_seed(seed: int) -> None:
    if not (0 <= int(seed) < 2**64):
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed!r}")


def streams(seed: int) -> tuple[np.random.Generator, np.random.Generator]:
    """Independent ``(weights, edges)`` generators for ``seed``."""
    _check_seed(seed)
    weights_ss, edges_ss = np.random.SeedSequence(int(seed)).spawn(2)
    return (
        np.random.Generator(np.random.PCG64(weights_ss)),
        np.random.Generator(np.random.PCG64(edges_ss)),
    )


def _edges_rng(seed: int) -> np.random.Generator:
    return streams(seed)[1]


def gen_threshold(n: int, d: float, seed: int) -> tuple[Graph, np.ndarray]:
    """Uniform vertex values; edge iff the two values average at most ``d``.

    Returns the graph and the vertex values ``p`` (vertex ``k`` has ``p[k-1]``).
    The tie ``(p_i + p_j) / 2 == d`` creates an edge.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    p = _edges_rng(seed).random(n)
    adj = np.empty((n, n), dtype=bool)
    for start in range(0, n, _ROW_BLOCK):
        stop = min(n, start + _ROW_BLOCK)
        np.less_equal((p[start:stop, None] + p[None, :]) / 2.0, d, out=adj[start:stop])
    np.fill_diagonal(adj, False)
    return Graph._trusted(adj), p


def gen_soriano_gendreau(n: int, seed: int) -> Graph:
    """Each pair becomes an edge independently with probability ``(p_i + p_j) / 2``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = _edges_rng(seed)
    p = rng.random(n)
    rows, cols = np.triu_indices(n, k=1)
    coins = rng.random(rows.size)
    keep = coins < (p[rows] + p[cols]) / 2.0
    adj = np.zeros((n, n), dtype=bool)
    adj[rows[keep], cols[keep]] = True
    adj |= adj.T
    return Graph._trusted(adj)


def target_edge_count(n: int, delta: float) -> int:
    """Edges needed for density ``delta``, rounding halves to even."""
    return round(delta * (n * (n - 1) // 2))


def gen_uniform_arbitrary(n: int, delta: float, seed: int) -> Graph:
    """Add uniformly drawn vertex pairs to an empty graph until the target edge count is hit.

    Repeated draws of an existing edge are discarded, exactly as in the
    sequential loop; draws are made in numpy batches of deterministic size.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if not (0.0 <= delta <= 1.0):
        raise ValueError(f"delta must lie in [0, 1], got {delta!r}")
    total = n * (n - 1) // 2
    m = target_edge_count(n, delta)
    if m == total:
        return Graph.complete(n)

    rng = _edges_rng(seed)
    keys = np.empty(0, dtype=np.int64)
    distinct = np.empty(0, dtype=np.int64)
    while distinct.size < m:
        have = distinct.size
        # expected draws to collect the missing pairs, plus slack
        want = total * (math.log(total - have) - math.log(total - m)) if m < total else 0.0
        batch = int(want * 1.1) + 64
        i = rng.integers(0, n, size=batch)
        j = rng.integers(0, n - 1, size=batch)
        j += j >= i
        lo, hi = np.minimum(i, j), np.maximum(i, j)
        keys = np.concatenate([keys, lo * n + hi])
        _, first = np.unique(keys, return_index=True)
        distinct = keys[np.sort(first)]
    chosen = distinct[:m]
    adj = np.zeros((n, n), dtype=bool)
    adj[chosen // n, chosen % n] = True
    adj |= adj.T
    return Graph._trusted(adj)


def interval_length(delta: float) -> float:
    """Common interval length giving pairwise overlap probability ``delta``."""
    return 1.0 - math.sqrt(1.0 - delta)


def gen_interval(n: int, delta: float, seed: int) -> tuple[Graph, IntervalModel]:
    """Random interval graph from equal-length sticks with uniform left endpoints.

    Two sticks of length ``L`` with left ends uniform on [0, 1] overlap with
    probability ``2L - L^2``; ``L`` is chosen so that this equals ``delta``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if not (0.0 <= delta < 1.0):
        raise ValueError(f"delta must lie in [0, 1), got {delta!r}")
    length = interval_length(delta)
    left = _edges_rng(seed).random(n)
    model = IntervalModel(tuple(left.tolist()), tuple((left + length).tolist()))
    return intersection_graph(model), model


def generate_graph(spec: GeneratorSpec) -> Graph:
    if spec.kind == "threshold":
        return gen_threshold(spec.n, spec.param, spec.seed)[0]
    if spec.kind == "soriano_gendreau":
        return gen_soriano_gendreau(spec.n, spec.seed)
    if spec.kind == "uniform_arbitrary":
        if spec.n < 2:
            return Graph.empty(spec.n)
        return gen_uniform_arbitrary(spec.n, spec.param, spec.seed)
    if spec.n < 2:
        return Graph.empty(spec.n)
    return gen_interval(spec.n, spec.param, spec.seed)[0]


def gen_bppc_instance(
    spec: GeneratorSpec,
    weight_lo: int = 20,
    weight_hi: int = 100,
    capacity: int = 150,
) -> BppcInstance:
    """BPPC instance with a generated conflict graph and uniform integer weights.

    Weights are drawn from the seed's weights stream, so every graph kind and
    density shares the same weight vector for a given ``(n, seed)``.
    """
    if not (0 <= weight_lo <= weight_hi):
        raise ValueError(f"need 0 <= weight_lo <= weight_hi, got [{weight_lo}, {weight_hi}]")
    if weight_hi > capacity:
        raise ValueError(f"weight_hi={weight_hi} exceeds capacity {capacity}; item could never be packed")
    weights_rng, _ = streams(spec.seed)
    weights = weights_rng.integers(weight_lo, weight_hi + 1, size=spec.n)
    return BppcInstance(generate_graph(spec), tuple(int(w) for w in weights), int(capacity))
