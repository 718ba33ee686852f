"""Bin Packing with Conflicts: instances, feasibility, bounds, heuristics, exact search.

Items are the vertices ``1..n`` of the conflict graph; two adjacent items may
not share a bin.  Every tie is broken by ascending vertex id so that packings
and search-node counts are reproducible.
"""

from __future__ import annotations

import random
import time
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .graph import Graph
from .threshold import recognize_threshold

__all__ = [
    "BppcInstance",
    "Packing",
    "PackingCheck",
    "SolveResult",
    "Decomposition",
    "verify_packing",
    "weight_bound",
    "lower_bound",
    "greedy_clique",
    "incompatibility_clique",
    "clique_absorption_bound",
    "dsatur_packing",
    "heuristic_packing",
    "tabu_packing",
    "decompose_universal",
    "ffd_order",
    "ffd_conflicts",
    "solve_exact",
    "brute_force_oracle",
    "set_partitions",
]

BRUTE_FORCE_MAX_N = 12
CONFLICT_PENALTY = 40
TABU_TENURE = 7
TABU_MOVES_PER_ITEM = 10


@dataclass(frozen=True, eq=False)
class BppcInstance:
    graph: Graph
    weights: tuple[int, ...]
    capacity: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        object.__setattr__(self, "capacity", int(self.capacity))
        if len(self.weights) != self.graph.n:
            raise ValueError(f"{len(self.weights)} weights for {self.graph.n} vertices")
        if self.capacity < 0:
            raise ValueError("capacity must be nonnegative")
        for i, w in enumerate(self.weights, start=1):
            if w < 0:
                raise ValueError(f"item {i} has negative weight {w}")
            if w > self.capacity:
                raise ValueError(f"item {i} weight {w} exceeds capacity {self.capacity}")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def weight(self, v: int) -> int:
        return self.weights[v - 1]

    def induced(self, vertices: Sequence[int]) -> "BppcInstance":
        """Sub-instance on ``vertices`` (1-based); its item ``k`` is ``vertices[k-1]``."""
        return BppcInstance(
            self.graph.induced_subgraph(vertices),
            tuple(self.weights[v - 1] for v in vertices),
            self.capacity,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BppcInstance):
            return NotImplemented
        return (
            self.capacity == other.capacity
            and self.weights == other.weights
            and self.graph == other.graph
        )

    def __repr__(self) -> str:
        return f"BppcInstance(n={self.n}, conflicts={self.graph.edge_count}, B={self.capacity})"


@dataclass(frozen=True)
class Packing:
    bins: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, bins: Iterable[Iterable[int]]) -> "Packing":
        return cls(tuple(tuple(int(v) for v in b) for b in bins))

    @property
    def k(self) -> int:
        return len(self.bins)

    def remap(self, index_map: Sequence[int]) -> "Packing":
        return Packing(tuple(tuple(index_map[v - 1] for v in b) for b in self.bins))


@dataclass(frozen=True)
class PackingCheck:
    """Result of :func:`verify_packing`; truthy iff the packing is feasible."""

    ok: bool
    constraint: str | None = None
    bin: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class SolveResult:
    packing: Packing
    k: int
    optimal: bool
    lower_bound: int
    elapsed: float
    node_count: int
    universal: int = 0


@dataclass(frozen=True)
class Decomposition:
    singleton_bins: tuple[int, ...]
    subinstance: BppcInstance
    index_map: tuple[int, ...]

    @property
    def g(self) -> int:
        return len(self.singleton_bins)

    def lift(self, sub_packing: Packing) -> Packing:
        """Full packing: one bin per universal vertex, then the sub-instance bins."""
        singles = tuple((v,) for v in self.singleton_bins)
        return Packing(singles + sub_packing.remap(self.index_map).bins)


def verify_packing(inst: BppcInstance, packing: Packing) -> PackingCheck:
    """Check capacity, conflicts and the partition property, bin by bin.

    Bins are numbered from 1 in the returned diagnostics.
    """
    n = inst.n
    adj = inst.graph.adjacency
    seen = [False] * (n + 1)
    for b, members in enumerate(packing.bins, start=1):
        for v in members:
            if not 1 <= v <= n:
                return PackingCheck(False, "partition", b, f"vertex {v} out of range 1..{n}")
            if seen[v]:
                return PackingCheck(False, "partition", b, f"vertex {v} packed twice")
            seen[v] = True
        load = sum(inst.weights[v - 1] for v in members)
        if load > inst.capacity:
            return PackingCheck(False, "capacity", b, f"load {load} > capacity {inst.capacity}")
        for x, u in enumerate(members):
            for v in members[x + 1 :]:
                if adj[u - 1, v - 1]:
                    return PackingCheck(False, "conflict", b, f"items {u} and {v} are in conflict")
    missing = [v for v in range(1, n + 1) if not seen[v]]
    if missing:
        return PackingCheck(False, "partition", None, f"vertex {missing[0]} not packed")
    return PackingCheck(True)


def weight_bound(weights: Sequence[int], capacity: int) -> int:
    """``ceil(sum(w) / B)``, and at least one bin for a nonempty item set."""
    if not weights:
        return 0
    if capacity == 0:
        return 1
    return max(1, -(-sum(weights) // capacity))


def _check_clique(g: Graph, clique: Iterable[int]) -> list[int]:
    members = sorted(set(int(v) for v in clique))
    idx = np.asarray(members, dtype=np.int64) - 1
    if idx.size and (idx.min() < 0 or idx.max() >= g.n):
        raise ValueError("clique hint has vertices out of range")
    sub = g.adjacency[np.ix_(idx, idx)]
    if np.count_nonzero(sub) != idx.size * (idx.size - 1):
        raise ValueError("clique hint is not a clique of the conflict graph")
    return members


def lower_bound(inst: BppcInstance, clique_hint: Iterable[int] | None = None) -> int:
    """Largest of the available valid bounds on the optimal number of bins.

    * ``ceil(sum(w) / B)``;
    * the size of ``clique_hint`` (validated, raises ``ValueError`` if it is not a clique);
    * for a threshold conflict graph: ``g + max(ceil(w(Q) / B), omega(Q))`` where
      ``g`` counts universal vertices and ``Q`` is the instance on the others.
    """
    best = weight_bound(inst.weights, inst.capacity)
    if clique_hint is not None:
        best = max(best, len(_check_clique(inst.graph, clique_hint)))
    if inst.n:
        cert = recognize_threshold(inst.graph)
        if cert:
            universal = set(cert.ordering[: cert.g])
            rest = [inst.weights[v - 1] for v in range(1, inst.n + 1) if v not in universal]
            omega_rest = cert.t - cert.g if rest else 0
            best = max(best, cert.g + max(weight_bound(rest, inst.capacity), omega_rest))
    return best


def greedy_clique(g: Graph, starts: int = 64) -> list[int]:
    """A large (not necessarily maximum) clique, grown greedily by degree from several seeds."""
    n = g.n
    if n == 0:
        return []
    adj = g.adjacency
    deg = g.degrees
    order = np.argsort(-deg, kind="stable")
    best: list[int] = []
    for s in order[: min(starts, n)]:
        clique = [int(s)]
        cand = adj[s].copy()
        while cand.any():
            pool = np.flatnonzero(cand)
            v = int(pool[np.argmax(deg[pool])])
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(v + 1 for v in best)


def decompose_universal(inst: BppcInstance) -> Decomposition:
    """Split off vertices in conflict with every other item; each needs a bin to itself."""
    n = inst.n
    deg = inst.graph.degrees
    universal = tuple(v for v in range(1, n + 1) if deg[v - 1] == n - 1)
    taken = set(universal)
    rest = tuple(v for v in range(1, n + 1) if v not in taken)
    return Decomposition(universal, inst.induced(rest), rest)


def ffd_order(inst: BppcInstance) -> list[int]:
    """Vertices by nonincreasing weight, ties by ascending id."""
    return sorted(range(1, inst.n + 1), key=lambda v: (-inst.weights[v - 1], v))


def ffd_conflicts(inst: BppcInstance) -> Packing:
    """First-fit decreasing that also skips bins holding a conflicting item."""
    adj = inst.graph.adjacency
    residual: list[int] = []
    bins: list[list[int]] = []
    for v in ffd_order(inst):
        w = inst.weights[v - 1]
        row = adj[v - 1]
        for b, members in enumerate(bins):
            if residual[b] >= w and not any(row[u - 1] for u in members):
                members.append(v)
                residual[b] -= w
                break
        else:
            bins.append([v])
            residual.append(inst.capacity - w)
    return Packing.of(bins)


def incompatibility_clique(inst: BppcInstance, starts: int = 64) -> list[int]:
    """Greedy clique of items that pairwise cannot share a bin (conflict or ``w_i + w_j > B``)."""
    w = np.asarray(inst.weights, dtype=np.int64)
    heavy = (w[:, None] + w[None, :]) > inst.capacity
    np.fill_diagonal(heavy, False)
    return greedy_clique(Graph._trusted(inst.graph.adjacency | heavy), starts)


def _chain_bound(w: np.ndarray, adj: np.ndarray, capacity: int, clique: np.ndarray, keep: np.ndarray) -> int:
    # clique: 0-based items that pairwise need separate bins; keep: mask of
    # the other items taken into account
    others = np.flatnonzero(keep)
    room = capacity - w[clique]
    ow = w[others]
    compat = (ow[None, :] <= room[:, None]) & ~adj[np.ix_(clique, others)]
    # nest the bins: most widely usable first
    chain = np.argsort(-compat.sum(axis=1), kind="stable")
    compat, room = compat[chain], room[chain]
    if others.size:
        rank = np.where(compat.any(axis=0), compat.shape[0] - 1 - np.argmax(compat[::-1], axis=0), -1)
    else:
        rank = np.zeros(0, dtype=np.int64)
    best = 0
    for r in range(clique.size + 1):
        # items whose usable clique bins all lie among the first r
        trapped = np.where(rank < r, ow, 0)
        spill = int(trapped.sum())
        if r:
            spill -= int(np.minimum(room[:r], compat[:r] @ trapped).sum())
        if spill > 0:
            best = max(best, -(-spill // capacity))
    return clique.size + best


def clique_absorption_bound(inst: BppcInstance, clique: Iterable[int]) -> int:
    """Bound from items that pairwise need separate bins.

    Each item ``c`` of ``clique`` sits in its own bin, which can take at most
    ``min(B - w_c, weight of compatible items)`` of the rest.  Bins are nested
    by how many items they can take; for every prefix of that chain, the items
    usable only inside the prefix must fit there or spill into further bins.
    Items lighter than a cutoff ``alpha <= B/2`` may be dropped first (as in
    the Martello-Toth bound); the best cutoff wins.
    """
    members = np.asarray(sorted(set(int(v) for v in clique)), dtype=np.int64) - 1
    if members.size == 0:
        return weight_bound(inst.weights, inst.capacity)
    if inst.capacity == 0:
        return members.size
    w = np.asarray(inst.weights, dtype=np.int64)
    adj = inst.graph.adjacency
    outside = np.ones(inst.n, dtype=bool)
    outside[members] = False
    cutoffs = sorted({0} | {int(x) for x in w[outside] if 2 * x <= inst.capacity})
    return max(_chain_bound(w, adj, inst.capacity, members, outside & (w >= a)) for a in cutoffs)


def _first_fit(inst: BppcInstance, order: Sequence[int], best_fit: bool) -> Packing:
    adj = inst.graph.adjacency
    residual: list[int] = []
    bins: list[list[int]] = []
    for v in order:
        wv = inst.weights[v - 1]
        row = adj[v - 1]
        chosen = None
        for b, members in enumerate(bins):
            if residual[b] >= wv and not any(row[u - 1] for u in members):
                if not best_fit:
                    chosen = b
                    break
                if chosen is None or residual[b] < residual[chosen]:
                    chosen = b
        if chosen is None:
            bins.append([v])
            residual.append(inst.capacity - wv)
        else:
            bins[chosen].append(v)
            residual[chosen] -= wv
    return Packing.of(bins)


def dsatur_packing(inst: BppcInstance) -> Packing:
    """Greedy that always packs the item with the fewest feasible open bins next.

    Ties go to the heavier item, then the higher conflict degree, then the
    smaller id; the item goes to the feasible bin it fills most tightly.
    """
    adj = inst.graph.adjacency
    deg = inst.graph.degrees
    w = inst.weights
    residual: list[int] = []
    blocked: list[np.ndarray] = []
    bins: list[list[int]] = []
    left = set(range(1, inst.n + 1))
    while left:
        pick, pick_key, pick_bins = 0, None, []
        for v in sorted(left):
            feasible = [b for b in range(len(bins)) if residual[b] >= w[v - 1] and not blocked[b][v - 1]]
            key = (len(feasible), -w[v - 1], -int(deg[v - 1]), v)
            if pick_key is None or key < pick_key:
                pick, pick_key, pick_bins = v, key, feasible
        left.remove(pick)
        wv = w[pick - 1]
        if pick_bins:
            b = min(pick_bins, key=lambda b: (residual[b], b))
            bins[b].append(pick)
            residual[b] -= wv
            blocked[b] = blocked[b] | adj[pick - 1]
        else:
            bins.append([pick])
            residual.append(inst.capacity - wv)
            blocked.append(adj[pick - 1].copy())
    return Packing.of(bins)


def heuristic_packing(inst: BppcInstance) -> Packing:
    """Best of FFD, best-fit decreasing and :func:`dsatur_packing` (first found wins ties)."""
    order = ffd_order(inst)
    candidates = [ffd_conflicts(inst), _first_fit(inst, order, best_fit=True), dsatur_packing(inst)]
    return min(candidates, key=lambda p: p.k)


def _overflow(load: int, capacity: int) -> int:
    return load - capacity if load > capacity else 0


def tabu_packing(
    inst: BppcInstance,
    k: int,
    start: Packing,
    max_moves: int = 3000,
    deadline: float | None = None,
    seed: int = 0,
) -> Packing | None:
    """Try to pack into ``k`` bins by tabu search over infeasible packings.

    Items of ``start`` beyond its ``k`` heaviest bins are dropped into the
    bins where they hurt least.  The search then minimizes total overload
    plus ``CONFLICT_PENALTY`` per conflicting pair, moving one offending item
    to another bin or swapping it with an item there.  Returns a feasible
    ``k``-bin packing, or None when ``max_moves`` or ``deadline`` runs out.
    """
    n, cap = inst.n, inst.capacity
    if k <= 0:
        return Packing(()) if n == 0 else None
    rnd = random.Random(seed)
    w = inst.weights
    adj = inst.graph.adjacency
    nbrs = [np.flatnonzero(adj[i]).tolist() for i in range(n)]
    pen = CONFLICT_PENALTY
    where = [-1] * n
    load = [0] * k
    clash = [[0] * k for _ in range(n)]  # clash[i][b]: neighbours of i in bin b

    def put(i: int, b: int) -> None:
        where[i] = b
        load[b] += w[i]
        for j in nbrs[i]:
            clash[j][b] += 1

    def take(i: int) -> None:
        b = where[i]
        load[b] -= w[i]
        for j in nbrs[i]:
            clash[j][b] -= 1

    ranked = sorted(start.bins, key=lambda members: (-sum(w[v - 1] for v in members), members))
    for b, members in enumerate(ranked[:k]):
        for v in members:
            put(v - 1, b)
    for members in ranked[k:]:
        for v in members:
            i = v - 1
            b = min(range(k), key=lambda b: (_overflow(load[b] + w[i], cap) - _overflow(load[b], cap)
                                             + pen * clash[i][b], b))
            put(i, b)

    cost = sum(_overflow(x, cap) for x in load) + pen * sum(clash[i][where[i]] for i in range(n)) // 2
    tabu: dict[tuple[int, int], int] = {}
    for move in range(max_moves):
        if cost == 0:
            return Packing.of(sorted(i + 1 for i in range(n) if where[i] == b) for b in range(k))
        if deadline is not None and time.perf_counter() > deadline:
            return None
        best = None
        for i in range(n):
            a = where[i]
            if not clash[i][a] and load[a] <= cap:
                continue
            leave = _overflow(load[a], cap) - _overflow(load[a] - w[i], cap) + pen * clash[i][a]
            for b in range(k):
                if b == a:
                    continue
                gain = _overflow(load[b] + w[i], cap) - _overflow(load[b], cap) + pen * clash[i][b] - leave
                if tabu.get((i, b), -1) <= move or cost + gain == 0:
                    key = (gain, rnd.random())
                    if best is None or key < best[0]:
                        best = (key, i, b, -1)
                for j in range(n):
                    if where[j] != b or adj[i, j]:
                        continue
                    la = load[a] - w[i] + w[j]
                    lb = load[b] - w[j] + w[i]
                    gain = (_overflow(la, cap) + _overflow(lb, cap) - _overflow(load[a], cap) - _overflow(load[b], cap)
                            + pen * (clash[i][b] - clash[i][a] + clash[j][a] - clash[j][b]))
                    if (tabu.get((i, b), -1) <= move and tabu.get((j, a), -1) <= move) or cost + gain == 0:
                        key = (gain, rnd.random())
                        if best is None or key < best[0]:
                            best = (key, i, b, j)
        if best is None:
            continue
        (gain, _), i, b, j = best
        a = where[i]
        take(i)
        put(i, b)
        tabu[(i, a)] = move + TABU_TENURE + rnd.randrange(TABU_TENURE)
        if j >= 0:
            take(j)
            put(j, a)
            tabu[(j, b)] = move + TABU_TENURE + rnd.randrange(TABU_TENURE)
        cost += gain
    return None


class _Timeout(Exception):
    pass


class _Search:
    """Depth-first branch and bound.

    At each node the unpacked item with the fewest feasible open bins is
    branched on (ties: heavier, then earlier in FFD order).  Children put it
    into each feasible open bin, tightest fit first, then into one new bin;
    only the first empty bin is ever tried, which removes bin-label symmetry.
    Items are bit positions in FFD order; bins carry a residual capacity and
    a mask of the items they conflict with.
    """

    def __init__(self, inst: BppcInstance, clique: Sequence[int], deadline: float):
        order = ffd_order(inst)
        pos = {v: k for k, v in enumerate(order)}
        adj = inst.graph.adjacency
        self.order = order
        self.w = [inst.weights[v - 1] for v in order]
        self.neg_w = [-x for x in self.w]
        self.conf = []
        for v in order:
            mask = 0
            for u in np.flatnonzero(adj[v - 1]):
                mask |= 1 << pos[int(u) + 1]
            self.conf.append(mask)
        self.B = inst.capacity
        self.N = len(order)
        self.clique_mask = 0
        for v in clique:
            self.clique_mask |= 1 << pos[v]
        self.deadline = deadline
        self.nodes = 0
        self.res: list[int] = []
        self.blocked: list[int] = []
        self.assign = [0] * self.N
        self.best = self.N + 1
        self.best_assign: list[int] | None = None
        self.floor = 0

    def start(self) -> None:
        self.run((1 << self.N) - 1, sum(self.w))

    def bound(self, left: int, left_w: int) -> int:
        """Bins needed to finish, counting the open ones."""
        w = self.w
        covered = 0
        absorbed = 0
        for r, blocked in zip(self.res, self.blocked):
            # items are sorted by nonincreasing weight, so those fitting r form a suffix
            cand = left & ~blocked & -(1 << bisect_left(self.neg_w, -r))
            if cand:
                covered |= cand
                heaviest = w[(cand & -cand).bit_length() - 1]
                absorbed += min(r, cand.bit_count() * heaviest)
        spill = left_w - absorbed
        new = -(-spill // self.B) if spill > 0 and self.B else 0
        # pairwise-incompatible items with no usable open bin need a new bin each
        stranded = (self.clique_mask & left & ~covered).bit_count()
        if left & ~covered:
            stranded = max(stranded, 1)
        return len(self.res) + max(new, stranded)

    def run(self, left: int, left_w: int) -> None:
        if self.best <= self.floor:
            return
        self.nodes += 1
        if time.perf_counter() > self.deadline:
            raise _Timeout
        m = len(self.res)
        if not left:
            if m < self.best:
                self.best = m
                self.best_assign = list(self.assign)
            return
        if self.bound(left, left_w) >= self.best:
            return

        res, blocked = self.res, self.blocked
        pick_key = None
        rest = left
        while rest:
            low = rest & -rest
            k = low.bit_length() - 1
            rest ^= low
            wk = self.w[k]
            feasible = [b for b in range(m) if wk <= res[b] and not blocked[b] >> k & 1]
            key = (len(feasible), -wk, k)
            if pick_key is None or key < pick_key:
                pick_key, pick, pick_bins = key, k, feasible
                if not feasible:
                    break

        k, wk, ck = pick, self.w[pick], self.conf[pick]
        bit = 1 << k
        for b in sorted(pick_bins, key=lambda b: (res[b], b)):
            saved = blocked[b]
            res[b] -= wk
            blocked[b] = saved | ck
            self.assign[k] = b
            self.run(left & ~bit, left_w - wk)
            res[b] += wk
            blocked[b] = saved
            if self.best <= self.floor:
                return
        if m + 1 < self.best:
            res.append(self.B - wk)
            blocked.append(ck)
            self.assign[k] = m
            self.run(left & ~bit, left_w - wk)
            res.pop()
            blocked.pop()

    def packing(self) -> Packing:
        bins: list[list[int]] = [[] for _ in range(self.best)]
        for k, b in enumerate(self.best_assign or []):
            bins[b].append(self.order[k])
        return Packing.of(sorted(b) for b in bins)


def _to_item_assignment(packing: Packing, order: Sequence[int]) -> list[int]:
    where = {}
    for b, members in enumerate(packing.bins):
        for v in members:
            where[v] = b
    return [where[v] for v in order]


def solve_exact(
    inst: BppcInstance,
    time_limit: float = 600.0,
    *,
    use_decomposition: bool = True,
    clique_hint: Iterable[int] | None = None,
) -> SolveResult:
    """Minimum-bin packing by depth-first branch and bound.

    Universal vertices are split off first (``use_decomposition``).  The rest
    is searched starting from the best greedy packing (FFD included).  The
    root bound is the best of :func:`lower_bound` (with a greedy conflict
    clique as hint) and :func:`clique_absorption_bound` on greedy cliques;
    nodes are pruned with a residual-capacity bound.  Hitting ``time_limit``
    (seconds, checked at every node) returns the incumbent with
    ``optimal=False``.
    """
    start = time.perf_counter()
    deadline = start + time_limit
    if use_decomposition:
        dec = decompose_universal(inst)
    else:
        dec = Decomposition((), inst, tuple(range(1, inst.n + 1)))
    sub = dec.subinstance

    clique = greedy_clique(sub.graph)
    if clique_hint is not None:
        index = {v: k for k, v in enumerate(dec.index_map, start=1)}
        hinted = [index[v] for v in clique_hint if v in index]
        if len(hinted) > len(clique):
            clique = _check_clique(sub.graph, hinted)
    apart = incompatibility_clique(sub)
    root_lb = max(
        lower_bound(sub, clique_hint=clique),
        clique_absorption_bound(sub, apart),
        clique_absorption_bound(sub, clique),
    )

    incumbent = heuristic_packing(sub)
    # aim one bin lower at a time; each success restarts from the new packing
    while incumbent.k > root_lb:
        tighter = tabu_packing(sub, incumbent.k - 1, incumbent,
                               max_moves=TABU_MOVES_PER_ITEM * sub.n, deadline=deadline)
        if tighter is None:
            break
        incumbent = tighter
    search = _Search(sub, apart, deadline)
    search.best = incumbent.k
    search.best_assign = _to_item_assignment(incumbent, search.order)
    search.floor = root_lb

    optimal = True
    if incumbent.k > root_lb:
        try:
            search.start()
        except _Timeout:
            optimal = False
    if search.best <= root_lb:
        optimal = True

    packing = dec.lift(search.packing())
    return SolveResult(
        packing=packing,
        k=packing.k,
        optimal=optimal,
        lower_bound=dec.g + min(root_lb, search.best),
        elapsed=time.perf_counter() - start,
        node_count=search.nodes,
        universal=dec.g,
    )



def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """Every set partition of ``items`` (restricted growth strings)."""
    n = len(items)
    if n == 0:
        yield []
        return
    labels = [0] * n

    def rec(i: int, used: int) -> Iterator[list[list[int]]]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(used)]
            for x, lab in zip(items, labels):
                blocks[lab].append(x)
            yield blocks
            return
        for lab in range(used + 1):
            labels[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    labels[0] = 0
    yield from rec(1, 1)


def brute_force_oracle(inst: BppcInstance) -> int:
    """Optimal bin count by checking every set partition (n <= 12)."""
    if inst.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {inst.n}")
    best = inst.n
    for blocks in set_partitions(list(range(1, inst.n + 1))):
        if len(blocks) < best and verify_packing(inst, Packing.of(blocks)):
            best = len(blocks)
    return best
