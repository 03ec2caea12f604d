"""Graph reduction for k-shortest path queries.

For every vertex ``v`` the by-way-of path joins the tree path ``s -> v``
with the tree path ``v -> t``; it is the shortest ``s -> t`` walk through
``v``.  Scanning these paths by length until ``k`` loop-less ones are seen
yields a vertex set whose induced subgraph still contains the ``k``
shortest loop-less ``s -> t`` paths.  :func:`gr` wraps that reduction
around any k-shortest path engine.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph
from .ksp import KspEngine, KspResult, Path, k_dijkstra
from .sssp import APSPStore, Direction, ShortestPathTree, dijkstra_tree, tree_path


@dataclass(frozen=True)
class BywayEntry:
    vertex: int
    byway_distance: float


@dataclass(frozen=True)
class ReducedGraph:
    """Vertex subset ``kept`` and the subgraph it induces.

    ``subgraph`` uses local ids; ``to_original[i]`` is the original id of
    local vertex ``i`` and ``to_local`` is the inverse map.  ``loopless_found``
    counts the loop-less by-way paths seen before the scan stopped.
    """

    kept: tuple[int, ...]
    subgraph: Graph
    to_original: tuple[int, ...]
    to_local: dict[int, int]
    insufficient: bool
    loopless_found: int = 0
    scanned: int = 0

    @property
    def n_kept(self) -> int:
        return len(self.kept)

    def local_path(self, p: Path) -> Path:
        return Path(tuple(self.to_local[v] for v in p.vertices), p.length)

    def original_path(self, p: Path) -> Path:
        return Path(tuple(self.to_original[v] for v in p.vertices), p.length)


def byway_distances(ts: ShortestPathTree, tt: ShortestPathTree) -> list[BywayEntry]:
    """One entry per vertex reachable from ``s`` that also reaches ``t``, by id."""
    inf = math.inf
    return [
        BywayEntry(v, ds + dt)
        for v, (ds, dt) in enumerate(zip(ts.dist, tt.dist))
        if ds != inf and dt != inf
    ]


def _byway_seq(ts: ShortestPathTree, tt: ShortestPathTree, v: int) -> Optional[list[int]]:
    head = tree_path(ts, v)
    tail = tree_path(tt, v)
    if head is None or tail is None:
        return None
    return head + tail[1:]


def byway_path(ts: ShortestPathTree, tt: ShortestPathTree, v: int) -> Path:
    """The by-way-of path through ``v``; it may repeat a vertex."""
    seq = _byway_seq(ts, tt, v)
    if seq is None:
        raise ValueError(f"vertex {v} is not on any s -> t walk")
    return Path(tuple(seq), ts.dist[v] + tt.dist[v])


def induced_subgraph(g: Graph, kept: Iterable[int]) -> tuple[Graph, tuple[int, ...], dict[int, int]]:
    """Subgraph on ``kept`` with every edge of ``g`` between two kept vertices.

    Kept vertices are relabelled ``0..len(kept)-1`` in ascending original id.
    """
    order = tuple(sorted(kept if isinstance(kept, (set, frozenset)) else set(kept)))
    if not order:
        raise ValueError("kept vertex set is empty")
    if order[0] < 0 or order[-1] >= g.n:
        raise ValueError("kept vertex id out of range")
    to_local = dict(zip(order, range(len(order))))
    if len(order) == g.n:
        return g, order, to_local
    local = [-1] * g.n
    for i, v in enumerate(order):
        local[v] = i

    def remap(adj):
        return tuple([
            tuple([(local[w], wt) for w, wt in adj[v] if local[w] >= 0]) for v in order
        ])

    out_adj = remap(g.out_adj)
    in_adj = remap(g.in_adj) if g.directed else None
    return Graph(len(order), g.directed, out_adj, in_adj), order, to_local


def _finish(g: Graph, kept: Iterable[int], insufficient: bool, found: int, scanned: int) -> ReducedGraph:
    if insufficient:
        kept = range(g.n)
    sub, order, to_local = induced_subgraph(g, kept)
    return ReducedGraph(order, sub, order, to_local, insufficient, found, scanned)


def _check(g: Graph, k: int, s: int, t: int, ts: ShortestPathTree, tt: ShortestPathTree) -> None:
    if s == t:
        raise ValueError("source and target must differ")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if ts.root != s or tt.root != t or len(ts.dist) != g.n or len(tt.dist) != g.n:
        raise ValueError("trees do not match the graph and query endpoints")


def reduce_primitive(
    g: Graph, k: int, s: int, t: int, ts: ShortestPathTree, tt: ShortestPathTree
) -> ReducedGraph:
    """Reduce by materialising, deduplicating and sorting all by-way paths."""
    _check(g, k, s, t, ts, tt)
    unique: dict[tuple[int, ...], float] = {}
    for entry in byway_distances(ts, tt):
        seq = tuple(_byway_seq(ts, tt, entry.vertex))  # type: ignore[arg-type]
        d = unique.get(seq)
        if d is None or entry.byway_distance < d:
            unique[seq] = entry.byway_distance
    ranked = sorted((d, seq) for seq, d in unique.items())
    kept: set[int] = set()
    found = 0
    scanned = 0
    for _, seq in ranked:
        scanned += 1
        kept.update(seq)
        if len(set(seq)) == len(seq):
            found += 1
            if found == k:
                return _finish(g, kept, False, found, scanned)
    return _finish(g, kept, True, found, scanned)


def reduce_speeded(
    g: Graph, k: int, s: int, t: int, ts: ShortestPathTree, tt: ShortestPathTree
) -> ReducedGraph:
    """Reduce without deduplication.

    Entries are scanned by (distance, vertex id).  A loop-less by-way path
    contributes all its vertices and retires every entry whose vertex lies
    on it; a path with a loop contributes and retires only its own vertex.
    """
    _check(g, k, s, t, ts, tt)
    inf = math.inf
    byway = [a + b for a, b in zip(ts.dist, tt.dist)]
    # Stable sort: equal distances stay in vertex-id order.
    order = sorted(range(g.n), key=byway.__getitem__)
    up, down = ts.parent, tt.parent
    retired = [False] * g.n
    kept: set[int] = set()
    found = 0
    scanned = 0
    for v in order:
        if byway[v] == inf:
            break
        if retired[v]:
            continue
        scanned += 1
        # Walk v -> s and v -> t; the by-way path loops iff the walks meet again.
        seq = [v]
        push = seq.append
        u = up[v]
        while u is not None:
            push(u)
            u = up[u]
        u = down[v]
        while u is not None:
            push(u)
            u = down[u]
        if len(set(seq)) == len(seq):
            kept.update(seq)
            for u in seq:
                retired[u] = True
            found += 1
            if found == k:
                return _finish(g, kept, False, found, scanned)
        else:
            kept.add(v)
            retired[v] = True
    return _finish(g, kept, True, found, scanned)


@dataclass(frozen=True)
class ReductionStats:
    t_sssp: float
    t_reduce: float
    t_search: float
    n_kept: int
    insufficient: bool

    @property
    def t_phases(self) -> float:
        return self.t_sssp + self.t_reduce + self.t_search


def st_trees(
    g: Graph, s: int, t: int, precomputed: Optional[APSPStore] = None
) -> tuple[ShortestPathTree, ShortestPathTree]:
    if precomputed is not None:
        return precomputed.tree(s, Direction.FORWARD), precomputed.tree(t, Direction.BACKWARD)
    return dijkstra_tree(g, s, Direction.FORWARD), dijkstra_tree(g, t, Direction.BACKWARD)


def gr(
    g: Graph,
    k: int,
    s: int,
    t: int,
    engine: KspEngine = k_dijkstra,
    precomputed: Optional[APSPStore] = None,
    reducer=reduce_speeded,
) -> tuple[KspResult, ReductionStats]:
    """Reduce the graph for the query, then run ``engine`` on the subgraph.

    Returns the engine's result with paths mapped back to original ids,
    plus the wall time of each phase and the reduced vertex count.
    """
    clock = time.perf_counter
    t0 = clock()
    ts, tt = st_trees(g, s, t, precomputed)
    t1 = clock()
    reduced = reducer(g, k, s, t, ts, tt)
    t2 = clock()
    local = engine(reduced.subgraph, k, reduced.to_local[s], reduced.to_local[t])
    paths = tuple(reduced.original_path(p) for p in local.paths)
    t3 = clock()
    stats = ReductionStats(t1 - t0, t2 - t1, t3 - t2, reduced.n_kept, reduced.insufficient)
    return KspResult(s, t, k, paths), stats
