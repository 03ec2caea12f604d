"""Dijkstra shortest-path trees and an all-pairs tree store."""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass, replace
from typing import Optional

from .graph import Graph
from .paths import Path


class Direction(str, enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class ShortestPathTree:
    """Distances and parents of a shortest-path tree.

    A forward tree holds shortest paths from ``root``; a backward tree holds
    shortest paths to ``root``, so ``parent[v]`` is the next hop from ``v``
    towards the root.  Unreachable vertices have ``inf`` and ``None``.
    """

    root: int
    dist: tuple[float, ...]
    parent: tuple[Optional[int], ...]
    direction: Direction = Direction.FORWARD

    def reachable(self, v: int) -> bool:
        return self.dist[v] != math.inf


def dijkstra_tree(g: Graph, root: int, direction: Direction = Direction.FORWARD) -> ShortestPathTree:
    """Full Dijkstra from ``root`` with a lazy-deletion binary heap.

    An equal-distance relaxation replaces the parent when it comes from a
    smaller vertex id, which makes the tree independent of heap order.
    """
    n = g.n
    direction = Direction(direction)
    if not 0 <= root < n:
        raise ValueError(f"root {root} outside [0, {n})")
    adj = g.out_adj if direction is Direction.FORWARD else g.in_adj
    inf = math.inf
    dist = [inf] * n
    parent: list[Optional[int]] = [None] * n
    done = [False] * n
    dist[root] = 0.0
    heap = [(0.0, root)]
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        d, u = pop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            if done[v]:
                continue
            nd = d + w
            dv = dist[v]
            if nd < dv:
                dist[v] = nd
                parent[v] = u
                push(heap, (nd, v))
            elif nd == dv and u < parent[v]:  # type: ignore[operator]
                parent[v] = u
    return ShortestPathTree(root, tuple(dist), tuple(parent), direction)


def tree_path(t: ShortestPathTree, v: int) -> Optional[list[int]]:
    """Vertex list of the tree path between the root and ``v``.

    Forward trees give ``root .. v``; backward trees give ``v .. root``.
    """
    if t.dist[v] == math.inf:
        return None
    seq = [v]
    parent = t.parent
    u = parent[v]
    while u is not None:
        seq.append(u)
        u = parent[u]
    if t.direction is Direction.FORWARD:
        seq.reverse()
    return seq


def extract_path(t: ShortestPathTree, v: int) -> Optional[Path]:
    """The tree path to (forward) or from (backward) ``v`` as a Path, or None."""
    seq = tree_path(t, v)
    if seq is None:
        return None
    return Path(tuple(seq), t.dist[v])


class APSPStore:
    """Shortest-path trees for every root, built once and then read-only."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.directed = g.directed
        self._forward = [dijkstra_tree(g, r, Direction.FORWARD) for r in range(g.n)]
        if g.directed:
            self._backward = [dijkstra_tree(g, r, Direction.BACKWARD) for r in range(g.n)]
        else:
            # Undirected: the backward tree is the forward tree read the other way.
            self._backward = [replace(t, direction=Direction.BACKWARD) for t in self._forward]

    def tree(self, root: int, direction: Direction = Direction.FORWARD) -> ShortestPathTree:
        if Direction(direction) is Direction.FORWARD:
            return self._forward[root]
        return self._backward[root]

    def __len__(self) -> int:
        return self.n


def all_pairs_trees(g: Graph) -> APSPStore:
    return APSPStore(g)
