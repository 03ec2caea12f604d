"""Shared fixtures-as-functions for the test suite: small named graphs,
the seeded fuzz family, and an enumeration oracle written independently of
the package's own brute-force searcher."""

from __future__ import annotations

import random
from collections import deque

from grksp import Graph, build_graph

D4_EDGES = [(0, 1, 1.0), (1, 3, 1.0), (0, 2, 1.0), (2, 3, 2.0)]
P5_EDGES = D4_EDGES + [(1, 4, 10.0)]


def d4() -> Graph:
    return build_graph(4, False, D4_EDGES)


def p5() -> Graph:
    """D4 plus a pendant vertex 4 hanging off vertex 1."""
    return build_graph(5, False, P5_EDGES)


def fuzz_graph(seed: int, directed: bool = False) -> tuple[Graph, int, int]:
    """Random graph with n in [4, 12], edge probability 0.5, weights in (0, 1),
    and two distinct random endpoints."""
    rng = random.Random(seed)
    n = rng.randint(4, 12)
    edges = []
    for u in range(n):
        for v in range(n):
            if (directed and u != v) or u < v:
                if rng.random() < 0.5:
                    edges.append((u, v, rng.random() or 0.5))
    s, t = rng.sample(range(n), 2)
    return build_graph(n, directed, edges), s, t


def all_simple_paths(g: Graph, s: int, t: int) -> list[tuple[float, tuple[int, ...]]]:
    """Every simple s -> t path, sorted by (length, vertex sequence).

    Iterative enumeration with an explicit stack; lengths are summed
    source to target so they compare bit-equal with the searchers.
    """
    weights = [dict(nbrs) for nbrs in g.out_adj]
    found = []
    stack = [(s,)]
    while stack:
        path = stack.pop()
        v = path[-1]
        if v == t:
            total = 0.0
            for a, b in zip(path, path[1:]):
                total += weights[a][b]
            found.append((total, path))
            continue
        for w in weights[v]:
            if w not in path:
                stack.append(path + (w,))
    found.sort()
    return found


def oracle_ksp(g: Graph, k: int, s: int, t: int) -> list[tuple[float, tuple[int, ...]]]:
    return all_simple_paths(g, s, t)[:k]


def bfs_connected(g: Graph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v, _ in g.out_adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n


def as_pairs(result) -> list[tuple[float, tuple[int, ...]]]:
    return [(p.length, p.vertices) for p in result.paths]


def same_paths(got, expected, tol: float = 1e-9) -> bool:
    """Identical vertex sequences in identical order, lengths within ``tol``."""
    if len(got) != len(expected):
        return False
    return all(
        gs == es and abs(gl - el) <= tol for (gl, gs), (el, es) in zip(got, expected)
    )
