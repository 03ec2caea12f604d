"""Weighted graph model, benchmark graph generators and edge-list I/O.

Vertices are dense integer ids ``0..n-1``.  Edge weights are finite and
strictly positive.  Undirected graphs store every edge in both directions;
directed graphs additionally keep a reversed adjacency for backward searches.
"""

from __future__ import annotations

import math
import os
import random
from typing import IO, Iterable, Iterator, Sequence, Union

Adjacency = tuple[tuple[tuple[int, float], ...], ...]
Edge = tuple[int, int, float]
PathLike = Union[str, "os.PathLike[str]"]

MAX_HYPERCUBE_DIM = 24


class GraphError(ValueError):
    """Raised for input that violates the graph invariants."""


class Graph:
    """Immutable weighted adjacency structure.

    ``out_adj[u]`` lists ``(v, w)`` for every edge ``u -> v`` sorted by ``v``;
    ``in_adj[v]`` lists ``(u, w)`` for every edge ``u -> v``.  For undirected
    graphs both are the same object.
    """

    __slots__ = ("_n", "_directed", "_out", "_in", "_m", "_wmap")

    def __init__(self, n: int, directed: bool, out_adj: Adjacency, in_adj: Adjacency | None = None):
        # Trusted constructor: callers are build_graph and induced_subgraph.
        self._n = n
        self._directed = directed
        self._out = out_adj
        self._in = out_adj if (in_adj is None or not directed) else in_adj
        total = sum(len(a) for a in out_adj)
        self._m = total if directed else total // 2
        self._wmap: list[dict[int, float]] | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def out_adj(self) -> Adjacency:
        return self._out

    @property
    def in_adj(self) -> Adjacency:
        return self._in

    def degree(self, u: int) -> int:
        return len(self._out[u])

    def neighbors(self, u: int) -> tuple[tuple[int, float], ...]:
        return self._out[u]

    def weight(self, u: int, v: int) -> float:
        """Weight of edge ``u -> v``; raises KeyError if absent."""
        if self._wmap is None:
            self._wmap = [dict(a) for a in self._out]
        return self._wmap[u][v]

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.weight(u, v)
        except KeyError:
            return False
        return True

    def edges(self) -> Iterator[Edge]:
        """Each edge once; undirected edges are reported with ``u < v``."""
        for u, nbrs in enumerate(self._out):
            for v, w in nbrs:
                if self._directed or u < v:
                    yield u, v, w

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and self._directed == other._directed
            and self._out == other._out
        )

    def __hash__(self) -> int:
        return hash((self._n, self._directed, self._out))

    def __repr__(self) -> str:
        kind = "directed" if self._directed else "undirected"
        return f"Graph(n={self._n}, m={self._m}, {kind})"


def build_graph(n: int, directed: bool, edges: Iterable[Sequence]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Undirected input lists every edge once; ``(u, v)`` and ``(v, u)`` count as
    the same edge.  Raises :class:`GraphError` on self-loops, out-of-range ids,
    duplicate edges and non-positive or non-finite weights.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    out: list[dict[int, float]] = [{} for _ in range(n)]
    inn: list[dict[int, float]] = [{} for _ in range(n)] if directed else out
    for edge in edges:
        u, v, w = edge
        u, v, w = int(u), int(v), float(w)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an id outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not math.isfinite(w) or w <= 0.0:
            raise GraphError(f"edge ({u}, {v}) has invalid weight {w!r}")
        if v in out[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        out[u][v] = w
        if directed:
            inn[v][u] = w
        else:
            out[v][u] = w
    out_adj = tuple(tuple(sorted(d.items())) for d in out)
    in_adj = tuple(tuple(sorted(d.items())) for d in inn) if directed else None
    return Graph(n, directed, out_adj, in_adj)


def _positive_unit(rng: random.Random) -> float:
    w = rng.random()
    while w == 0.0:
        w = rng.random()
    return w


def gen_hypercube(dim: int, seed: int) -> Graph:
    """Hypercube on ``2**dim`` vertices with uniform (0, 1) weights.

    Vertices ``u`` and ``v`` are adjacent iff their ids differ in one bit.
    Weights are drawn in edge order: ``u`` ascending, then bit ascending.
    """
    if not 1 <= dim <= MAX_HYPERCUBE_DIM:
        raise GraphError(f"hypercube dimension must be in [1, {MAX_HYPERCUBE_DIM}], got {dim}")
    rng = random.Random(seed)
    n = 1 << dim
    edges = []
    for u in range(n):
        for bit in range(dim):
            v = u ^ (1 << bit)
            if u < v:
                edges.append((u, v, _positive_unit(rng)))
    return build_graph(n, False, edges)


def gen_scale_free(n: int, m0: int, seed: int) -> Graph:
    """Preferential-attachment graph seeded with the complete graph on ``m0`` vertices.

    Every later vertex attaches to ``m0`` distinct earlier vertices, each draw
    made with probability proportional to the degrees as they stood before
    the new vertex arrived.  Duplicate draws are rejected and redrawn.
    """
    if not 1 <= m0 <= n:
        raise GraphError(f"need 1 <= m0 <= n, got m0={m0}, n={n}")
    rng = random.Random(seed)
    edges: list[Edge] = []
    # One entry per edge endpoint: a uniform pick is a degree-weighted pick.
    endpoints: list[int] = []
    for u in range(m0):
        for v in range(u + 1, m0):
            edges.append((u, v, _positive_unit(rng)))
            endpoints += (u, v)
    for v in range(m0, n):
        chosen: list[int] = []
        seen: set[int] = set()
        while len(chosen) < m0:
            if endpoints:
                u = endpoints[int(rng.random() * len(endpoints))]
            else:
                # Only reachable for m0 == 1 on the first attachment.
                u = int(rng.random() * v)
            if u not in seen:
                seen.add(u)
                chosen.append(u)
        for u in chosen:
            edges.append((u, v, _positive_unit(rng)))
            endpoints += (u, v)
    return build_graph(n, False, edges)


def write_graph(g: Graph, out: IO[str]) -> None:
    edges = list(g.edges())
    out.write(f"{g.n} {len(edges)} {int(g.directed)}\n")
    for u, v, w in edges:
        out.write(f"{u} {v} {w!r}\n")


def read_graph(lines: Iterable[str]) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3:
                raise GraphError(f"line {lineno}: header must be 'n m directed'")
            try:
                n, m, directed = (int(x) for x in fields)
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header {line!r}") from None
            if directed not in (0, 1) or m < 0:
                raise GraphError(f"line {lineno}: malformed header {line!r}")
            header = (n, m, bool(directed))
            continue
        if len(fields) != 3:
            raise GraphError(f"line {lineno}: edge line must be 'u v w'")
        try:
            edges.append((int(fields[0]), int(fields[1]), float(fields[2])))
        except ValueError:
            raise GraphError(f"line {lineno}: malformed edge {line!r}") from None
    if header is None:
        raise GraphError("missing header line")
    n, m, directed = header
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, directed, edges)


def save_graph(g: Graph, destination: PathLike | IO[str]) -> None:
    """Write ``g`` in edge-list format to a path or text stream."""
    if hasattr(destination, "write"):
        write_graph(g, destination)  # type: ignore[arg-type]
        return
    with open(destination, "w", encoding="ascii", newline="\n") as fh:
        write_graph(g, fh)


def load_graph(source: PathLike | IO[str]) -> Graph:
    if hasattr(source, "read"):
        return read_graph(source)  # type: ignore[arg-type]
    with open(source, encoding="ascii") as fh:
        return read_graph(fh)
