"""Loop-less k-shortest path searchers.

Three searchers share one result contract (:class:`KspResult`):

* :func:`brute_force_ksp` enumerates every simple path; it is the oracle.
* :func:`k_dijkstra` expands partial paths best-first with a loop check, a
  per-vertex acceptance counter and per-vertex top-k length queues.
* :func:`k_bidirectional` runs that search from both ends, joins paths
  where the two sides meet, and additionally stops extending a path once
  the k-th best joined length shows it cannot help.

The counter and the top-k queues are exact for walks but not for simple
paths: the cheaper prefixes that fill a vertex's quota may all collide with
the only way on to the target.  Pruned partial paths are therefore parked
rather than dropped.  When a search runs dry, parked paths whose cheapest
conceivable completion could still reach the top k are revived and
expanded unpruned, so results are exact while the prunings still do the
bulk of the cutting.

Equal-length paths are ordered lexicographically by vertex sequence.
Lengths are summed source to target edge by edge, so every searcher reports
bit-identical lengths for the same path.
"""

from __future__ import annotations

import bisect
import heapq
import math
from typing import Callable, Sequence

from .graph import Graph
from .paths import KspResult, Path, has_loop
from .sssp import Direction, dijkstra_tree

__all__ = [
    "BruteForceLimitError",
    "KspEngine",
    "KspResult",
    "Path",
    "brute_force_ksp",
    "has_loop",
    "k_bidirectional",
    "k_dijkstra",
    "path_length",
]

KspEngine = Callable[[Graph, int, int, int], KspResult]

# Relative slack on length cut-offs so float noise never cuts a tie.
_SLACK = 1e-12

# Heap entry states.
_FRESH, _REVIVED, _DEFERRED = 0, 1, 2


class BruteForceLimitError(ValueError):
    pass


def path_length(g: Graph, seq: Sequence[int]) -> float:
    """Length of ``seq`` summed from its first edge to its last."""
    total = 0.0
    for a, b in zip(seq, seq[1:]):
        total += g.weight(a, b)
    return total


def _check_query(g: Graph, k: int, s: int, t: int) -> None:
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError(f"endpoints ({s}, {t}) outside [0, {g.n})")
    if s == t:
        raise ValueError("source and target must differ")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def _result(s: int, t: int, k: int, found: Sequence[tuple[float, tuple[int, ...]]]) -> KspResult:
    return KspResult(s, t, k, tuple(Path(seq, length) for length, seq in found))


def brute_force_ksp(g: Graph, k: int, s: int, t: int, max_n: int = 14) -> KspResult:
    """Enumerate all simple ``s -> t`` paths by DFS, sort, keep the first ``k``."""
    _check_query(g, k, s, t)
    if g.n > max_n:
        raise BruteForceLimitError(f"brute force refused: n={g.n} > max_n={max_n}")
    adj = g.out_adj
    on_path = [False] * g.n
    stack = [s]
    found: list[tuple[float, tuple[int, ...]]] = []

    def dfs(v: int, length: float) -> None:
        for w, wt in adj[v]:
            if on_path[w]:
                continue
            nl = length + wt
            if w == t:
                found.append((nl, tuple(stack) + (t,)))
                continue
            on_path[w] = True
            stack.append(w)
            dfs(w, nl)
            stack.pop()
            on_path[w] = False

    on_path[s] = True
    dfs(s, 0.0)
    found.sort()
    return _result(s, t, k, found[:k])


def _admit(bounded: list[float], k: int, length: float) -> bool:
    """Per-vertex top-k length queue (a max-heap of negated lengths)."""
    if len(bounded) < k:
        heapq.heappush(bounded, -length)
        return True
    if length <= -bounded[0]:
        heapq.heapreplace(bounded, -length)
        return True
    return False


class _TopK:
    """Best ``k`` distinct complete paths seen so far."""

    __slots__ = ("k", "items", "members")

    def __init__(self, k: int):
        self.k = k
        self.items: list[tuple[float, tuple[int, ...]]] = []
        self.members: set[tuple[int, ...]] = set()

    @property
    def full(self) -> bool:
        return len(self.items) >= self.k

    def bound(self) -> float:
        """Largest length that could still enter (inf until full)."""
        if len(self.items) < self.k:
            return math.inf
        lk = self.items[-1][0]
        return lk + abs(lk) * _SLACK

    def offer(self, length: float, seq: tuple[int, ...]) -> None:
        if seq in self.members:
            return
        entry = (length, seq)
        if len(self.items) >= self.k:
            if entry >= self.items[-1]:
                return
            _, dropped = self.items.pop()
            self.members.discard(dropped)
        bisect.insort(self.items, entry)
        self.members.add(seq)


def k_dijkstra(g: Graph, k: int, s: int, t: int, prune: bool = True) -> KspResult:
    """k-shortest loop-less paths by best-first expansion of partial paths.

    Partial paths pop in (length, vertex sequence) order.  Extending
    ``p_v`` to a neighbour ``w`` never revisits a vertex of ``p_v``.  With
    ``prune`` set, the extension is also parked when more than ``k`` paths
    to ``w`` were accepted already or when it is longer than the k-th
    shortest length generated at ``w``; a popped path is parked when its
    vertex has exceeded its quota.  ``prune=False`` keeps only the loop
    check.
    """
    _check_query(g, k, s, t)
    n = g.n
    adj = g.out_adj
    to_target = dijkstra_tree(g, t, Direction.BACKWARD).dist if prune else None
    if to_target is not None and to_target[s] == math.inf:
        return KspResult(s, t, k)
    accepted = [0] * n
    bounded: list[list[float]] = [[] for _ in range(n)]
    heap: list[tuple[float, tuple[int, ...], int]] = [(0.0, (s,), _FRESH)]
    # Parked popped paths, and parked children kept as (parent, parent length,
    # neighbour indices) so a pruned child costs one int until revived.
    parked: list[tuple[float, tuple[int, ...]]] = []
    parked_children: list[tuple[float, tuple[int, ...], list[int]]] = []
    best = _TopK(k)
    pop, push = heapq.heappop, heapq.heappush
    inf = math.inf

    while True:
        while heap and heap[0][0] <= best.bound():
            length, path, state = pop(heap)
            v = path[-1]
            if v == t:
                best.offer(length, path)
                continue
            fresh = prune and state == _FRESH
            if fresh and accepted[v] > k:
                parked.append((length, path))
                continue
            accepted[v] += 1
            cut: list[int] = []
            bound = best.bound()
            for j, (w, wt) in enumerate(adj[v]):
                if w in path:
                    continue
                nl = length + wt
                if prune and (accepted[w] > k or not _admit(bounded[w], k, nl)):
                    # Only park what could still finish within the current bound.
                    if nl + to_target[w] <= bound and to_target[w] != inf:  # type: ignore[index]
                        cut.append(j)
                    continue
                push(heap, (nl, path + (w,), _FRESH))
            if cut:
                parked_children.append((length, path, cut))
        if not parked and not parked_children:
            break
        # A parked path matters only if its cheapest completion could still place.
        bound = best.bound()
        revive = [e for e in parked if e[0] + to_target[e[1][-1]] <= bound]  # type: ignore[index]
        for length, path, cut in parked_children:
            nbrs = adj[path[-1]]
            for j in cut:
                w, wt = nbrs[j]
                nl = length + wt
                if nl + to_target[w] <= bound:  # type: ignore[index]
                    revive.append((nl, path + (w,)))
        parked = []
        parked_children = []
        if not revive:
            break
        for length, path in revive:
            push(heap, (length, path, _REVIVED))

    return _result(s, t, k, best.items)


class _Side:
    """Mutable state of one direction of the bidirectional search."""

    __slots__ = ("forward", "adj", "goal", "heap", "count", "accepted", "bounded", "parked", "h")

    def __init__(self, g: Graph, root: int, goal: int, forward: bool):
        n = g.n
        self.forward = forward
        self.adj = g.out_adj if forward else g.in_adj
        self.goal = goal
        # Forward paths are stored s..v, backward ones v..t: both read source to target.
        self.heap: list[tuple[float, tuple[int, ...], int]] = [(0.0, (root,), _FRESH)]
        self.count = [0] * n
        self.accepted: list[list[tuple[float, tuple[int, ...]]]] = [[] for _ in range(n)]
        self.bounded: list[list[float]] = [[] for _ in range(n)]
        self.parked: list[tuple[float, tuple[int, ...], int]] = []
        self.h: Sequence[float] = ()

    def end(self, path: tuple[int, ...]) -> int:
        return path[-1] if self.forward else path[0]

    def frontier_min(self) -> float:
        low = self.heap[0][0] if self.heap else math.inf
        for e in self.parked:
            if e[0] < low:
                low = e[0]
        return low


def k_bidirectional(g: Graph, k: int, s: int, t: int, prune: bool = True) -> KspResult:
    """k-shortest loop-less paths by interleaved forward/backward search.

    Forward paths grow from ``s`` over out-edges and backward paths grow
    towards ``t`` over in-edges; the side with the smaller queue top moves
    next.  Every newly generated path ending at ``w`` is joined with the
    accepted opposite paths at ``w`` and the join is kept if loop-less.
    The search ends once the two frontiers together are longer than the
    k-th joined path.

    With ``prune`` set, each side applies the counter and top-k queue cuts
    of :func:`k_dijkstra`.  Once ``k`` paths are joined, an accepted path
    ``p_v`` is not extended when its length plus the shortest accepted
    opposite path at ``v``, or plus the opposite queue top, exceeds the
    k-th joined length.  All of these park the path for possible revival.
    """
    _check_query(g, k, s, t)
    weight = g.weight
    fwd = _Side(g, s, t, True)
    bwd = _Side(g, t, s, False)
    if prune:
        fwd.h = dijkstra_tree(g, t, Direction.BACKWARD).dist
        bwd.h = dijkstra_tree(g, s, Direction.FORWARD).dist
        if fwd.h[s] == math.inf:
            return KspResult(s, t, k)
    best = _TopK(k)
    pop, push = heapq.heappop, heapq.heappush

    def expand(side: _Side, other: _Side, length: float, path: tuple[int, ...], v: int) -> None:
        forward = side.forward
        on_path = set(path)
        for w, wt in side.adj[v]:
            if w in on_path:
                continue
            nl = length + wt
            new = path + (w,) if forward else (w,) + path
            if w == side.goal:
                best.offer(nl if forward else path_length(g, new), new)
                continue
            for ol, opath in other.accepted[w]:
                if nl + ol > best.bound():
                    break
                if not on_path.isdisjoint(opath):
                    continue
                if forward:
                    total = nl
                    for a, b in zip(opath, opath[1:]):
                        total += weight(a, b)
                    best.offer(total, new + opath[1:])
                else:
                    total = ol
                    for a, b in zip(new, new[1:]):
                        total += weight(a, b)
                    best.offer(total, opath + new[1:])
            if prune and (side.count[w] > k or not _admit(side.bounded[w], k, nl)):
                side.parked.append((nl, new, _REVIVED))
                continue
            push(side.heap, (nl, new, _FRESH))

    while True:
        while fwd.heap and bwd.heap:
            top_f, top_b = fwd.heap[0][0], bwd.heap[0][0]
            limit = best.bound()
            if top_f + top_b > limit:
                break
            if top_f <= top_b:
                side, other, other_top = fwd, bwd, top_b
            else:
                side, other, other_top = bwd, fwd, top_f
            length, path, state = pop(side.heap)
            v = side.end(path)
            fresh = prune and state == _FRESH
            if state != _DEFERRED:
                if fresh and side.count[v] > k:
                    side.parked.append((length, path, _REVIVED))
                    continue
                side.count[v] += 1
                side.accepted[v].append((length, path))
            if fresh and best.full:
                opposite = other.accepted[v]
                if (opposite and length + opposite[0][0] > limit) or length + other_top > limit:
                    side.parked.append((length, path, _DEFERRED))
                    continue
            expand(side, other, length, path, v)

        if not prune or not _revive(fwd, bwd, best.bound()):
            break

    return _result(s, t, k, best.items)


def _revive(fwd: _Side, bwd: _Side, bound: float) -> bool:
    """Move parked paths that could still complete a top-k path back into the queues.

    A missing path would need an unexpanded forward piece and an
    unexpanded backward piece whose lengths sum to at most ``bound``;
    when no such pair exists the result is final.
    """
    for side in (fwd, bwd):
        h = side.h
        side.parked = [e for e in side.parked if e[0] + h[side.end(e[1])] <= bound]
    low_f, low_b = fwd.frontier_min(), bwd.frontier_min()
    if low_f == math.inf or low_b == math.inf or low_f + low_b > bound:
        return False
    revived = False
    for side, other_low in ((fwd, low_b), (bwd, low_f)):
        keep = []
        for e in side.parked:
            if e[0] + other_low <= bound:
                heapq.heappush(side.heap, e)
                revived = True
            else:
                keep.append(e)
        side.parked = keep
    return revived
