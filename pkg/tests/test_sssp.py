import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grksp import Direction, all_pairs_trees, build_graph, dijkstra_tree, extract_path, gen_hypercube
from grksp.sssp import tree_path
from helpers import d4, fuzz_graph

inf = math.inf


def test_d4_forward_tree():
    t = dijkstra_tree(d4(), 0)
    assert t.dist == (0.0, 1.0, 1.0, 2.0)
    assert t.parent == (None, 0, 0, 1)
    assert t.direction is Direction.FORWARD


def test_single_vertex():
    t = dijkstra_tree(build_graph(1, False, []), 0)
    assert t.dist == (0.0,) and t.parent == (None,)


def test_unreachable_vertex():
    t = dijkstra_tree(build_graph(2, False, []), 0)
    assert t.dist == (0.0, inf) and t.parent == (None, None)
    assert not t.reachable(1)


def test_root_out_of_range():
    with pytest.raises(ValueError):
        dijkstra_tree(d4(), 4)


def test_equal_distance_tie_goes_to_smaller_parent():
    # Vertex 2 settles before vertex 1, yet both reach 3 at exactly 1.0.
    g = build_graph(4, False, [(0, 2, 0.4), (2, 3, 0.6), (0, 1, 0.5), (1, 3, 0.5)])
    t = dijkstra_tree(g, 0)
    assert t.dist[3] == 1.0
    assert t.parent[3] == 1


def test_backward_tree_on_directed_graph():
    g = build_graph(3, True, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 5.0)])
    back = dijkstra_tree(g, 2, Direction.BACKWARD)
    assert back.dist == (2.0, 1.0, 0.0)
    assert back.parent == (1, 2, None)
    fwd = dijkstra_tree(g, 2, Direction.FORWARD)
    assert fwd.dist == (inf, inf, 0.0)


def test_direction_accepts_strings():
    assert dijkstra_tree(d4(), 3, "backward").direction is Direction.BACKWARD


def test_extract_path_forward():
    p = extract_path(dijkstra_tree(d4(), 0), 3)
    assert p.vertices == (0, 1, 3) and p.length == 2.0


def test_extract_path_backward_reads_towards_root():
    p = extract_path(dijkstra_tree(d4(), 3, Direction.BACKWARD), 0)
    assert p.vertices == (0, 1, 3) and p.length == 2.0


def test_extract_path_root_and_unreachable():
    t = dijkstra_tree(build_graph(3, False, [(0, 1, 1.0)]), 0)
    root = extract_path(t, 0)
    assert root.vertices == (0,) and root.length == 0.0
    assert extract_path(t, 2) is None
    assert tree_path(t, 2) is None


def test_apsp_d4():
    store = all_pairs_trees(d4())
    assert len(store) == 4
    assert store.tree(0).dist[3] == 2.0
    assert store.tree(3, Direction.BACKWARD).dist[0] == 2.0


def test_apsp_single_vertex():
    store = all_pairs_trees(build_graph(1, False, []))
    assert len(store) == 1 and store.tree(0).dist == (0.0,)


def test_apsp_undirected_symmetry():
    g = gen_hypercube(5, 3)
    store = all_pairs_trees(g)
    for u in range(g.n):
        for v in range(g.n):
            assert store.tree(u).dist[v] == pytest.approx(store.tree(v).dist[u], abs=1e-12)


def test_apsp_undirected_shares_tree_data():
    store = all_pairs_trees(d4())
    f, b = store.tree(2, Direction.FORWARD), store.tree(2, Direction.BACKWARD)
    assert f.dist is b.dist and f.parent is b.parent


def test_apsp_directed_matches_individual_runs():
    g, _, _ = fuzz_graph(17, directed=True)
    store = all_pairs_trees(g)
    for r in range(g.n):
        assert store.tree(r, Direction.BACKWARD) == dijkstra_tree(g, r, Direction.BACKWARD)
        assert store.tree(r) == dijkstra_tree(g, r)


def _check_tree(g, t):
    adj = g.out_adj if t.direction is Direction.FORWARD else g.in_adj
    assert t.dist[t.root] == 0.0 and t.parent[t.root] is None
    for u in range(g.n):
        if t.dist[u] == inf:
            assert t.parent[u] is None
            continue
        for v, w in adj[u]:
            assert t.dist[v] <= t.dist[u] + w  # triangle consistency
    for v, p in enumerate(t.parent):
        if p is None:
            continue
        w = g.weight(p, v) if t.direction is Direction.FORWARD else g.weight(v, p)
        assert t.dist[v] == t.dist[p] + w  # tree edge, exact accumulation


def _enumerated_distances(adj, n, root):
    """Shortest distance to every vertex over all simple paths from ``root``."""
    best = [inf] * n
    best[root] = 0.0

    def walk(v, length, seen):
        for w, wt in adj[v]:
            if w not in seen:
                nl = length + wt
                best[w] = min(best[w], nl)
                seen.add(w)
                walk(w, nl, seen)
                seen.remove(w)

    walk(root, 0.0, {root})
    return best


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), directed=st.booleans())
def test_tree_invariants_and_oracle(seed, directed):
    g, s, _ = fuzz_graph(seed, directed)
    if g.n > 10:
        g = build_graph(10, directed, [e for e in g.edges() if e[0] < 10 and e[1] < 10])
        s %= 10
    for direction in (Direction.FORWARD, Direction.BACKWARD):
        t = dijkstra_tree(g, s, direction)
        _check_tree(g, t)
        adj = g.out_adj if direction is Direction.FORWARD else g.in_adj
        for got, expected in zip(t.dist, _enumerated_distances(adj, g.n, s)):
            if expected == inf:
                assert got == inf
            else:
                assert abs(got - expected) <= 1e-12
