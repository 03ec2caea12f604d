import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grksp import (
    BruteForceLimitError,
    Path,
    brute_force_ksp,
    build_graph,
    gen_hypercube,
    has_loop,
    k_bidirectional,
    k_dijkstra,
    path_length,
)
from helpers import as_pairs, d4, fuzz_graph, oracle_ksp, p5, same_paths

SEARCHERS = {
    "kdij": k_dijkstra,
    "kbidij": k_bidirectional,
    "kdij-unpruned": lambda g, k, s, t: k_dijkstra(g, k, s, t, prune=False),
    "kbidij-unpruned": lambda g, k, s, t: k_bidirectional(g, k, s, t, prune=False),
}


# --- has_loop --------------------------------------------------------------

@pytest.mark.parametrize("seq, expected", [([0, 1, 4, 1, 3], True), ([0, 1, 3], False), ([0], False)])
def test_has_loop(seq, expected):
    assert has_loop(seq) is expected
    assert has_loop(Path(tuple(seq), 0.0)) is expected


# --- brute force -----------------------------------------------------------

def test_brute_d4_k2():
    r = brute_force_ksp(d4(), 2, 0, 3)
    assert r.lengths == (2.0, 3.0)
    assert r.sequences == ((0, 1, 3), (0, 2, 3))


def test_brute_d4_k5_returns_all_paths():
    assert brute_force_ksp(d4(), 5, 0, 3).lengths == (2.0, 3.0)


def test_brute_no_path():
    g = build_graph(4, False, [(0, 1, 1.0), (2, 3, 1.0)])
    assert len(brute_force_ksp(g, 3, 0, 3)) == 0


def test_brute_guard():
    g = gen_hypercube(4, 0)
    with pytest.raises(BruteForceLimitError):
        brute_force_ksp(g, 1, 0, 15)
    assert len(brute_force_ksp(g, 1, 0, 15, max_n=16)) == 1


def test_brute_matches_independent_enumeration():
    for seed in range(30):
        g, s, t = fuzz_graph(seed)
        assert as_pairs(brute_force_ksp(g, 10**6, s, t)) == oracle_ksp(g, 10**6, s, t)


# --- worked examples for the searchers -------------------------------------

@pytest.mark.parametrize("name", sorted(SEARCHERS))
def test_pendant_graph_has_only_two_paths(name):
    r = SEARCHERS[name](p5(), 3, 0, 3)
    assert r.lengths == (2.0, 3.0)
    assert r.sequences == ((0, 1, 3), (0, 2, 3))


@pytest.mark.parametrize("name", sorted(SEARCHERS))
def test_d4_examples(name):
    search = SEARCHERS[name]
    assert search(d4(), 1, 0, 3).sequences == ((0, 1, 3),)
    assert search(d4(), 1, 0, 3).lengths == (2.0,)
    assert search(d4(), 2, 0, 3).lengths == (2.0, 3.0)


@pytest.mark.parametrize("name", sorted(SEARCHERS))
def test_unreachable_target(name):
    g = build_graph(4, False, [(0, 1, 1.0), (2, 3, 1.0)])
    r = SEARCHERS[name](g, 2, 0, 3)
    assert r.paths == () and (r.source, r.target, r.k) == (0, 3, 2)


@pytest.mark.parametrize("name", sorted(SEARCHERS))
def test_directed_edges_respected(name):
    g = build_graph(4, True, [(0, 1, 1.0), (1, 3, 1.0), (2, 0, 1.0), (3, 2, 1.0), (0, 2, 5.0), (2, 3, 1.0)])
    r = SEARCHERS[name](g, 5, 0, 3)
    assert as_pairs(r) == oracle_ksp(g, 5, 0, 3)


@pytest.mark.parametrize("search", [brute_force_ksp, k_dijkstra, k_bidirectional])
def test_invalid_queries(search):
    with pytest.raises(ValueError):
        search(d4(), 1, 2, 2)
    with pytest.raises(ValueError):
        search(d4(), 0, 0, 3)
    with pytest.raises(ValueError):
        search(d4(), 1, 0, 9)


def test_equal_length_paths_each_count_and_sort_lexicographically():
    # Three routes of identical length 2.0 from 0 to 4.
    g = build_graph(5, False, [(0, 3, 1.0), (3, 4, 1.0), (0, 1, 1.0), (1, 4, 1.0), (0, 2, 1.0), (2, 4, 1.0)])
    for search in (brute_force_ksp, k_dijkstra, k_bidirectional):
        assert search(g, 2, 0, 4).sequences == ((0, 1, 4), (0, 2, 4))
        assert search(g, 3, 0, 4).sequences == ((0, 1, 4), (0, 2, 4), (0, 3, 4))


def test_quota_pruning_does_not_lose_paths():
    # On this instance the cheap prefixes that exhaust a vertex's quota all
    # run into the only continuation towards the target; dropping the
    # pruned prefixes outright would miss the 8th path.
    g, s, t = fuzz_graph(0)
    expected = oracle_ksp(g, 8, s, t)
    for name, search in SEARCHERS.items():
        assert same_paths(as_pairs(search(g, 8, s, t)), expected), name


def test_lengths_are_bit_identical_across_searchers():
    for seed in range(20):
        g, s, t = fuzz_graph(seed)
        ref = brute_force_ksp(g, 6, s, t)
        for search in SEARCHERS.values():
            r = search(g, 6, s, t)
            assert r.paths == ref.paths
            for p in r.paths:
                assert p.length == path_length(g, p.vertices)


def test_hypercube_searchers_agree():
    g = gen_hypercube(7, 2)
    ref = k_dijkstra(g, 11, 0, 127)
    assert len(ref) == 11
    assert k_bidirectional(g, 11, 0, 127).paths == ref.paths
    assert k_dijkstra(g, 11, 0, 127, prune=False).paths == ref.paths


# --- properties over the fuzz family ---------------------------------------

@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**9), k=st.integers(1, 8), directed=st.booleans())
def test_searchers_match_oracle(seed, k, directed):
    g, s, t = fuzz_graph(seed, directed)
    expected = oracle_ksp(g, k, s, t)
    for name, search in SEARCHERS.items():
        assert same_paths(as_pairs(search(g, k, s, t)), expected), name


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9), k=st.integers(1, 7))
def test_result_invariants_and_prefix_stability(seed, k):
    g, s, t = fuzz_graph(seed)
    for search in (k_dijkstra, k_bidirectional):
        small, big = search(g, k, s, t), search(g, k + 1, s, t)
        assert big.paths[:k] == small.paths
        lengths = big.lengths
        assert list(lengths) == sorted(lengths)
        assert len(set(big.sequences)) == len(big)
        for p in big.paths:
            assert not has_loop(p)
            assert p.source == s and p.target == t
            for a, b in zip(p.vertices, p.vertices[1:]):
                assert g.has_edge(a, b)
