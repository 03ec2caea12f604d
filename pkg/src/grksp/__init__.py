"""Graph-reduced k-shortest loop-less paths.

Shrink a graph to a subgraph that provably still holds the ``k`` shortest
loop-less ``s -> t`` paths, then run any k-shortest path searcher on it.
"""

from .graph import (
    Graph,
    GraphError,
    build_graph,
    gen_hypercube,
    gen_scale_free,
    load_graph,
    read_graph,
    save_graph,
    write_graph,
)
from .ksp import (
    BruteForceLimitError,
    brute_force_ksp,
    k_bidirectional,
    k_dijkstra,
    path_length,
)
from .paths import KspResult, Path, has_loop
from .reduction import (
    BywayEntry,
    ReducedGraph,
    ReductionStats,
    byway_distances,
    byway_path,
    gr,
    induced_subgraph,
    reduce_primitive,
    reduce_speeded,
    st_trees,
)
from .sssp import APSPStore, Direction, ShortestPathTree, all_pairs_trees, dijkstra_tree, extract_path, tree_path

__version__ = "0.1.0"

__all__ = [
    "APSPStore", "BruteForceLimitError", "BywayEntry", "Direction", "Graph", "GraphError",
    "KspResult", "Path", "ReducedGraph", "ReductionStats", "ShortestPathTree",
    "all_pairs_trees", "brute_force_ksp", "build_graph", "byway_distances", "byway_path",
    "dijkstra_tree", "extract_path", "gen_hypercube", "gen_scale_free", "gr", "has_loop",
    "induced_subgraph", "k_bidirectional", "k_dijkstra", "load_graph", "path_length",
    "read_graph", "reduce_primitive", "reduce_speeded", "save_graph", "st_trees",
    "tree_path", "write_graph",
]
