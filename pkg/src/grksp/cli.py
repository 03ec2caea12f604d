"""Command-line front end: ``grksp {gen,ksp,reduce,bench}``.

Exit status is 0 on success, 2 on a usage error and 1 on a runtime error.
The default seed can be overridden with the ``GRKSP_SEED`` environment
variable; an explicit ``--seed`` always wins.
"""

from __future__ import annotations

import argparse
import contextlib
import logging
import math
import os
import sys
from typing import IO, Iterator, Optional, Sequence

from . import bench
from .graph import GraphError, gen_hypercube, gen_scale_free, load_graph, save_graph, write_graph
from .ksp import BruteForceLimitError, brute_force_ksp, k_bidirectional, k_dijkstra
from .reduction import gr, reduce_primitive, reduce_speeded, st_trees

SEED_ENV = "GRKSP_SEED"
DEFAULT_SEED = 1

_SEARCHERS = {
    "kdij": lambda g, k, s, t: k_dijkstra(g, k, s, t),
    "kbidij": lambda g, k, s, t: k_bidirectional(g, k, s, t),
    "gr-kdij": lambda g, k, s, t: gr(g, k, s, t, engine=k_dijkstra)[0],
    "gr-kbidij": lambda g, k, s, t: gr(g, k, s, t, engine=k_bidirectional)[0],
    "brute": lambda g, k, s, t: brute_force_ksp(g, k, s, t),
}


class UsageError(Exception):
    pass


def default_seed(environ=os.environ) -> int:
    raw = environ.get(SEED_ENV)
    if raw is None or raw == "":
        return DEFAULT_SEED
    try:
        seed = int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None
    if seed < 0:
        raise UsageError(f"{SEED_ENV} must be non-negative, got {seed}")
    return seed


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _m0(text: str):
    if text == "sqrt":
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"m0 must be an integer or 'sqrt', got {text!r}") from None


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        yield fh


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="grksp", description="Graph-reduced k-shortest loop-less paths.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a benchmark graph")
    g.add_argument("family", choices=bench.FAMILIES)
    size = g.add_mutually_exclusive_group(required=True)
    size.add_argument("--n", type=int, help="vertex count (a power of two for hypercube)")
    size.add_argument("--dim", type=int, help="hypercube dimension")
    g.add_argument("--m0", type=_m0, default=2, help="scale-free seed clique size, or 'sqrt' (default 2)")
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("-o", "--out", help="output file (default stdout)")

    q = sub.add_parser("ksp", help="k shortest loop-less paths in a graph file")
    q.add_argument("graph")
    q.add_argument("--algo", choices=sorted(_SEARCHERS), default="gr-kbidij")
    q.add_argument("-k", type=int, required=True)
    q.add_argument("-s", "--source", type=int, required=True)
    q.add_argument("-t", "--target", type=int, required=True)
    q.add_argument("-o", "--out")

    r = sub.add_parser("reduce", help="write the reduced subgraph for a query")
    r.add_argument("graph")
    r.add_argument("-k", type=int, required=True)
    r.add_argument("-s", "--source", type=int, required=True)
    r.add_argument("-t", "--target", type=int, required=True)
    r.add_argument("--method", choices=("speeded", "primitive"), default="speeded")
    r.add_argument("-o", "--out")

    b = sub.add_parser("bench", help="run the benchmark grid and write CSV")
    b.add_argument("--family", choices=bench.FAMILIES, default="hypercube")
    b.add_argument("--sizes", type=_int_list, required=True, help="comma-separated vertex counts")
    b.add_argument("--m0", type=_m0, default=2)
    b.add_argument("-k", type=int, default=None, help="fixed k (default floor(sqrt(n)))")
    b.add_argument("--algos", default=",".join(bench.ALGORITHMS[:4]),
                   help="comma-separated subset of " + ",".join(bench.ALGORITHMS))
    b.add_argument("--seeds", type=_int_list, default=None)
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--apsp", action="store_true", help="precompute all-pairs trees for GR runs")
    b.add_argument("--check", action="store_true",
                   help="fail if algorithms disagree on any query")
    b.add_argument("-o", "--out", help="CSV file (default stdout)")
    return p


def _write_paths(result, out: IO[str]) -> None:
    for path in result.paths:
        out.write(f"{path.length:.9g} " + " ".join(map(str, path.vertices)) + "\n")


def cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else default_seed()
    if args.family == "hypercube":
        if args.dim is not None:
            dim = args.dim
        else:
            n = args.n
            if n < 2 or n & (n - 1):
                raise UsageError(f"hypercube --n must be a power of two >= 2, got {n}")
            dim = n.bit_length() - 1
        g = gen_hypercube(dim, seed)
    else:
        if args.n is None:
            raise UsageError("scalefree needs --n")
        m0 = max(1, math.isqrt(args.n)) if args.m0 == "sqrt" else args.m0
        g = gen_scale_free(args.n, m0, seed)
    with _output(args.out) as out:
        write_graph(g, out)
    return 0


def cmd_ksp(args) -> int:
    g = load_graph(args.graph)
    result = _SEARCHERS[args.algo](g, args.k, args.source, args.target)
    with _output(args.out) as out:
        _write_paths(result, out)
    return 0


def cmd_reduce(args) -> int:
    g = load_graph(args.graph)
    ts, tt = st_trees(g, args.source, args.target)
    reducer = reduce_speeded if args.method == "speeded" else reduce_primitive
    red = reducer(g, args.k, args.source, args.target, ts, tt)
    with _output(args.out) as out:
        out.write("# local ids map to original ids: " + " ".join(map(str, red.to_original)) + "\n")
        save_graph(red.subgraph, out)
    stats = (
        f"kept={red.n_kept} n={g.n} reduction_rate={red.n_kept / g.n:.6g} "
        f"insufficient={int(red.insufficient)} loopless_found={red.loopless_found}"
    )
    # Keep stdout clean for the subgraph when it goes there.
    print(stats, file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return 0


def cmd_bench(args) -> int:
    algos = tuple(a for a in args.algos.split(",") if a)
    seeds = args.seeds if args.seeds is not None else (default_seed(),)
    try:
        cfg = bench.BenchConfig(
            family=args.family, sizes=args.sizes, m0=args.m0, k=args.k,
            algorithms=algos, seeds=seeds, apsp=args.apsp, repeats=args.repeats,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = bench.run_benchmark(cfg)
    with _output(args.out) as out:
        bench.write_csv(records, out)
    # Failed cells were already logged by the harness and are absent from the CSV.
    failed = [r for r in records if r.error is not None]
    if args.check:
        problems = bench.check_agreement(records)
        for msg in problems:
            print(f"disagreement: {msg}", file=sys.stderr)
        if problems:
            return 1
    return 1 if failed else 0


_COMMANDS = {"gen": cmd_gen, "ksp": cmd_ksp, "reduce": cmd_reduce, "bench": cmd_bench}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"grksp: error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, BruteForceLimitError, ValueError, OSError) as exc:
        print(f"grksp: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
