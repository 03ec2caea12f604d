"""Benchmark harness: generate graphs, time every algorithm, emit CSV rows."""

from __future__ import annotations

import csv
import logging
import math
import statistics
import time
from dataclasses import dataclass, field
from typing import IO, Callable, Iterable, Optional, Sequence, Union

from .graph import Graph, gen_hypercube, gen_scale_free
from .ksp import KspResult, brute_force_ksp, k_bidirectional, k_dijkstra
from .reduction import gr
from .sssp import APSPStore, all_pairs_trees

log = logging.getLogger(__name__)

FAMILIES = ("hypercube", "scalefree")
# Canonical algorithm order; also the row order inside one (n, seed) cell.
ALGORITHMS = ("kdij", "kbidij", "gr-kdij", "gr-kbidij", "brute")
CSV_FIELDS = (
    "family", "n", "m", "k", "seed", "algo",
    "t_sssp_s", "t_reduce_s", "t_search_s", "t_total_s",
    "n_reduced", "reduction_rate", "paths_found",
)
TIMING_FIELDS = ("t_sssp_s", "t_reduce_s", "t_search_s", "t_total_s")

_ENGINES = {"kdij": k_dijkstra, "kbidij": k_bidirectional}


@dataclass(frozen=True)
class BenchConfig:
    family: str
    sizes: tuple[int, ...]
    m0: Union[int, str] = 2          # fixed value, or "sqrt" for the dense case
    k: Optional[int] = None          # None: floor(sqrt(n))
    algorithms: tuple[str, ...] = ALGORITHMS[:4]
    seeds: tuple[int, ...] = (1,)
    apsp: bool = False
    repeats: int = 3

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if not self.sizes:
            raise ValueError("at least one size is required")
        for n in self.sizes:
            if self.family == "hypercube" and (n < 2 or n & (n - 1)):
                raise ValueError(f"hypercube size must be a power of two >= 2, got {n}")
            if n < 2:
                raise ValueError(f"size must be >= 2, got {n}")
        if isinstance(self.m0, str):
            if self.m0 != "sqrt":
                raise ValueError(f"m0 must be an integer or 'sqrt', got {self.m0!r}")
        elif self.m0 < 1:
            raise ValueError(f"m0 must be >= 1, got {self.m0}")
        if self.k is not None and self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        bad = [a for a in self.algorithms if a not in ALGORITHMS]
        if bad or not self.algorithms:
            raise ValueError(f"unknown algorithms {bad}; choose from {ALGORITHMS}")
        if not self.seeds:
            raise ValueError("at least one seed is required")
        if self.repeats < 1:
            raise ValueError(f"repeats must be >= 1, got {self.repeats}")

    def k_for(self, n: int) -> int:
        return self.k if self.k is not None else max(1, math.isqrt(n))

    def m0_for(self, n: int) -> int:
        m0 = max(1, math.isqrt(n)) if self.m0 == "sqrt" else int(self.m0)
        return min(m0, n)


@dataclass
class BenchRecord:
    family: str
    n: int
    m: int
    k: int
    seed: int
    algo: str
    t_sssp_s: float = 0.0
    t_reduce_s: float = 0.0
    t_search_s: float = 0.0
    t_total_s: float = 0.0
    n_reduced: int = 0
    reduction_rate: float = 0.0
    paths_found: int = 0
    # Not written to CSV.
    lengths: tuple[float, ...] = field(default=(), compare=False)
    error: Optional[str] = field(default=None, compare=False)

    def csv_row(self) -> list[str]:
        row = []
        for name in CSV_FIELDS:
            value = getattr(self, name)
            row.append(format(value, ".6g") if isinstance(value, float) else str(value))
        return row


def make_graph(family: str, n: int, m0: int, seed: int) -> Graph:
    if family == "hypercube":
        return gen_hypercube(n.bit_length() - 1, seed)
    if family == "scalefree":
        return gen_scale_free(n, m0, seed)
    raise ValueError(f"unknown family {family!r}")


def select_endpoints(g: Graph, family: str) -> tuple[int, int]:
    """Fixed query endpoints: vertex 0 and the highest id.

    On a hypercube the highest id is the bitwise complement of 0, the pair
    furthest apart by hop count.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    return 0, g.n - 1


def _time_baseline(g: Graph, k: int, s: int, t: int, algo: str):
    search: Callable[..., KspResult] = brute_force_ksp if algo == "brute" else _ENGINES[algo]
    t0 = time.perf_counter()
    res = search(g, k, s, t)
    elapsed = time.perf_counter() - t0
    return res, (0.0, 0.0, elapsed, elapsed), 0


def _time_gr(g: Graph, k: int, s: int, t: int, algo: str, store: Optional[APSPStore]):
    engine = _ENGINES[algo[len("gr-"):]]
    t0 = time.perf_counter()
    res, stats = gr(g, k, s, t, engine=engine, precomputed=store)
    total = time.perf_counter() - t0
    return res, (stats.t_sssp, stats.t_reduce, stats.t_search, total), stats.n_kept


def run_cell(
    g: Graph, family: str, k: int, seed: int, algo: str,
    repeats: int = 3, store: Optional[APSPStore] = None,
) -> BenchRecord:
    """Run one algorithm ``repeats`` times; timings are per-phase medians."""
    s, t = select_endpoints(g, family)
    record = BenchRecord(family, g.n, g.m, k, seed, algo)
    samples = []
    res = None
    n_kept = 0
    for _ in range(repeats):
        if algo.startswith("gr-"):
            res, times, n_kept = _time_gr(g, k, s, t, algo, store)
        else:
            res, times, n_kept = _time_baseline(g, k, s, t, algo)
        samples.append(times)
    assert res is not None
    record.t_sssp_s, record.t_reduce_s, record.t_search_s, record.t_total_s = (
        statistics.median(col) for col in zip(*samples)
    )
    record.n_reduced = n_kept
    record.reduction_rate = n_kept / g.n if n_kept else 0.0
    record.paths_found = len(res)
    record.lengths = res.lengths
    return record


def run_benchmark(cfg: BenchConfig) -> list[BenchRecord]:
    """Run every (size, seed, algorithm) cell of ``cfg`` sequentially.

    Cells never overlap so their timings do not compete for a core.  A cell
    that raises is recorded with its error and the run moves on.
    """
    records: list[BenchRecord] = []
    for n in cfg.sizes:
        k = cfg.k_for(n)
        for seed in cfg.seeds:
            g = make_graph(cfg.family, n, cfg.m0_for(n), seed)
            store = None
            if cfg.apsp and any(a.startswith("gr-") for a in cfg.algorithms):
                store = all_pairs_trees(g)  # built outside every timed section
            for algo in cfg.algorithms:
                try:
                    rec = run_cell(g, cfg.family, k, seed, algo, cfg.repeats, store)
                except Exception as exc:  # noqa: BLE001 - one bad cell must not stop the run
                    log.warning("cell n=%d seed=%d algo=%s failed: %s", n, seed, algo, exc)
                    rec = BenchRecord(cfg.family, g.n, g.m, k, seed, algo, error=str(exc))
                records.append(rec)
    return records


def check_agreement(records: Iterable[BenchRecord], tol: float = 1e-9) -> list[str]:
    """Cells where algorithms on the same query disagree on the path lengths."""
    groups: dict[tuple, list[BenchRecord]] = {}
    for r in records:
        if r.error is None:
            groups.setdefault((r.family, r.n, r.k, r.seed), []).append(r)
    problems = []
    for key, recs in groups.items():
        ref = recs[0]
        for r in recs[1:]:
            same = len(r.lengths) == len(ref.lengths) and all(
                abs(a - b) <= tol for a, b in zip(r.lengths, ref.lengths)
            )
            if not same:
                problems.append(f"{key}: {r.algo} disagrees with {ref.algo}")
    return problems


def _sort_key(r: BenchRecord) -> tuple:
    return (r.n, r.seed, ALGORITHMS.index(r.algo))


def write_csv(records: Iterable[BenchRecord], destination: Union[str, IO[str]]) -> None:
    """Write successful records in (size, seed, algorithm) order."""
    rows = sorted((r for r in records if r.error is None), key=_sort_key)
    if hasattr(destination, "write"):
        _write_rows(rows, destination)  # type: ignore[arg-type]
        return
    with open(destination, "w", newline="", encoding="ascii") as fh:  # type: ignore[arg-type]
        _write_rows(rows, fh)


def _write_rows(rows: Sequence[BenchRecord], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        writer.writerow(r.csv_row())


def read_csv(source: Union[str, IO[str]]) -> list[BenchRecord]:
    if not hasattr(source, "read"):
        with open(source, newline="", encoding="ascii") as fh:  # type: ignore[arg-type]
            return read_csv(fh)
    reader = csv.DictReader(source)  # type: ignore[arg-type]
    if tuple(reader.fieldnames or ()) != CSV_FIELDS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    out = []
    for row in reader:
        out.append(BenchRecord(
            family=row["family"], n=int(row["n"]), m=int(row["m"]), k=int(row["k"]),
            seed=int(row["seed"]), algo=row["algo"],
            t_sssp_s=float(row["t_sssp_s"]), t_reduce_s=float(row["t_reduce_s"]),
            t_search_s=float(row["t_search_s"]), t_total_s=float(row["t_total_s"]),
            n_reduced=int(row["n_reduced"]), reduction_rate=float(row["reduction_rate"]),
            paths_found=int(row["paths_found"]),
        ))
    return out
