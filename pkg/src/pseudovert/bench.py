"""Query-count benchmarks.

Each trial builds a random point set from its seed, finds the extreme point
(counted as setup), then runs one algorithm with a fresh count.
"""

from __future__ import annotations

import csv
import io
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields

from .arrangement import ArrangementView
from .chirotope import CountingOracle, PointSetOracle, random_points
from .hamsandwich import BiChromatic, ham_sandwich_cut, verify_cut
from .pseudovertical import select_rank

ALGORITHMS = ("hamcut", "select")
COORD = 2**28


@dataclass(frozen=True)
class BenchRecord:
    n: int
    algorithm: str
    seed: int
    queries: int
    wall_ms: float
    setup_queries: int


def sizes(min_n: int, max_n: int) -> list[int]:
    if min_n < 3 or max_n < min_n:
        raise ValueError("need 3 <= min-n <= max-n")
    out = []
    n = min_n
    while n <= max_n:
        out.append(n)
        n *= 2
    return out


def balanced_colors(n: int) -> BiChromatic:
    return BiChromatic.from_labels("r" if i % 2 else "b" for i in range(n))


def run_trial(algorithm: str, n: int, seed: int) -> BenchRecord:
    oracle = CountingOracle(PointSetOracle(random_points(n, seed, COORD)))
    view = ArrangementView(oracle)
    setup = oracle.count
    oracle.reset()
    if algorithm == "hamcut":
        colors = balanced_colors(n)
        t = time.perf_counter()
        cut = ham_sandwich_cut(oracle, colors, seed=seed, view=view)
        wall = time.perf_counter() - t
        q = oracle.count
        if not verify_cut(oracle.inner, colors, cut):
            raise RuntimeError("unverified cut in benchmark (n=%d, seed=%d)" % (n, seed))
    elif algorithm == "select":
        rng = random.Random(seed)
        p, q_ = rng.sample(range(n), 2)
        k = rng.randint(1, n)
        t = time.perf_counter()
        select_rank(view, (p, q_), range(n), k, seed=seed)
        wall = time.perf_counter() - t
        q = oracle.count
    else:
        raise ValueError("unknown algorithm %r" % algorithm)
    return BenchRecord(n, algorithm, seed, q, round(wall * 1000, 3), setup)


def _run(args):
    return run_trial(*args)


def run_bench(min_n, max_n, trials, algorithms=ALGORITHMS, seed=0, jobs=1) -> list[BenchRecord]:
    """All trials, in (algorithm, n, seed) order whatever the worker count."""
    tasks = [(a, n, seed + i) for a in algorithms for n in sizes(min_n, max_n)
             for i in range(trials)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            recs = list(ex.map(_run, tasks))
    else:
        recs = [_run(t) for t in tasks]
    return sorted(recs, key=lambda r: (r.algorithm, r.n, r.seed))


def to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f.name for f in fields(BenchRecord)])
    for r in records:
        w.writerow(astuple(r))
    return buf.getvalue()


def doubling_ratios(records, algorithm) -> dict[int, float]:
    """Median over seeds of Q(2n)/Q(n), keyed by n.  Seeds are paired."""
    by = {}
    for r in records:
        if r.algorithm == algorithm:
            by.setdefault(r.n, {})[r.seed] = r.queries
    out = {}
    for n in sorted(by):
        if 2 * n in by:
            common = sorted(set(by[n]) & set(by[2 * n]))
            if common:
                out[n] = statistics.median(by[2 * n][s] / by[n][s] for s in common)
    return out


def plot(records, path: str) -> None:
    """Median queries per line against n, one series per algorithm."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    for alg in sorted({r.algorithm for r in records}):
        ns = sorted({r.n for r in records if r.algorithm == alg})
        med = [statistics.median(r.queries / n for r in records
                                 if r.algorithm == alg and r.n == n) for n in ns]
        ax.plot(ns, med, marker="o", label=alg)
    ax.set_xscale("log", base=2)
    ax.set_xlabel("n")
    ax.set_ylabel("median queries / n")
    ax.set_ylim(bottom=0)
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
