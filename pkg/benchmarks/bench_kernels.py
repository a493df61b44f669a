"""Compare the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 1]

Each row is a kernel call on a fixed graph; timings are the best of
``--repeat`` runs. Both backends must return identical results. The
G(2,5) refutation takes about 40 s on the pure-Python backend.
"""
from __future__ import annotations

import argparse
import time

from bicayley.constructions import P2Q2Context
from bicayley.graph import random_graph
from bicayley.kernels import backends


def _nbrs(g):
    return [list(r) for r in g.neighbors]


def workloads():
    ctx23, ctx25, ctx35 = P2Q2Context(2, 3), P2Q2Context(2, 5), P2Q2Context(3, 5)
    comp23 = _nbrs(ctx23.graph.complement())
    g23 = _nbrs(ctx23.graph)
    g25 = _nbrs(ctx25.graph)
    g35 = _nbrs(ctx35.graph)
    rnd = _nbrs(random_graph(150, 0.5, 1))
    sparse = _nbrs(random_graph(1500, 0.002, 2))
    clique25 = [100, 104, 108, 112, 116]
    # a triangle to pin the first colours of the 3-colouring refutation
    tri = [0, 12, 24]
    return [
        ("alpha of G(2,3) as clique of complement", "max_clique", (comp23,)),
        ("3-colouring refutation on G(2,3)", "k_color", (g23, 3, tri)),
        ("clique on G(n=150, p=0.5)", "max_clique", (rnd,)),
        ("all-pairs BFS on G(2,5)", "all_pairs", (g25,)),
        ("girth of G(3,5)", "girth", (g35,)),
        ("girth of sparse G(n=1500, p=0.002)", "girth", (sparse,)),
        ("5-colouring refutation on G(2,5)", "k_color", (g25, 5, clique25)),
    ]


def run(repeat: int = 1):
    impls = backends()
    rows = []
    for label, kernel, args in workloads():
        times, results = {}, {}
        for name, mod in impls.items():
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                results[name] = getattr(mod, kernel)(*args)
                best = min(best, time.perf_counter() - t0)
            times[name] = best
        if len(set(map(repr, results.values()))) != 1:
            raise SystemExit(f"backends disagree on {label}")
        rows.append((label, times))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args(argv)
    rows = run(args.repeat)
    names = sorted({n for _, t in rows for n in t})
    print(f"{'workload':<44}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, times in rows:
        cells = "".join(f"{times[n] * 1000:>10.2f}ms" for n in names)
        speed = f"{times['python'] / times['cython']:>9.1f}x" if "cython" in times else f"{'-':>10}"
        print(f"{label:<44}{cells}{speed}")


if __name__ == "__main__":
    main()
