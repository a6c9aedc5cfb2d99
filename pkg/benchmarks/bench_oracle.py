"""Benchmark the exhaustive-oracle search kernel: numba JIT vs the pure
interpreted fallback on the same inputs.

Usage:
    python3 benchmarks/bench_oracle.py [--repeat N]

The JIT path is what `exhaustive_chi_la` uses by default; the fallback is
what you get with ANTIMAGIC_NO_NUMBA=1.  Both run the identical function
body (see localantimagic._kernels), so results must agree exactly.
"""
import argparse
import time

import numpy as np

from localantimagic import book_graph
from localantimagic._kernels import USING_NUMBA, search, search_fallback
from localantimagic.oracle import _edge_order


def kernel_inputs(g):
    verts = g.vertices()
    index = {v: i for i, v in enumerate(verts)}
    order = _edge_order(g)
    eu = np.array([index[e[0]] for e in order], dtype=np.int64)
    ev = np.array([index[e[1]] for e in order], dtype=np.int64)
    n = len(verts)
    degrees = np.zeros(n, dtype=np.int64)
    adj = [[] for _ in range(n)]
    for a, b in order:
        degrees[index[a]] += 1
        degrees[index[b]] += 1
        adj[index[a]].append(index[b])
        adj[index[b]].append(index[a])
    adj_off = np.zeros(n + 1, dtype=np.int64)
    for i in range(n):
        adj_off[i + 1] = adj_off[i] + len(adj[i])
    adj_flat = np.array([w for nbrs in adj for w in nbrs] or [0], dtype=np.int64)
    return eu, ev, degrees, adj_off, adj_flat, g.q, n


CASES = [
    ("triangle (3 edges)", book_graph(1, 1)),
    ("two spokes, one hub (6 edges)", book_graph(2, 1)),
    ("one spoke, three hubs (7 edges)", book_graph(1, 3)),
    ("three spokes, one hub (9 edges)", book_graph(3, 1)),
]


def timed(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats")
    args = parser.parse_args()

    if not USING_NUMBA:
        print("warning: numba path disabled (ANTIMAGIC_NO_NUMBA set or numba "
              "missing); 'jit' column below is the fallback too")
    # compile outside the timed region
    search(*kernel_inputs(book_graph(1, 1)), True)

    header = f"{'case':34} {'jit (s)':>10} {'python (s)':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, g in CASES:
        inputs = kernel_inputs(g)
        t_jit, r_jit = timed(search, (*inputs, True), args.repeat)
        t_py, r_py = timed(search_fallback, (*inputs, True), args.repeat)
        assert r_jit[0] == r_py[0] and r_jit[2] == r_py[2] and r_jit[3] == r_py[3], (
            f"kernel paths disagree on {name}"
        )
        print(f"{name:34} {t_jit:10.4f} {t_py:12.4f} {t_py / t_jit:7.1f}x")


if __name__ == "__main__":
    main()
