"""Benchmark the compiled kernel against the pure-Python fallback.

Times the hot operations on fixed workloads and prints per-call costs and
speedups.  Run from the repository root:

    python benchmarks/compare_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

from linkatlas import _pykernel

try:
    from linkatlas import _ckernel
except ImportError:
    _ckernel = None


def random_graphs(count: int, n: int, seed: int = 1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.35:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        out.append(tuple(adj))
    return out


def timed(fn, *args) -> float:
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def bench_canon(kernel, graphs, n):
    for adj in graphs:
        kernel.canon_graph_key(n, adj)


def bench_game_canon(kernel, graphs, n):
    for adj in graphs:
        kernel.canon_game_key(n, adj, 0, 1)


def bench_solve(kernel, graphs, n):
    memo = {}
    for adj in graphs:
        kernel.solve_outcome(n, adj, 0, 1, memo)


def bench_orbits(kernel, graphs, n):
    for adj in graphs:
        kernel.pair_orbit_count(n, adj)


def bench_augment(kernel, graphs, n):
    for adj in graphs:
        kernel.augment_connected_keys(n, adj)


def bench_enumerate(kernel, _graphs, n):
    level = [kernel.canon_graph_key(1, (0,))]
    for m in range(2, n + 1):
        children = set()
        for key in level:
            gn, adj = kernel.key_to_graph(key)
            children |= kernel.augment_connected_keys(gn, adj)
        level = sorted(children)


BENCHES = [
    # (label, function, graph count, graph size, per-op count)
    ("canon graph n=9", bench_canon, 2000, 9, 2000),
    ("canon game n=9", bench_game_canon, 2000, 9, 2000),
    ("solve n=8 (shared memo)", bench_solve, 300, 8, 300),
    ("terminal orbits n=9", bench_orbits, 200, 9, 200),
    ("augment n=8->9", bench_augment, 30, 8, 30 * 255),
    ("enumerate connected n<=7", bench_enumerate, 1, 7, 1),
]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="quarter-size workloads")
    args = parser.parse_args()

    print(f"{'workload':<28} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for label, fn, count, n, ops in BENCHES:
        if args.quick:
            count = max(1, count // 4)
            ops = max(1, ops // 4)
        graphs = random_graphs(count, n)
        pure_t = timed(fn, _pykernel, graphs, n)
        if _ckernel is None:
            print(f"{label:<28} {pure_t / ops * 1e6:>10.1f}us {'n/a':>12}")
            continue
        comp_t = timed(fn, _ckernel, graphs, n)
        print(
            f"{label:<28} {pure_t / ops * 1e6:>10.1f}us "
            f"{comp_t / ops * 1e6:>10.1f}us {pure_t / comp_t:>8.1f}x"
        )
    if _ckernel is None:
        print("compiled kernel not built; showing pure timings only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
