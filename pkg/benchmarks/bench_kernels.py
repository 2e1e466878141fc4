"""Time the compiled search kernels against the pure-Python fallback.

Runs the same seeded instances through both backends, asserts the results
are identical, and prints one timing row per kernel. The compiled backend
is required here; use the test suite (KNESERTURAN_PURE=1) to exercise the
fallback on its own.

Usage: python3 benchmarks/bench_kernels.py [--seed N] [--scale N]
"""

import argparse
import random
import time

from kneserturan.kernels import _pure

try:
    from kneserturan.kernels import _core
except ImportError:
    _core = None


def random_adj(rng, n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def random_edge_masks(rng, n, m, lo, hi):
    masks = []
    for _ in range(m):
        mask = 0
        for v in rng.sample(range(n), rng.randint(lo, hi)):
            mask |= 1 << v
        masks.append(mask)
    return masks


def kneser_adj(n, k):
    """Adjacency masks of the Kneser graph on k-subsets of range(n)."""
    from itertools import combinations

    subsets = [frozenset(c) for c in combinations(range(n), k)]
    adj = [0] * len(subsets)
    for i, a in enumerate(subsets):
        for j in range(i + 1, len(subsets)):
            if not (a & subsets[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def bench_mis(rng, scale):
    cases = [(40, random_edge_masks(rng, 40, 110, 2, 4)) for _ in range(3 * scale)]
    pure = comp = 0.0
    for n, masks in cases:
        a, dt = timed(_pure.max_independent_set, n, masks)
        pure += dt
        b, dt = timed(_core.max_independent_set, n, list(masks))
        comp += dt
        assert a == b, (a, b)
    return "max_independent_set", pure, comp


def bench_graph_color(rng, scale):
    # single decisions close fast under unit propagation, so this measures
    # batch throughput at both sides of the tight threshold
    pure = comp = 0.0
    for _ in range(150 * scale):
        n = 28
        adj = random_adj(rng, n, 0.5)
        chi = 1
        while not _core.graph_color_decision(n, list(adj), chi, []):
            chi += 1
        for k in (chi - 1, chi):
            a, dt = timed(_pure.graph_color_decision, n, adj, k, ())
            pure += dt
            b, dt = timed(_core.graph_color_decision, n, list(adj), k, [])
            comp += dt
            assert a == b, (k, a, b)
    return "graph_color_decision", pure, comp


def bench_hypergraph_color(rng, scale):
    cases = [(30, random_edge_masks(rng, 30, 72, 3, 3)) for _ in range(200 * scale)]
    pure = comp = 0.0
    for n, masks in cases:
        a, dt = timed(_pure.hypergraph_color_decision, n, masks, 2)
        pure += dt
        b, dt = timed(_core.hypergraph_color_decision, n, list(masks), 2)
        comp += dt
        assert a == b, (a, b)
    return "hypergraph_color_decision", pure, comp


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--scale", type=int, default=1,
                        help="multiply the instance count (default 1)")
    args = parser.parse_args()

    if _core is None:
        raise SystemExit("compiled backend is not built; nothing to compare")

    rng = random.Random(args.seed)
    print(f"{'kernel':<28} {'pure':>9} {'compiled':>9} {'speedup':>8}")
    for bench in (bench_mis, bench_graph_color, bench_hypergraph_color):
        name, pure, comp = bench(rng, args.scale)
        ratio = pure / comp if comp > 0 else float("inf")
        print(f"{name:<28} {pure:>8.3f}s {comp:>8.3f}s {ratio:>7.1f}x")
    print("results identical across backends on every instance")


if __name__ == "__main__":
    main()
