"""Shared seeded generators. No fixtures with state; tests build what they need."""

import random

from kneserturan import Hypergraph


def random_hypergraph(rng: random.Random, max_vertices: int = 6, max_edges: int = 5,
                      min_edge_size: int = 1) -> Hypergraph:
    n = rng.randint(2, max_vertices)
    m = rng.randint(1, max_edges)
    edges = []
    for _ in range(m):
        size = rng.randint(min(min_edge_size, n), n)
        edges.append(frozenset(rng.sample(range(n), size)))
    return Hypergraph(n, tuple(edges))


def random_graph(rng: random.Random, n: int, p: float) -> Hypergraph:
    edges = [
        frozenset({u, v})
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    if not edges:
        edges.append(frozenset({0, 1}))
    return Hypergraph(n, tuple(edges))
