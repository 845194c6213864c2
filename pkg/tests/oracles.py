"""Brute-force reference implementations, deliberately naive.

Nothing here imports the search engine; each routine follows a definition
directly so it can serve as an independent check.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from ordsat.graphcore import CyclicGraph, OrderedGraph


def naive_contains_ordered(host, pattern) -> bool:
    k, n = pattern.n, host.n
    hedges = host.edge_set
    for image in combinations(range(1, n + 1), k):
        if all((image[u - 1], image[v - 1]) in hedges for u, v in pattern.edges):
            return True
    return False


def naive_contains_cyclic(host, pattern) -> bool:
    k, n = pattern.n, host.n
    hedges = host.edge_set
    for image in combinations(range(1, n + 1), k):
        for r in range(k):
            phi = image[r:] + image[:r]
            if all(
                (min(phi[u - 1], phi[v - 1]), max(phi[u - 1], phi[v - 1])) in hedges
                for u, v in pattern.edges
            ):
                return True
    return False


def naive_interval_chromatic(graph) -> int:
    n = graph.n
    best = n
    for cuts in product((0, 1), repeat=n - 1):
        # cut after vertex i+1 when cuts[i]
        block = [0] * (n + 1)
        b = 0
        for v in range(1, n + 1):
            block[v] = b
            if v < n and cuts[v - 1]:
                b += 1
        if all(block[u] != block[v] for u, v in graph.edges):
            best = min(best, b + 1)
    return best


def naive_separable(graph) -> bool:
    edges = graph.edges
    for mask in range(1, 2 ** len(edges) - 1):
        g1 = [e for i, e in enumerate(edges) if mask >> i & 1]
        g2 = [e for i, e in enumerate(edges) if not mask >> i & 1]
        if all(v1 < u2 for _, v1 in g1 for u2, _ in g2):
            return True
    return False


def naive_nested(graph) -> bool:
    edges = graph.edges
    for mask in range(1, 2 ** len(edges) - 1):
        g1 = [e for i, e in enumerate(edges) if mask >> i & 1]
        g2 = [e for i, e in enumerate(edges) if not mask >> i & 1]
        if all(u1 < u2 and v2 < v1 for u1, v1 in g1 for u2, v2 in g2):
            return True
    return False


def naive_saturating(host, pattern, contains) -> bool:
    if contains(host, pattern):
        return False
    return all(contains(host.with_edge(u, v), pattern) for u, v in host.non_edges())


def random_graph(rng: random.Random, n: int, p: float, cls=OrderedGraph):
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return cls(n, edges)


def random_cyclic(rng: random.Random, n: int, p: float) -> CyclicGraph:
    return random_graph(rng, n, p, CyclicGraph)
