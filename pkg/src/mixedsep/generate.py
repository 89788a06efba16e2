"""Seeded random mixed graphs.

Generator: CPython's ``random.Random`` (Mersenne Twister MT19937), seeded
with an integer.  Only ``Random.random()`` and ``Random.randint()`` are used,
whose output sequences CPython keeps stable across releases.  Draws happen in
a fixed order: one draw per ordered pair (i, j), i != j, row-major, deciding
``vi -> vj``; then one draw per unordered pair i < j deciding ``vi <-> vj``.
"""
from __future__ import annotations

import random

from .graph import Edge, MixedGraph


def vertex_names(n: int) -> list:
    width = len(str(max(n - 1, 0)))
    return [f"v{i:0{width}d}" for i in range(n)]


def random_graph(n: int, p_dir: float, p_bi: float, rng: random.Random) -> MixedGraph:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not (0.0 <= p_dir <= 1.0 and 0.0 <= p_bi <= 1.0):
        raise ValueError("probabilities must lie in [0, 1]")
    names = vertex_names(n)
    edges = []
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < p_dir:
                edges.append(Edge.directed(names[i], names[j]))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p_bi:
                edges.append(Edge.bidirected(names[i], names[j]))
    return MixedGraph(names, edges)


def random_graphs(count: int, n: int, p_dir: float, p_bi: float, seed: int) -> list:
    rng = random.Random(seed)
    return [random_graph(n, p_dir, p_bi, rng) for _ in range(count)]


def small_corpus(count: int = 300, seed: int = 0, max_vertices: int = 5, max_edges: int = 10,
                 p_dir: float = 0.3, p_bi: float = 0.2) -> list:
    """Graphs on 2..max_vertices vertices with at most ``max_edges`` edges.

    Draws exceeding the edge bound are discarded and redrawn.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_vertices)
        g = random_graph(n, p_dir, p_bi, rng)
        if len(g.edges) <= max_edges:
            out.append(g)
    return out
