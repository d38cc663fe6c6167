"""Enumeration of every small graph: up to ``max_vertices`` vertices and up
to ``max_parallel`` edges for each ordered pair (loops included)."""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .graph import Graph


def small_graphs(max_vertices: int = 3, max_parallel: int = 2) -> Iterator[Graph]:
    for n in range(1, max_vertices + 1):
        vs = [f"v{i}" for i in range(n)]
        pairs = [(a, b) for a in range(n) for b in range(n)]
        for mult in product(range(max_parallel + 1), repeat=len(pairs)):
            edges = []
            for (a, b), k in zip(pairs, mult):
                for j in range(k):
                    edges.append((f"e{a}{b}_{j}", vs[a], vs[b]))
            code = "".join(map(str, mult))
            yield Graph.from_edges(vs, edges, f"n{n}-{code}")


def corpus_size(max_vertices: int = 3, max_parallel: int = 2) -> int:
    return sum((max_parallel + 1) ** (n * n) for n in range(1, max_vertices + 1))
