"""Shared corpus builders and independent brute-force oracles.

The oracles here deliberately avoid the library's own search paths: they
enumerate subsets directly so that clique, independence, and polytope
results can be tied out against a second computation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from exlab import Graph, named_graph


def brute_force_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """Every independent set, by direct subset enumeration."""
    out = []
    for mask in range(1 << g.n):
        members = [v for v in range(g.n) if (mask >> v) & 1]
        if all(not g.has_edge(i, j) for i, j in combinations(members, 2)):
            out.append(tuple(members))
    return out


def brute_force_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    cliques = []
    for mask in range(1 << g.n):
        members = [v for v in range(g.n) if (mask >> v) & 1]
        if members and all(g.has_edge(i, j) for i, j in combinations(members, 2)):
            cliques.append(set(members))
    maximal = [c for c in cliques if not any(c < other for other in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)


def brute_force_alpha(g: Graph, weights) -> Fraction:
    """Max weight over independent sets, via adjacency-mask subset scan."""
    w = [Fraction(x) for x in weights]
    best = Fraction(0)
    adj = g.adjacency
    for mask in range(1 << g.n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if adj[v] & mask:
                ok = False
                break
            m ^= low
        if ok:
            total = sum((w[v] for v in range(g.n) if (mask >> v) & 1), Fraction(0))
            best = max(best, total)
    return best


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_bipartite(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    side = rng.integers(0, 2, size=n)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if side[i] != side[j] and rng.random() < p]
    return Graph.from_edges(n, edges)


def random_chordal(rng: np.random.Generator, n: int) -> Graph:
    """Random interval graph (interval graphs are chordal)."""
    points = rng.random((n, 2))
    intervals = [(min(a, b), max(a, b)) for a, b in points]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if intervals[i][0] <= intervals[j][1] and intervals[j][0] <= intervals[i][1]]
    return Graph.from_edges(n, edges)


def random_rational_weights(rng: np.random.Generator, n: int,
                            denominator: int = 16) -> list[Fraction]:
    return [Fraction(int(rng.integers(0, 4 * denominator + 1)), denominator)
            for _ in range(n)]


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    names = ["K1", "K2", "K3", "K4", "C3", "C4", "C5", "C6", "C7",
             "path2", "path3", "path4", "path5", "empty1", "empty3", "empty5",
             "petersen"]
    return [named_graph(name) for name in names]
