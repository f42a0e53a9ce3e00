"""Exact clique / independent-set machinery.

Weights are exact rationals throughout: the independence number feeds exact
polytope comparisons downstream, so no floating tolerances are allowed in.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PreconditionError, ResourceLimitError
from .graphs import Graph, _iter_bits, complement

VERTEX_CAP = 40
CLIQUE_ENUMERATION_CAP = 1_000_000

VertexSet = tuple[int, ...]


def as_weights(w: Sequence, n: int) -> tuple[Fraction, ...]:
    """Read a weight vector into exact rationals (floats read bit-exactly)."""
    if len(w) != n:
        raise PreconditionError(f"weight vector has length {len(w)}, expected {n}")
    out = tuple(Fraction(x) for x in w)
    if any(x < 0 for x in out):
        raise PreconditionError("weights must be nonnegative")
    return out


def _check_vertex_set(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    members = tuple(s)
    for v in members:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} out of range 0..{g.n - 1}")
    if len(set(members)) != len(members):
        raise PreconditionError("vertex set contains duplicates")
    return members


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    members = _check_vertex_set(g, s)
    return all(g.has_edge(i, j) for k, i in enumerate(members) for j in members[k + 1:])


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    members = _check_vertex_set(g, s)
    return not any(g.has_edge(i, j) for k, i in enumerate(members) for j in members[k + 1:])


def maximal_cliques(g: Graph) -> list[VertexSet]:
    """All inclusion-maximal cliques, in lexicographic order of sorted members.

    Pivoting branch enumeration over vertex bitmasks; raises once more than
    10^6 cliques have been produced.
    """
    if g.n > VERTEX_CAP:
        raise ResourceLimitError(f"clique enumeration capped at {VERTEX_CAP} vertices")
    adj = g.adjacency
    out: list[VertexSet] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(_iter_bits(r)))
            if len(out) > CLIQUE_ENUMERATION_CAP:
                raise ResourceLimitError(
                    f"more than {CLIQUE_ENUMERATION_CAP} maximal cliques")
            return
        # pivot on the candidate covering most of p
        pivot, best = -1, -1
        for u in _iter_bits(p | x):
            cover = (p & adj[u]).bit_count()
            if cover > best:
                pivot, best = u, cover
        rest = p & ~adj[pivot]
        for v in _iter_bits(rest):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << g.n) - 1, 0)
    out.sort()
    return out


def maximal_independent_sets(g: Graph) -> list[VertexSet]:
    """Maximal independent sets = maximal cliques of the complement."""
    return maximal_cliques(complement(g))


def independence_number(g: Graph, weights: Sequence) -> tuple[Fraction, VertexSet]:
    """Exact weighted independence number with an attaining witness.

    Branch and bound: vertices are branched in descending-degree order (ties
    by lowest index), and subtrees are pruned with a greedy clique-cover
    bound.  The first optimum found in that order is the witness, so results
    are reproducible.
    """
    if g.n > VERTEX_CAP:
        raise ResourceLimitError(f"independence number capped at {VERTEX_CAP} vertices")
    w = as_weights(weights, g.n)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    adj = g.adjacency

    def cover_bound(cands: list[int]) -> Fraction:
        # candidates partitioned greedily into cliques; each clique
        # contributes at most its heaviest vertex
        cliques: list[tuple[int, Fraction]] = []  # (member mask, max weight)
        for v in cands:
            bit = 1 << v
            for idx, (mask, mx) in enumerate(cliques):
                if mask & ~adj[v] == 0:
                    cliques[idx] = (mask | bit, max(mx, w[v]))
                    break
            else:
                cliques.append((bit, w[v]))
        return sum((mx for _, mx in cliques), Fraction(0))

    best_value = Fraction(0)
    best_set: tuple[int, ...] = ()

    def expand(cands: list[int], chosen: list[int], value: Fraction) -> None:
        nonlocal best_value, best_set
        if value > best_value:
            best_value = value
            best_set = tuple(sorted(chosen))
        if not cands or value + cover_bound(cands) <= best_value:
            return
        v, rest = cands[0], cands[1:]
        chosen.append(v)
        expand([u for u in rest if not (adj[v] >> u) & 1], chosen, value + w[v])
        chosen.pop()
        expand(rest, chosen, value)

    expand(order, [], Fraction(0))
    return best_value, best_set
