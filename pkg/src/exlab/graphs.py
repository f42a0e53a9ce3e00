"""Exclusivity-graph data model: construction, parsing, products, isomorphism.

Vertices are dense 0-based indices shared by every other module, so
behaviors and weight vectors are plain arrays indexed the same way.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .errors import ParseError, ResourceLimitError

GRAPH6_MAX_VERTICES = 62
PRODUCT_MAX_VERTICES = 4096
ISOMORPHISM_MAX_VERTICES = 12
ENUMERATION_MAX_VERTICES = 6


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph stored as one adjacency bitmask per vertex.

    Instances are immutable after construction and safe to share between
    threads; every operation in this module is a pure function.
    """

    adjacency: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.adjacency)
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        full = (1 << n) - 1
        for i, row in enumerate(self.adjacency):
            if row & ~full:
                raise ValueError(f"adjacency bits out of range for vertex {i}")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in _iter_bits(row):
                if not (self.adjacency[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric on pair ({i}, {j})")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels length must equal vertex count")

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adjacency[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def neighbors(self, i: int) -> list[int]:
        return list(_iter_bits(self.adjacency[i]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _iter_bits(self.adjacency[i]) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.n)) // 2

    @staticmethod
    def from_edges(n: int, edges, labels: tuple[str, ...] | None = None) -> "Graph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for {n} vertices")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return Graph(tuple(rows), labels)


@dataclass(frozen=True)
class ProductIndexMap:
    """Bijection between factor vertex pairs and product-graph indices."""

    left_count: int
    right_count: int

    def index(self, i: int, j: int) -> int:
        if not (0 <= i < self.left_count and 0 <= j < self.right_count):
            raise ValueError(f"pair ({i}, {j}) out of range")
        return i * self.right_count + j

    def pair(self, k: int) -> tuple[int, int]:
        if not 0 <= k < self.left_count * self.right_count:
            raise ValueError(f"product index {k} out of range")
        return divmod(k, self.right_count)


def parse_edge_list(text: str) -> Graph:
    """Parse the line-oriented edge-list format.

    First non-comment line is the vertex count; each following line holds two
    distinct 0-based vertex indices.  ``#`` starts a comment; duplicate edges
    are idempotent.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise ParseError(f"line {lineno}: expected a vertex count, got {line!r}")
            n = int(fields[0])
            if n < 1:
                raise ParseError(f"line {lineno}: vertex count must be at least 1")
            continue
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected two vertex indices, got {line!r}")
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex index in {line!r}") from None
        if i == j:
            raise ParseError(f"line {lineno}: self-loop on vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"line {lineno}: vertex index out of range 0..{n - 1}")
        edges.append((i, j))
    if n is None:
        raise ParseError("empty edge-list input")
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format accepted by :func:`parse_edge_list`."""
    lines = [str(g.n)]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines)


_GRAPH6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (n <= 62, optional format header)."""
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):].strip()
    if not s:
        raise ParseError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 0x3F <= ord(ch) <= 0x7E:
            raise ParseError(f"invalid graph6 character {ch!r} at position {pos}")
    n = ord(s[0]) - 63
    if n == 63:
        raise ParseError("long-form graph6 (n > 62) is not supported")
    if n == 0:
        raise ParseError("graph6 string encodes zero vertices")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(s) - 1 < nchars:
        raise ParseError(f"truncated graph6 bit-vector: need {nchars} data characters, got {len(s) - 1}")
    if len(s) - 1 > nchars:
        raise ParseError(f"trailing data after graph6 bit-vector ({len(s) - 1 - nchars} extra characters)")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode as short-form graph6 (6-bit big-endian upper-triangle, offset 63)."""
    if g.n > GRAPH6_MAX_VERTICES:
        raise ParseError(f"graph6 short form supports at most {GRAPH6_MAX_VERTICES} vertices")
    bits: list[int] = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def complement(g: Graph) -> Graph:
    """Complement graph: edge present exactly when absent in ``g``."""
    full = (1 << g.n) - 1
    rows = tuple((full ^ g.adjacency[i]) & ~(1 << i) for i in range(g.n))
    return Graph(rows)


def disjunctive_product(g: Graph, h: Graph) -> tuple[Graph, ProductIndexMap]:
    """Disjunctive product: (i, j) ~ (k, l) iff i ~ k in ``g`` or j ~ l in ``h``."""
    n = g.n * h.n
    if n > PRODUCT_MAX_VERTICES:
        raise ResourceLimitError(
            f"product would have {n} vertices (cap {PRODUCT_MAX_VERTICES})")
    block = (1 << h.n) - 1
    # cover_g[i]: all pairs (k, *) with i ~ k; rep_h[j]: all pairs (*, l) with j ~ l
    cover_g = []
    for i in range(g.n):
        mask = 0
        for k in _iter_bits(g.adjacency[i]):
            mask |= block << (k * h.n)
        cover_g.append(mask)
    rep_h = []
    for j in range(h.n):
        mask = 0
        row = h.adjacency[j]
        for k in range(g.n):
            mask |= row << (k * h.n)
        rep_h.append(mask)
    rows = tuple(cover_g[i] | rep_h[j] for i in range(g.n) for j in range(h.n))
    return Graph(rows), ProductIndexMap(g.n, h.n)


def _neighbor_degree_key(g: Graph, i: int) -> tuple[int, ...]:
    return tuple(sorted(g.degree(j) for j in g.neighbors(i)))


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Return a vertex bijection mapping ``g`` onto ``h``, or None.

    Backtracking with degree and neighborhood-degree pruning; inputs above
    12 vertices are rejected.
    """
    if max(g.n, h.n) > ISOMORPHISM_MAX_VERTICES:
        raise ResourceLimitError(
            f"isomorphism search capped at {ISOMORPHISM_MAX_VERTICES} vertices")
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    n = g.n
    if sorted(g.degree(i) for i in range(n)) != sorted(h.degree(i) for i in range(n)):
        return None
    keys_h = [( h.degree(v), _neighbor_degree_key(h, v)) for v in range(n)]
    candidates = []
    for u in range(n):
        key = (g.degree(u), _neighbor_degree_key(g, u))
        candidates.append([v for v in range(n) if keys_h[v] == key])
        if not candidates[u]:
            return None
    order = sorted(range(n), key=lambda u: (len(candidates[u]), u))
    mapping = [-1] * n
    used = [False] * n

    def assign(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for v in candidates[u]:
            if used[v]:
                continue
            ok = True
            for w in order[:pos]:
                if g.has_edge(u, w) != h.has_edge(v, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                if assign(pos + 1):
                    return True
                used[v] = False
                mapping[u] = -1
        return False

    return tuple(mapping) if assign(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def is_self_complementary(g: Graph) -> bool:
    return is_isomorphic(g, complement(g))


_NAME_RE = re.compile(r"^(c|k|empty|path)_?(\d+)$")


def named_graph(name: str) -> Graph:
    """Build a catalog graph: C_n (n >= 3), K_n, empty_n, path_n, or petersen."""
    key = name.strip().lower()
    if key == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + spokes + inner)
    m = _NAME_RE.match(key)
    if m is None:
        raise ParseError(f"unknown catalog graph {name!r}")
    family, num = m.group(1), int(m.group(2))
    if family == "c":
        if num < 3:
            raise ParseError(f"cycle needs at least 3 vertices, got {name!r}")
        return Graph.from_edges(num, [(i, (i + 1) % num) for i in range(num)])
    if num < 1:
        raise ParseError(f"{name!r} needs at least 1 vertex")
    if family == "k":
        return Graph.from_edges(num, combinations(range(num), 2))
    if family == "empty":
        return Graph.from_edges(num, [])
    return Graph.from_edges(num, [(i, i + 1) for i in range(num - 1)])


def enumerate_graphs(n: int) -> list[Graph]:
    """All graphs on exactly ``n`` vertices, one per isomorphism class.

    Deduplication is by degree-sequence bucketing plus exact isomorphism
    checks, so the cap stays small (n <= 6).
    """
    if not 1 <= n <= ENUMERATION_MAX_VERTICES:
        raise ResourceLimitError(
            f"exhaustive enumeration capped at {ENUMERATION_MAX_VERTICES} vertices")
    pairs = list(combinations(range(n), 2))
    buckets: dict[tuple, list[Graph]] = {}
    out: list[Graph] = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in _iter_bits(mask)]
        g = Graph.from_edges(n, edges)
        key = (g.edge_count, tuple(sorted(g.degree(i) for i in range(n))))
        bucket = buckets.setdefault(key, [])
        if not any(is_isomorphic(g, other) for other in bucket):
            bucket.append(g)
            out.append(g)
    return out
