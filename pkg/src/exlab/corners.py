"""Convex corners and the anti-blocking duality engine.

A convex corner is a nonempty, closed, convex, down-closed set of nonnegative
vectors.  Corners are carried either as generators (V-representation: the
down-closed convex hull of the listed vectors and 0) or as unit-RHS normals
(H-representation: all nonnegative x with normal . x <= 1).  The anti-blocker
of a corner swaps the two representations, which is what makes exact duality
checks possible without any vertex/facet enumeration machinery on the main
paths.

All comparisons run in exact rational arithmetic; float inputs are read
bit-exactly into Fractions on entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .cliques import maximal_cliques, maximal_independent_sets
from .errors import ParseError, PreconditionError, ResourceLimitError
from .graphs import Graph
from .lp import LpProblem, solve_lp

VERTEX_ENUMERATION_CAP = 200_000

RationalVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Behavior:
    """Per-event probability assignment; entries are clamped into [0, 1]."""

    probabilities: tuple[float, ...]

    def __post_init__(self) -> None:
        cleaned = []
        for i, p in enumerate(self.probabilities):
            p = float(p)
            if p < -1e-9 or p > 1 + 1e-9:
                raise PreconditionError(f"probability {p} at index {i} outside [0, 1]")
            cleaned.append(min(max(p, 0.0), 1.0))
        object.__setattr__(self, "probabilities", tuple(cleaned))

    def __len__(self) -> int:
        return len(self.probabilities)

    def __iter__(self):
        return iter(self.probabilities)

    def __getitem__(self, i: int) -> float:
        return self.probabilities[i]

    def as_fractions(self) -> RationalVector:
        """Exact binary reading of the stored floats."""
        return tuple(Fraction(p) for p in self.probabilities)


def _as_rational_vector(values: Sequence, dimension: int) -> RationalVector:
    if isinstance(values, Behavior):
        values = values.probabilities
    if len(values) != dimension:
        raise PreconditionError(f"vector has length {len(values)}, expected {dimension}")
    out = tuple(Fraction(v) for v in values)
    if any(v < 0 for v in out):
        raise PreconditionError("vector entries must be nonnegative")
    return out


@dataclass(frozen=True)
class ConvexCorner:
    dimension: int
    kind: str  # "V" (generators) or "H" (unit-RHS normals)
    vectors: tuple[RationalVector, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("V", "H"):
            raise ValueError(f"representation kind must be 'V' or 'H', got {self.kind!r}")
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        for vec in self.vectors:
            if len(vec) != self.dimension:
                raise ValueError("vector length does not match corner dimension")
            if any(x < 0 for x in vec):
                raise ValueError("corner vectors must be nonnegative")


def vrep(vectors: Iterable[Sequence], dimension: int) -> ConvexCorner:
    vecs = tuple(_as_rational_vector(v, dimension) for v in vectors)
    return ConvexCorner(dimension, "V", vecs)


def hrep(vectors: Iterable[Sequence], dimension: int) -> ConvexCorner:
    vecs = tuple(_as_rational_vector(v, dimension) for v in vectors)
    return ConvexCorner(dimension, "H", vecs)


def _indicators(sets: Iterable[tuple[int, ...]], n: int) -> tuple[RationalVector, ...]:
    out = []
    for members in sets:
        vec = [Fraction(0)] * n
        for v in members:
            vec[v] = Fraction(1)
        out.append(tuple(vec))
    return tuple(out)


def stab(g: Graph) -> ConvexCorner:
    """Classical (noncontextual) set: hull of deterministic behaviors.

    Generators are the indicator vectors of the maximal independent sets;
    all other deterministic behaviors lie in their down-closure.
    """
    return ConvexCorner(g.n, "V", _indicators(maximal_independent_sets(g), g.n))


def qstab(g: Graph) -> ConvexCorner:
    """Single-copy exclusivity set: total probability at most 1 on every clique."""
    return ConvexCorner(g.n, "H", _indicators(maximal_cliques(g), g.n))


def antiblocker(c: ConvexCorner) -> ConvexCorner:
    """Anti-blocking corner {b >= 0 : b . a <= 1 for all a in c}.

    For corners this is exactly a representation swap: generators become
    normals and vice versa.
    """
    return ConvexCorner(c.dimension, "H" if c.kind == "V" else "V", c.vectors)


@dataclass(frozen=True)
class MembershipResult:
    inside: bool
    # when outside: h >= 0 with h . p > 1 but h . x <= 1 on the whole corner
    certificate: RationalVector | None = None

    def __bool__(self) -> bool:
        return self.inside


def _uncovered_coordinates(c: ConvexCorner) -> list[int]:
    covered = [False] * c.dimension
    for vec in c.vectors:
        for i, x in enumerate(vec):
            if x > 0:
                covered[i] = True
    return [i for i, cov in enumerate(covered) if not cov]


def membership(c: ConvexCorner, p: Sequence) -> MembershipResult:
    """Exact membership of a nonnegative vector, with a separating certificate.

    H-representation checks every normal directly.  V-representation solves
    the support LP of the anti-blocker: p belongs to the corner exactly when
    max { h . p : h >= 0, h . g <= 1 for all generators g } is at most 1, and
    the optimizer is the separating certificate otherwise.
    """
    x = _as_rational_vector(p, c.dimension)
    if c.kind == "H":
        for normal in c.vectors:
            if sum(a * b for a, b in zip(normal, x)) > 1:
                return MembershipResult(False, normal)
        return MembershipResult(True)
    for i in _uncovered_coordinates(c):
        if x[i] > 0:
            cert = [Fraction(0)] * c.dimension
            cert[i] = 2 / x[i]
            return MembershipResult(False, tuple(cert))
    problem = LpProblem(x, c.vectors, tuple([Fraction(1)] * len(c.vectors)))
    sol = solve_lp(problem)
    if sol.status != "optimal":  # pre-check rules out unboundedness
        raise PreconditionError(f"membership LP ended with status {sol.status}")
    if sol.value <= 1:
        return MembershipResult(True)
    return MembershipResult(False, sol.primal)


def _support_hrep(c: ConvexCorner, w: RationalVector) -> tuple[Fraction | None, RationalVector]:
    """Support value and attaining point; value None means unbounded."""
    for i in _uncovered_coordinates(c):
        if w[i] > 0:
            ray = [Fraction(0)] * c.dimension
            ray[i] = Fraction(1)
            return None, tuple(ray)
    problem = LpProblem(w, c.vectors, tuple([Fraction(1)] * len(c.vectors)))
    sol = solve_lp(problem)
    if sol.status != "optimal":
        raise PreconditionError(f"support LP ended with status {sol.status}")
    return sol.value, sol.primal


def support(c: ConvexCorner, w: Sequence) -> Fraction:
    """Exact support value max { w . x : x in corner } for nonnegative w."""
    direction = _as_rational_vector(w, c.dimension)
    if c.kind == "V":
        best = Fraction(0)
        for g in c.vectors:
            best = max(best, sum(a * b for a, b in zip(direction, g)))
        return best
    value, _ = _support_hrep(c, direction)
    if value is None:
        raise PreconditionError("support is unbounded on this corner")
    return value


def _solve_square(rows: list[RationalVector], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact Gaussian elimination; None when the system is singular."""
    d = len(rhs)
    a = [list(rows[i]) + [rhs[i]] for i in range(d)]
    for col in range(d):
        pivot = next((r for r in range(col, d) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(d):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][d] for r in range(d)]


def hrep_vertices(c: ConvexCorner) -> list[RationalVector]:
    """Exact vertex enumeration of an H-representation corner (small scale).

    Enumerates basic feasible solutions over all choices of dim active
    constraints from the normals plus the nonnegativity facets.  Guarded by
    a combination cap; intended for corpus-sized corners only.
    """
    if c.kind != "H":
        raise PreconditionError("vertex enumeration expects an H-representation corner")
    d = c.dimension
    rows: list[RationalVector] = list(c.vectors)
    rhs: list[Fraction] = [Fraction(1)] * len(c.vectors)
    for i in range(d):
        axis = [Fraction(0)] * d
        axis[i] = Fraction(1)
        rows.append(tuple(axis))
        rhs.append(Fraction(0))
    if comb(len(rows), d) > VERTEX_ENUMERATION_CAP:
        raise ResourceLimitError(
            f"vertex enumeration needs {comb(len(rows), d)} bases (cap {VERTEX_ENUMERATION_CAP})")
    seen: set[RationalVector] = set()
    for idx in combinations(range(len(rows)), d):
        x = _solve_square([rows[i] for i in idx], [rhs[i] for i in idx])
        if x is None:
            continue
        if any(v < 0 for v in x):
            continue
        if all(sum(a * b for a, b in zip(normal, x)) <= 1 for normal in c.vectors):
            seen.add(tuple(x))
    return sorted(seen)


def corner_subset(inner: ConvexCorner, outer: ConvexCorner) -> tuple[bool, RationalVector | None]:
    """Exact inclusion test; on failure returns a point of inner outside outer.

    V-representation inner reduces to generator membership; H-representation
    inner reduces to support LPs along the outer normals, falling back to
    exact vertex enumeration only for the H-inside-V direction.
    """
    if inner.dimension != outer.dimension:
        raise PreconditionError("corners live in different dimensions")
    if inner.kind == "V":
        for g in inner.vectors:
            if not membership(outer, g).inside:
                return False, g
        return True, None
    if outer.kind == "H":
        for normal in outer.vectors:
            value, point = _support_hrep(inner, normal)
            if value is None or value > 1:
                if value is None:
                    # inner is unbounded along this ray; scale it past the normal
                    i = next(i for i, x in enumerate(point) if x > 0)
                    scaled = [Fraction(0)] * inner.dimension
                    scaled[i] = 2 / normal[i]
                    return False, tuple(scaled)
                return False, point
        return True, None
    # H-rep inside V-rep: the inner corner is unbounded along any coordinate
    # no normal touches, while a generator hull never is
    for i in _uncovered_coordinates(inner):
        bound = support(outer, tuple(Fraction(1) if j == i else Fraction(0)
                                     for j in range(inner.dimension)))
        ray = [Fraction(0)] * inner.dimension
        ray[i] = bound + 1
        return False, tuple(ray)
    for vertex in hrep_vertices(inner):
        if not membership(outer, vertex).inside:
            return False, vertex
    return True, None


def equal(c1: ConvexCorner, c2: ConvexCorner) -> bool:
    """Exact set equality via mutual inclusion."""
    return corner_subset(c1, c2)[0] and corner_subset(c2, c1)[0]


def corner_to_json(c: ConvexCorner) -> str:
    """Serialize with rationals as lowest-terms "p/q" strings."""
    key = "vrep" if c.kind == "V" else "hrep"
    payload = {"dim": c.dimension, key: [[str(x) for x in vec] for vec in c.vectors]}
    return json.dumps(payload, sort_keys=True)


def corner_from_json(text: str) -> ConvexCorner:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid corner JSON: {err}") from None
    if not isinstance(payload, dict) or "dim" not in payload:
        raise ParseError("corner JSON needs a 'dim' field")
    has_v, has_h = "vrep" in payload, "hrep" in payload
    if has_v == has_h:
        raise ParseError("corner JSON needs exactly one of 'vrep' or 'hrep'")
    dim = payload["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("'dim' must be a positive integer")
    raw = payload["vrep" if has_v else "hrep"]
    try:
        vecs = tuple(tuple(Fraction(x) for x in vec) for vec in raw)
    except (ValueError, ZeroDivisionError, TypeError) as err:
        raise ParseError(f"invalid rational in corner JSON: {err}") from None
    try:
        return ConvexCorner(dim, "V" if has_v else "H", vecs)
    except ValueError as err:
        raise ParseError(str(err)) from None
