"""Exact rational linear programming on a dense simplex tableau.

Everything here runs in Fraction arithmetic with Bland's anti-cycling pivot
rule, so optimal values, optimizers, and duals are exact and deterministic.
Problems are maximization over ``rows . x <= rhs`` with implicit ``x >= 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cliques import as_weights, maximal_cliques
from .errors import PreconditionError, ResourceLimitError
from .graphs import Graph

MAX_ROWS = 10_000
MAX_VARS = 100

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class LpProblem:
    objective: Vector
    rows: tuple[Vector, ...]
    rhs: Vector

    @staticmethod
    def build(objective: Sequence, rows: Sequence[Sequence], rhs: Sequence) -> "LpProblem":
        obj = tuple(Fraction(x) for x in objective)
        mat = tuple(tuple(Fraction(x) for x in row) for row in rows)
        b = tuple(Fraction(x) for x in rhs)
        if len(mat) != len(b):
            raise PreconditionError("row count does not match rhs length")
        if any(len(row) != len(obj) for row in mat):
            raise PreconditionError("row length does not match objective length")
        if len(obj) > MAX_VARS or len(mat) > MAX_ROWS:
            raise ResourceLimitError(
                f"LP capped at {MAX_ROWS} rows x {MAX_VARS} variables")
        return LpProblem(obj, mat, b)


@dataclass(frozen=True)
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    primal: Vector | None = None
    dual: Vector | None = None


class _Tableau:
    """Dense simplex tableau; columns are [vars | slacks | artificial? | rhs]."""

    def __init__(self, problem: LpProblem):
        self.n = len(problem.objective)
        self.m = len(problem.rows)
        self.ncols = self.n + self.m + 1  # variables, slacks, rhs
        self.rows = []
        for i in range(self.m):
            row = list(problem.rows[i]) + [Fraction(0)] * self.m + [problem.rhs[i]]
            row[self.n + i] = Fraction(1)
            self.rows.append(row)
        self.basis = [self.n + i for i in range(self.m)]
        self.cost = [Fraction(0)] * self.ncols
        self.cost_value = Fraction(0)

    def set_objective(self, coeffs: dict[int, Fraction]) -> None:
        self.cost = [Fraction(0)] * self.ncols
        self.cost_value = Fraction(0)
        for j, c in coeffs.items():
            self.cost[j] = c
        # express in terms of the nonbasic variables
        for i, b in enumerate(self.basis):
            if self.cost[b]:
                self._eliminate_cost(i)

    def _eliminate_cost(self, i: int) -> None:
        factor = self.cost[self.basis[i]]
        if not factor:
            return
        row = self.rows[i]
        for j in range(len(self.cost)):
            self.cost[j] -= factor * row[j]
        self.cost_value += factor * row[-1]

    def pivot(self, i: int, j: int) -> None:
        row = self.rows[i]
        inv = Fraction(1) / row[j]
        self.rows[i] = row = [x * inv for x in row]
        for k, other in enumerate(self.rows):
            if k != i and other[j]:
                f = other[j]
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
        self.basis[i] = j
        self._eliminate_cost(i)

    def run(self, allowed: int) -> str:
        """Primal simplex with Bland's rule over columns [0, allowed)."""
        while True:
            enter = next((j for j in range(allowed) if self.cost[j] > 0), None)
            if enter is None:
                return "optimal"
            leave, best = -1, None
            for i, row in enumerate(self.rows):
                if row[enter] > 0:
                    ratio = row[-1] / row[enter]
                    if best is None or ratio < best or (
                            ratio == best and self.basis[i] < self.basis[leave]):
                        leave, best = i, ratio
            if leave < 0:
                return "unbounded"
            self.pivot(leave, enter)


def solve_lp(problem: LpProblem) -> LpSolution:
    """Two-phase exact simplex; optimal solutions satisfy strong duality exactly."""
    t = _Tableau(problem)
    n, m = t.n, t.m

    if any(problem.rhs[i] < 0 for i in range(m)):
        # phase 1: auxiliary variable with -1 in every row drives basics >= 0
        aux = n + m
        for row in t.rows:
            row.insert(aux, Fraction(-1))
        t.ncols += 1
        worst = min(range(m), key=lambda i: (t.rows[i][-1], t.basis[i]))
        t.set_objective({aux: Fraction(-1)})
        t.pivot(worst, aux)
        t.run(aux + 1)
        if t.cost_value < 0:
            return LpSolution(status="infeasible")
        if aux in t.basis:
            # pivot the (degenerate, zero-valued) auxiliary out; the slack
            # block of the row holds a row of an invertible matrix, so a
            # nonzero pivot column always exists
            i = t.basis.index(aux)
            j = next(j for j in range(n + m) if t.rows[i][j] != 0)
            t.pivot(i, j)
        for row in t.rows:
            del row[aux]
        t.ncols -= 1

    t.set_objective({j: problem.objective[j] for j in range(n)})
    status = t.run(n + m)
    if status == "unbounded":
        return LpSolution(status="unbounded")

    primal = [Fraction(0)] * n
    for i, b in enumerate(t.basis):
        if b < n:
            primal[b] = t.rows[i][-1]
    # the cost row reads c - y.[A|I], so slack entries recover the exact dual
    dual = tuple(-t.cost[n + i] for i in range(len(problem.rows)))
    return LpSolution(status="optimal", value=t.cost_value,
                      primal=tuple(primal), dual=dual)


def fractional_packing(g: Graph, weights: Sequence) -> tuple[Fraction, Vector]:
    """Exact fractional packing number and an attaining optimizer.

    Maximizes the weighted total over nonnegative vectors whose sum on every
    maximal clique is at most 1; the optimizer is therefore a single-copy
    exclusivity behavior.
    """
    w = as_weights(weights, g.n)
    cliques = maximal_cliques(g)
    rows = []
    for clique in cliques:
        row = [Fraction(0)] * g.n
        for v in clique:
            row[v] = Fraction(1)
        rows.append(tuple(row))
    problem = LpProblem(w, tuple(rows), tuple([Fraction(1)] * len(rows)))
    sol = solve_lp(problem)
    if sol.status != "optimal":
        raise PreconditionError(f"fractional packing LP ended with status {sol.status}")
    return sol.value, sol.primal
