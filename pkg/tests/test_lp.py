from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from exlab import (
    LpProblem,
    PreconditionError,
    ResourceLimitError,
    fractional_packing,
    independence_number,
    named_graph,
    maximal_cliques,
    solve_lp,
)

from conftest import random_bipartite, random_chordal, random_graph, random_rational_weights


def assert_strong_duality(problem: LpProblem, sol) -> None:
    """Exact certificates: feasibility both sides, zero gap, slackness."""
    assert sol.status == "optimal"
    n = len(problem.objective)
    m = len(problem.rows)
    x, y = sol.primal, sol.dual
    assert all(v >= 0 for v in x) and all(v >= 0 for v in y)
    row_slacks = [problem.rhs[i] - sum(problem.rows[i][j] * x[j] for j in range(n))
                  for i in range(m)]
    assert all(s >= 0 for s in row_slacks)
    reduced = [sum(problem.rows[i][j] * y[i] for i in range(m)) - problem.objective[j]
               for j in range(n)]
    assert all(r >= 0 for r in reduced)
    assert sum(problem.objective[j] * x[j] for j in range(n)) == sol.value
    assert sum(problem.rhs[i] * y[i] for i in range(m)) == sol.value
    assert all(y[i] * row_slacks[i] == 0 for i in range(m))
    assert all(x[j] * reduced[j] == 0 for j in range(n))


class TestSolveLp:
    def test_single_variable(self):
        sol = solve_lp(LpProblem.build([1], [[1]], [1]))
        assert sol.status == "optimal" and sol.value == 1

    def test_deterministic_vertex_on_ties(self):
        sol = solve_lp(LpProblem.build([1, 1], [[1, 1]], [1]))
        assert sol.value == 1
        assert sol.primal == (Fraction(1), Fraction(0))

    def test_pentagon_packing_rows(self):
        rows = [[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 1, 0],
                [0, 0, 0, 1, 1], [1, 0, 0, 0, 1]]
        sol = solve_lp(LpProblem.build([1] * 5, rows, [1] * 5))
        assert sol.value == Fraction(5, 2)
        assert sol.primal == tuple([Fraction(1, 2)] * 5)

    def test_infeasible(self):
        sol = solve_lp(LpProblem.build([1], [[1], [-1]], [-1, -2]))
        assert sol.status == "infeasible"

    def test_unbounded(self):
        sol = solve_lp(LpProblem.build([1], [[-1]], [0]))
        assert sol.status == "unbounded"

    def test_phase_one_negative_rhs(self):
        # x >= 2 expressed as -x <= -2, maximize -x
        problem = LpProblem.build([-1], [[-1], [1]], [-2, 5])
        sol = solve_lp(problem)
        assert sol.value == -2 and sol.primal == (Fraction(2),)
        assert_strong_duality(problem, sol)

    def test_strong_duality_on_random_instances(self):
        rng = np.random.default_rng(42)
        solved = 0
        for _ in range(60):
            n = int(rng.integers(1, 6))
            m = int(rng.integers(1, 7))
            obj = [Fraction(int(rng.integers(-4, 5)), 2) for _ in range(n)]
            rows = [[Fraction(int(rng.integers(-3, 6)), 3) for _ in range(n)]
                    for _ in range(m)]
            if m >= 2 and rng.random() < 0.4:
                rows[-1] = list(rows[0])  # redundant rows stress phase 1
            rhs = [Fraction(int(rng.integers(-2, 7))) for _ in range(m)]
            problem = LpProblem.build(obj, rows, rhs)
            sol = solve_lp(problem)
            if sol.status == "optimal":
                assert_strong_duality(problem, sol)
                solved += 1
        assert solved >= 10

    def test_dimension_mismatch(self):
        with pytest.raises(PreconditionError):
            LpProblem.build([1, 2], [[1]], [1])

    def test_variable_cap(self):
        with pytest.raises(ResourceLimitError):
            LpProblem.build([1] * 101, [[0] * 101], [1])


class TestFractionalPacking:
    def test_pentagon(self):
        value, optimizer = fractional_packing(named_graph("C5"), [1] * 5)
        assert value == Fraction(5, 2)
        assert optimizer == tuple([Fraction(1, 2)] * 5)

    def test_odd_cycles_match_closed_form(self):
        for n in (5, 7):
            value, _ = fractional_packing(named_graph(f"C{n}"), [1] * n)
            assert value == Fraction(n, 2)

    def test_complete_graphs(self):
        for n in (1, 3, 6):
            value, _ = fractional_packing(named_graph(f"K{n}"), [1] * n)
            assert value == 1

    def test_empty_graphs(self):
        for n in (1, 4):
            value, _ = fractional_packing(named_graph(f"empty{n}"), [1] * n)
            assert value == n

    def test_petersen_pinned_values(self):
        # triangle-free, so the clique rows are the 15 edges; uniform 1/2
        # attains 5, while the exact independence number is 4
        g = named_graph("petersen")
        assert independence_number(g, [1] * 10)[0] == 4
        assert fractional_packing(g, [1] * 10)[0] == 5

    def test_optimizer_feasibility_exact(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            n = int(rng.integers(2, 9))
            g = random_graph(rng, n, p=float(rng.random()))
            w = random_rational_weights(rng, n)
            value, x = fractional_packing(g, w)
            for clique in maximal_cliques(g):
                assert sum((x[v] for v in clique), Fraction(0)) <= 1
            assert sum(wi * xi for wi, xi in zip(w, x)) == value

    def test_sandwich_lower_half_alpha_below_alpha_star(self, small_corpus):
        rng = np.random.default_rng(1000)
        for g in small_corpus:
            for _ in range(3):
                w = random_rational_weights(rng, g.n)
                alpha, _ = independence_number(g, w)
                alpha_star, _ = fractional_packing(g, w)
                assert alpha <= alpha_star

    def test_perfect_graphs_collapse(self):
        rng = np.random.default_rng(55)
        graphs = [random_bipartite(rng, int(rng.integers(2, 9))) for _ in range(6)]
        graphs += [random_chordal(rng, int(rng.integers(2, 9))) for _ in range(4)]
        for g in graphs:
            alpha, _ = independence_number(g, [1] * g.n)
            alpha_star, _ = fractional_packing(g, [1] * g.n)
            assert alpha == alpha_star
