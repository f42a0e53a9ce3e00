"""Dense semidefinite programming for the quantum (theta-body) set.

The weighted Lovász number is computed from the bordered Gram formulation:
maximize sum_i w_i M_ii over symmetric (n+1) x (n+1) M >= 0 with M_00 = 1,
M_0i = M_ii, and M_ij = 0 on every edge.  The optimizer's diagonal is itself
a quantum behavior, so one solve serves the optimal value, theta-body
membership (through the complement graph), and explicit state/projector
extraction by Gram factorization.

The cone solves run on cvxopt's primal-dual interior-point method
(Nesterov-Todd scaling, dense factorizations, infeasible start) behind the
problem/solution types below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from cvxopt import matrix as _cvx_matrix
from cvxopt import solvers as _cvx_solvers

from .corners import Behavior
from .errors import PreconditionError, ResourceLimitError, SolverError
from .graphs import Graph, complement

MAX_MATRIX_DIM = 64
MAX_CONSTRAINTS = 2000
MAX_THETA_VERTICES = 60


@dataclass(frozen=True)
class SdpTolerances:
    gap_tol: float = 1e-9          # relative duality gap at termination
    feas_tol: float = 1e-9         # constraint residual at termination
    mem_tol: float = 1e-5          # half-width of the membership boundary band
    orth_tol: float = 1e-5         # projector exclusivity residual
    realization_tol: float = 1e-5  # reproduction error of target behaviors
    eig_tol: float = 1e-7          # eigenvalue clamp / degenerate-vertex cutoff
    max_iterations: int = 200


DEFAULT_TOLERANCES = SdpTolerances()


@dataclass(frozen=True)
class SdpProblem:
    """maximize <objective, X> subject to <A_k, X> = b_k and X >= 0 (PSD)."""

    matrix_dimension: int
    objective: np.ndarray
    equality_constraints: tuple[tuple[np.ndarray, float], ...]

    def __post_init__(self) -> None:
        d = self.matrix_dimension
        if d < 1 or d > MAX_MATRIX_DIM:
            raise ResourceLimitError(f"matrix dimension {d} outside 1..{MAX_MATRIX_DIM}")
        if len(self.equality_constraints) > MAX_CONSTRAINTS:
            raise ResourceLimitError(
                f"{len(self.equality_constraints)} constraints (cap {MAX_CONSTRAINTS})")
        mats = [self.objective] + [a for a, _ in self.equality_constraints]
        for m in mats:
            if m.shape != (d, d):
                raise PreconditionError(f"constraint shape {m.shape} != ({d}, {d})")
            if not np.allclose(m, m.T, atol=1e-12):
                raise PreconditionError("all problem matrices must be symmetric")


@dataclass
class SdpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded" | "max_iterations"
    value: float | None = None
    primal_matrix: np.ndarray | None = None
    dual_vector: np.ndarray | None = None
    duality_gap: float | None = None
    max_constraint_residual: float | None = None
    iterations: int = 0


def solve_sdp(problem: SdpProblem, tols: SdpTolerances = DEFAULT_TOLERANCES) -> SdpSolution:
    """Solve a dense equality-constrained SDP; deterministic given its inputs."""
    d = problem.matrix_dimension
    cons = problem.equality_constraints
    if not cons:
        raise PreconditionError("at least one equality constraint is required")
    # conelp primal is this problem's dual: min b.y s.t. sum_k y_k A_k - C >= 0,
    # so conelp's PSD dual variable z is exactly the primal matrix X.
    c = _cvx_matrix([float(b) for _, b in cons])
    g_cols = np.column_stack([-np.asarray(a, dtype=float).flatten(order="F") for a, _ in cons])
    G = _cvx_matrix(g_cols)
    h = _cvx_matrix(-np.asarray(problem.objective, dtype=float).flatten(order="F"))
    options = {
        "show_progress": False,
        "abstol": tols.gap_tol,
        "reltol": tols.gap_tol,
        "feastol": tols.feas_tol,
        "maxiters": tols.max_iterations,
    }
    try:
        raw = _cvx_solvers.conelp(c, G, h, dims={"l": 0, "q": [], "s": [d]}, options=options)
    except (ValueError, ZeroDivisionError, ArithmeticError) as err:
        raise SolverError(f"interior-point solve failed: {err}") from None

    status = raw["status"]
    if status == "dual infeasible":
        return SdpSolution(status="infeasible", iterations=raw["iterations"])
    if status == "primal infeasible":
        return SdpSolution(status="unbounded", iterations=raw["iterations"])
    if raw["z"] is None:
        raise SolverError(f"solver returned no iterate (status {status!r})")

    X = np.array(raw["z"]).reshape(d, d, order="F")
    X = 0.5 * (X + X.T)
    value = float(np.tensordot(problem.objective, X))
    residual = max(
        (abs(float(np.tensordot(a, X)) - b) for a, b in cons), default=0.0)
    gap = raw.get("relative gap")
    if gap is None:
        gap = raw.get("gap")
    return SdpSolution(
        status="optimal" if status == "optimal" else "max_iterations",
        value=value,
        primal_matrix=X,
        dual_vector=np.array(raw["x"]).ravel() if raw["x"] is not None else None,
        duality_gap=float(gap) if gap is not None else None,
        max_constraint_residual=residual,
        iterations=raw["iterations"],
    )


def _as_float_weights(weights: Sequence, n: int) -> np.ndarray:
    if isinstance(weights, Behavior):
        weights = weights.probabilities
    w = np.asarray([float(x) for x in weights], dtype=float)
    if w.shape != (n,):
        raise PreconditionError(f"weight vector has length {w.size}, expected {n}")
    if np.any(w < 0):
        raise PreconditionError("weights must be nonnegative")
    return w


def _bordered_gram_problem(g: Graph, w: np.ndarray,
                           fixed_diagonal: np.ndarray | None = None) -> SdpProblem:
    d = g.n + 1
    cons: list[tuple[np.ndarray, float]] = []
    a = np.zeros((d, d))
    a[0, 0] = 1.0
    cons.append((a, 1.0))
    for i in range(1, d):
        if fixed_diagonal is None:
            a = np.zeros((d, d))
            a[0, i] = a[i, 0] = 0.5
            a[i, i] = -1.0
            cons.append((a, 0.0))
        else:
            a = np.zeros((d, d))
            a[0, i] = a[i, 0] = 0.5
            cons.append((a, float(fixed_diagonal[i - 1])))
            a = np.zeros((d, d))
            a[i, i] = 1.0
            cons.append((a, float(fixed_diagonal[i - 1])))
    for i, j in g.edges():
        a = np.zeros((d, d))
        a[i + 1, j + 1] = a[j + 1, i + 1] = 0.5
        cons.append((a, 0.0))
    objective = np.zeros((d, d))
    for i in range(g.n):
        objective[i + 1, i + 1] = w[i]
    return SdpProblem(d, objective, tuple(cons))


@dataclass
class ThetaResult:
    value: float
    behavior: Behavior
    solution: SdpSolution


def lovasz_theta(g: Graph, weights: Sequence,
                 tols: SdpTolerances = DEFAULT_TOLERANCES) -> ThetaResult:
    """Weighted Lovász number with the attaining quantum behavior.

    The returned behavior is the diagonal of the optimal bordered Gram
    matrix, a theta-body point whose weighted total equals the optimum.
    """
    if g.n > MAX_THETA_VERTICES:
        raise ResourceLimitError(f"theta computation capped at {MAX_THETA_VERTICES} vertices")
    w = _as_float_weights(weights, g.n)
    solution = solve_sdp(_bordered_gram_problem(g, w), tols)
    if solution.status != "optimal":
        raise SolverError(f"theta SDP ended with status {solution.status}")
    diag = np.clip(np.diag(solution.primal_matrix)[1:], 0.0, 1.0)
    return ThetaResult(value=float(solution.value),
                       behavior=Behavior(tuple(diag)),
                       solution=solution)


@dataclass
class ThetaMembership:
    status: str  # "inside" | "outside" | "boundary"
    theta_value: float
    witness: Behavior | None = None  # complement theta-body point with <witness, p> > 1


def th_membership(g: Graph, p: Sequence,
                  tols: SdpTolerances = DEFAULT_TOLERANCES) -> ThetaMembership:
    """Theta-body membership via the complement-graph support value.

    A nonnegative p lies in the quantum set exactly when the weighted Lovász
    number of the complement at weights p is at most 1; the optimizer behavior
    certifies exclusion when that value exceeds 1.
    """
    if isinstance(p, Behavior):
        probe = p
    else:
        probe = Behavior(tuple(float(x) for x in p))
    if len(probe) != g.n:
        raise PreconditionError(f"behavior has length {len(probe)}, expected {g.n}")
    result = lovasz_theta(complement(g), probe, tols)
    t = result.value
    if t <= 1 - tols.mem_tol:
        return ThetaMembership("inside", t)
    if t >= 1 + tols.mem_tol:
        return ThetaMembership("outside", t, result.behavior)
    return ThetaMembership("boundary", t)


@dataclass
class QuantumRealization:
    """Pure state and rank-1 projector directions reproducing a behavior."""

    state: np.ndarray                 # unit vector
    event_vectors: np.ndarray         # one unit row per vertex
    realized_behavior: Behavior       # <state, v_i>^2
    degenerate_vertices: tuple[int, ...] = ()

    def residuals(self, g: Graph, target: Behavior) -> dict[str, float]:
        norms = np.linalg.norm(self.event_vectors, axis=1)
        edge_overlap = 0.0
        for i, j in g.edges():
            edge_overlap = max(edge_overlap, abs(float(
                np.dot(self.event_vectors[i], self.event_vectors[j]))))
        behavior_err = max(
            abs(a - b) for a, b in zip(self.realized_behavior, target))
        return {
            "state_norm_error": abs(float(np.linalg.norm(self.state)) - 1.0),
            "vector_norm_error": float(np.max(np.abs(norms - 1.0))),
            "max_edge_overlap": edge_overlap,
            "max_behavior_error": behavior_err,
        }


def extract_realization(g: Graph, p: Sequence,
                        tols: SdpTolerances = DEFAULT_TOLERANCES) -> QuantumRealization:
    """Explicit quantum realization of a theta-body behavior.

    Solves the bordered Gram feasibility problem with the diagonal pinned to
    p, factorizes the solution by eigendecomposition (eigenvalues below
    eig_tol clamped to zero), and reads the state from the border column.
    Vertices with negligible probability are removed before the solve and
    re-inserted with placeholder directions along fresh orthogonal axes;
    they are reported in ``degenerate_vertices``.
    """
    target = p if isinstance(p, Behavior) else Behavior(tuple(float(x) for x in p))
    if len(target) != g.n:
        raise PreconditionError(f"behavior has length {len(target)}, expected {g.n}")
    mem = th_membership(g, target, tols)
    if mem.status == "outside":
        raise PreconditionError(
            f"behavior is not quantum-realizable: complement support value "
            f"{mem.theta_value:.6f} > 1")

    active = [i for i in range(g.n) if target[i] > tols.eig_tol]
    degenerate = tuple(i for i in range(g.n) if target[i] <= tols.eig_tol)
    n_deg = len(degenerate)

    if not active:
        dim = 1 + n_deg
        state = np.zeros(dim)
        state[0] = 1.0
        vectors = np.zeros((g.n, dim))
        for slot, i in enumerate(degenerate):
            vectors[i, 1 + slot] = 1.0
        realized = Behavior(tuple(float(np.dot(state, vectors[i]) ** 2) for i in range(g.n)))
        return QuantumRealization(state, vectors, realized, degenerate)

    sub = Graph.from_edges(len(active),
                           [(active.index(i), active.index(j)) for i, j in g.edges()
                            if i in active and j in active])
    p_active = np.array([target[i] for i in active])
    problem = _bordered_gram_problem(sub, np.zeros(len(active)), fixed_diagonal=p_active)
    solution = solve_sdp(problem, tols)
    if solution.status == "infeasible":
        raise PreconditionError("behavior is not quantum-realizable: realization SDP infeasible")
    if solution.status not in ("optimal", "max_iterations"):
        raise SolverError(f"realization SDP ended with status {solution.status}")
    if solution.max_constraint_residual is None or \
            solution.max_constraint_residual > 100 * tols.feas_tol:
        raise SolverError(
            f"realization SDP residual {solution.max_constraint_residual} too large")

    M = solution.primal_matrix
    eigvals, eigvecs = np.linalg.eigh(M)
    eigvals = np.where(eigvals < tols.eig_tol, 0.0, eigvals)
    factors = (eigvecs * np.sqrt(eigvals)).T  # columns are Gram vectors
    keep = eigvals > 0
    factors = factors[keep]
    rank = factors.shape[0]

    dim = rank + n_deg
    state = np.zeros(dim)
    state[:rank] = factors[:, 0]
    state /= np.linalg.norm(state)
    vectors = np.zeros((g.n, dim))
    for a, i in enumerate(active):
        col = factors[:, a + 1]
        vectors[i, :rank] = col / np.linalg.norm(col)
    for slot, i in enumerate(degenerate):
        vectors[i, rank + slot] = 1.0

    realized = Behavior(tuple(
        min(max(float(np.dot(state, vectors[i]) ** 2), 0.0), 1.0) for i in range(g.n)))
    realization = QuantumRealization(state, vectors, realized, degenerate)
    res = realization.residuals(g, target)
    if res["max_edge_overlap"] > tols.orth_tol:
        raise SolverError(f"edge orthogonality residual {res['max_edge_overlap']:.2e} "
                          f"exceeds {tols.orth_tol}")
    if res["max_behavior_error"] > tols.realization_tol:
        raise SolverError(f"behavior reproduction error {res['max_behavior_error']:.2e} "
                          f"exceeds {tols.realization_tol}")
    return realization
