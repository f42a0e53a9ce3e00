"""Exclusivity-principle analysis across complementary experiments.

A pair of independent experiments whose exclusivity graphs are complements
of each other is constrained by the exclusivity principle through the
composite diagonal events: the factorized products sum to at most 1.  That
single family of half-spaces is exactly the anti-blocking operation, which
is what these checks exercise:

* the classical and single-copy-exclusivity sets of complementary
  experiments are anti-blockers of each other (exact, rational arithmetic);
* the quantum set is its own anti-blocking dual (sampled via SDP);
* assuming any post-quantum behavior in one experiment forcibly excludes
  specific quantum behaviors (all of them post-classical) in the other,
  with an explicit state/projector witness for each exclusion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cliques import maximal_cliques
from .corners import (
    Behavior,
    ConvexCorner,
    antiblocker,
    corner_subset,
    membership,
    qstab,
    stab,
    support,
)
from .errors import ExlabError, PreconditionError, SolverError
from .graphs import Graph, ProductIndexMap, complement, disjunctive_product
from .sdp import (
    DEFAULT_TOLERANCES,
    QuantumRealization,
    SdpTolerances,
    extract_realization,
    lovasz_theta,
    th_membership,
)

E1_MEMBERSHIP_TOL = 1e-8
CROSS_EP_TOL = 1e-6
NC_SURVIVAL_TOL = 1e-9


@dataclass(frozen=True)
class YanConstruction:
    """Composite experiment joining a graph with its complement.

    The product graph carries the composite events; the diagonal indices
    form a clique, which is what lets the exclusivity principle couple the
    two factor experiments.
    """

    base: Graph
    complement_graph: Graph
    product: Graph
    index_map: ProductIndexMap
    diagonal: tuple[int, ...]


def yan_construction(g: Graph) -> YanConstruction:
    """Build the composite experiment of ``g`` with its complement."""
    gbar = complement(g)
    product, index_map = disjunctive_product(g, gbar)
    diagonal = tuple(index_map.index(i, i) for i in range(g.n))
    for k, a in enumerate(diagonal):
        for b in diagonal[k + 1:]:
            if not product.has_edge(a, b):
                raise ExlabError("diagonal of the composite experiment is not a clique")
    return YanConstruction(g, gbar, product, index_map, diagonal)


def ep_product(p: Sequence, q: Sequence) -> float:
    """Factorized exclusivity value sum_i p_i q_i of two independent behaviors."""
    if len(p) != len(q):
        raise PreconditionError(f"behavior lengths differ: {len(p)} vs {len(q)}")
    return math.fsum(float(a) * float(b) for a, b in zip(p, q))


def largest_ep_theory(x_complement: ConvexCorner) -> ConvexCorner:
    """Largest correlation set the exclusivity principle allows an experiment
    whose complementary experiment realizes the corner ``x_complement``."""
    return antiblocker(x_complement)


@dataclass
class DualityCheck:
    holds: bool
    separator: tuple[Fraction, ...] | None = None


@dataclass
class DualityReport:
    """Exact anti-blocking dualities between complementary experiments."""

    e1_complement_to_classical: DualityCheck
    classical_complement_to_e1: DualityCheck

    @property
    def passed(self) -> bool:
        return (self.e1_complement_to_classical.holds
                and self.classical_complement_to_e1.holds)


def _equal_with_separator(c1: ConvexCorner, c2: ConvexCorner) -> DualityCheck:
    ok, sep = corner_subset(c1, c2)
    if not ok:
        return DualityCheck(False, sep)
    ok, sep = corner_subset(c2, c1)
    if not ok:
        return DualityCheck(False, sep)
    return DualityCheck(True)


def verify_antiblocking_dualities(g: Graph) -> DualityReport:
    """Exact check that abl E1(complement) = NC and abl NC(complement) = E1."""
    gbar = complement(g)
    first = _equal_with_separator(antiblocker(qstab(gbar)), stab(g))
    second = _equal_with_separator(antiblocker(stab(gbar)), qstab(g))
    return DualityReport(first, second)


@dataclass
class SelfDualityRecord:
    index: int
    cross_ep: float | None = None
    tightness: float | None = None  # complement support value at the optimizer
    error: str | None = None


@dataclass
class SelfDualityReport:
    """Sampled evidence that the quantum set is its own anti-blocking dual."""

    n_directions: int
    seed: int
    records: list[SelfDualityRecord] = field(default_factory=list)

    @property
    def max_cross_ep(self) -> float:
        values = [r.cross_ep for r in self.records if r.cross_ep is not None]
        return max(values) if values else float("nan")

    @property
    def passed(self) -> bool:
        if any(r.error for r in self.records):
            return False
        return self.max_cross_ep <= 1 + CROSS_EP_TOL


def sample_quantum_self_duality(g: Graph, n_directions: int = 100, seed: int = 42,
                                tols: SdpTolerances = DEFAULT_TOLERANCES) -> SelfDualityReport:
    """Sample cross-products of quantum behaviors of complementary experiments.

    For each seeded nonnegative direction pair (w, w'), maximize w over the
    quantum set of ``g`` and w' over the quantum set of the complement, and
    record the factorized product of the two optimizer behaviors: self-duality
    predicts it never exceeds 1.  Each record also carries the complement
    support value at the first optimizer; a value of 1 certifies that the
    optimizer sits exactly on the exclusivity-principle boundary.
    """
    gbar = complement(g)
    rng = np.random.default_rng(seed)
    report = SelfDualityReport(n_directions, seed)
    for k in range(n_directions):
        w = rng.random(g.n)
        w_prime = rng.random(g.n)
        record = SelfDualityRecord(index=k)
        try:
            p = lovasz_theta(g, w, tols).behavior
            q = lovasz_theta(gbar, w_prime, tols).behavior
            record.cross_ep = ep_product(p, q)
            record.tightness = lovasz_theta(gbar, p, tols).value
        except (SolverError, PreconditionError) as err:
            record.error = str(err)
        report.records.append(record)
    return report


@dataclass
class WitnessClaim:
    description: str
    passed: bool
    value: float | None = None
    residual: float | None = None


@dataclass
class WitnessReport:
    """Quantum behavior excluded by a post-quantum complementary behavior."""

    target: Behavior                       # post-quantum behavior of the complement
    theta_value: float                     # support of the quantum set along the target
    witness: Behavior                      # quantum behavior with <witness, target> > 1
    inner_product: float
    witness_is_post_classical: bool
    witness_realization: QuantumRealization
    narrative: list[WitnessClaim]
    classical_certificate: tuple[Fraction, ...] | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.narrative)

    def to_dict(self) -> dict:
        """JSON-ready view; every claim carries its residual."""
        real = self.witness_realization
        return {
            "target": list(self.target.probabilities),
            "theta_value": self.theta_value,
            "inner_product": self.inner_product,
            "witness_behavior": list(self.witness.probabilities),
            "witness_is_post_classical": self.witness_is_post_classical,
            "classical_certificate": None if self.classical_certificate is None
            else [str(x) for x in self.classical_certificate],
            "realization": {
                "state": [float(x) for x in real.state],
                "event_vectors": [[float(x) for x in row] for row in real.event_vectors],
                "degenerate_vertices": list(real.degenerate_vertices),
            },
            "claims": [
                {"description": c.description, "passed": c.passed,
                 "value": c.value, "residual": c.residual}
                for c in self.narrative
            ],
            "passed": self.passed,
        }


def _e1_slack(g: Graph, p: Behavior) -> float:
    """Largest clique-sum excess over 1 (negative when strictly inside)."""
    worst = -1.0
    for clique in maximal_cliques(g):
        worst = max(worst, math.fsum(p[i] for i in clique) - 1.0)
    return worst


def post_quantum_witness(g_complement: Graph, w_prime: Sequence,
                         tols: SdpTolerances = DEFAULT_TOLERANCES) -> WitnessReport:
    """Exhibit a quantum behavior that a post-quantum complement forbids.

    The target must be a single-copy exclusivity behavior of ``g_complement``
    lying outside its quantum set.  The support SDP of the complement's
    complement then produces a quantum behavior p with factorized product
    above 1, which the exclusivity principle therefore excludes; p is checked
    to be post-classical (outside the classical polytope, with an exact
    separating certificate) and is handed back with an explicit realization.
    """
    target = w_prime if isinstance(w_prime, Behavior) else \
        Behavior(tuple(float(x) for x in w_prime))
    if len(target) != g_complement.n:
        raise PreconditionError(
            f"behavior has length {len(target)}, expected {g_complement.n}")
    slack = _e1_slack(g_complement, target)
    if slack > E1_MEMBERSHIP_TOL:
        raise PreconditionError(
            f"target violates a clique inequality by {slack:.3e}; "
            "it is not a single-copy exclusivity behavior")

    mem = th_membership(g_complement, target, tols)
    if mem.status == "inside":
        raise PreconditionError(
            f"target is quantum-realizable (complement support value "
            f"{mem.theta_value:.6f} <= 1); nothing to exclude")
    if mem.status == "boundary":
        raise PreconditionError(
            f"target is numerically on the quantum boundary "
            f"({mem.theta_value:.6f} within {tols.mem_tol} of 1); refusing to classify")

    g = complement(g_complement)
    theta_value = mem.theta_value
    witness = mem.witness
    inner = ep_product(witness, target)

    claims = [
        WitnessClaim("target lies in the single-copy exclusivity set",
                     slack <= E1_MEMBERSHIP_TOL, value=slack, residual=max(slack, 0.0)),
        WitnessClaim("target is post-quantum (support value above 1)",
                     theta_value > 1, value=theta_value,
                     residual=abs(inner - theta_value)),
        WitnessClaim("factorized product with the quantum witness exceeds 1",
                     inner > 1 and abs(inner - theta_value) <= 1e-6,
                     value=inner, residual=abs(inner - theta_value)),
    ]

    classical = membership(stab(g), witness)
    post_classical = not classical.inside
    cert = classical.certificate
    cert_ok = False
    if cert is not None:
        # the certificate must verify exactly: cert . p > 1 >= support
        dot = sum(c * x for c, x in zip(cert, witness.as_fractions()))
        cert_ok = dot > 1 and support(stab(g), cert) <= 1
    claims.append(WitnessClaim(
        "quantum witness is post-classical (exact separating certificate)",
        post_classical and cert_ok,
        value=1.0 if post_classical else 0.0, residual=0.0))

    realization = extract_realization(g, witness, tols)
    res = realization.residuals(g, witness)
    claims.append(WitnessClaim(
        "witness has an explicit quantum realization (edge orthogonality)",
        res["max_edge_overlap"] <= tols.orth_tol,
        value=res["max_edge_overlap"], residual=res["max_edge_overlap"]))
    claims.append(WitnessClaim(
        "realization reproduces the witness behavior",
        res["max_behavior_error"] <= tols.realization_tol,
        value=res["max_behavior_error"], residual=res["max_behavior_error"]))

    return WitnessReport(
        target=target,
        theta_value=theta_value,
        witness=witness,
        inner_product=inner,
        witness_is_post_classical=post_classical,
        witness_realization=realization,
        narrative=claims,
        classical_certificate=cert,
    )


@dataclass(frozen=True)
class AugmentedTheory:
    """Quantum set of an experiment augmented with extra exclusivity behaviors."""

    graph: Graph
    label: str
    extra_generators: tuple[Behavior, ...]
    post_quantum: tuple[bool, ...]

    @staticmethod
    def build(graph: Graph, extras: Sequence[Sequence], label: str = "Q + W",
              tols: SdpTolerances = DEFAULT_TOLERANCES) -> "AugmentedTheory":
        gens = []
        flags = []
        for raw in extras:
            b = raw if isinstance(raw, Behavior) else Behavior(tuple(float(x) for x in raw))
            if len(b) != graph.n:
                raise PreconditionError(
                    f"extra generator has length {len(b)}, expected {graph.n}")
            slack = _e1_slack(graph, b)
            if slack > E1_MEMBERSHIP_TOL:
                raise PreconditionError(
                    f"extra generator violates a clique inequality by {slack:.3e}")
            gens.append(b)
            flags.append(th_membership(graph, b, tols).status == "outside")
        return AugmentedTheory(graph, label, tuple(gens), tuple(flags))


@dataclass
class ExclusionReport:
    """Narrative outcome of assuming a post-quantum complementary theory."""

    theory_label: str
    witnesses: list[WitnessReport]
    classical_behaviors_survive: bool
    narrative: list[WitnessClaim]

    @property
    def excluded_behaviors(self) -> list[Behavior]:
        return [w.witness for w in self.witnesses]

    @property
    def passed(self) -> bool:
        return (self.classical_behaviors_survive
                and all(w.passed for w in self.witnesses)
                and all(c.passed for c in self.narrative))

    def to_dict(self) -> dict:
        return {
            "theory": self.theory_label,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "classical_behaviors_survive": self.classical_behaviors_survive,
            "claims": [
                {"description": c.description, "passed": c.passed,
                 "value": c.value, "residual": c.residual}
                for c in self.narrative
            ],
            "passed": self.passed,
        }


def demonstrate_post_quantum_exclusion(
        g_complement: Graph, theory: AugmentedTheory,
        tols: SdpTolerances = DEFAULT_TOLERANCES) -> ExclusionReport:
    """Show that a post-quantum complementary theory strictly shrinks the
    quantum set of the experiment, while classical behaviors all survive.

    Runs a witness extraction for every extra generator of the theory;
    each witness is a quantum behavior excluded by one of the factorized
    half-spaces, and every deterministic classical behavior is verified to
    satisfy all of them.
    """
    if not theory.extra_generators:
        raise PreconditionError("theory has no extra generators beyond the quantum set")
    witnesses = [post_quantum_witness(g_complement, w, tols)
                 for w in theory.extra_generators]

    g = complement(g_complement)
    worst = 0.0
    for gen in stab(g).vectors:
        for w_prime in theory.extra_generators:
            value = math.fsum(float(x) * w for x, w in zip(gen, w_prime))
            worst = max(worst, value)
    survive = worst <= 1 + NC_SURVIVAL_TOL

    narrative = [
        WitnessClaim(
            "every extra generator excludes a quantum behavior",
            all(w.inner_product > 1 for w in witnesses),
            value=min(w.inner_product for w in witnesses), residual=0.0),
        WitnessClaim(
            "all excluded behaviors are post-classical",
            all(w.witness_is_post_classical for w in witnesses)),
        WitnessClaim(
            "all deterministic classical behaviors satisfy the new half-spaces",
            survive, value=worst, residual=max(worst - 1, 0.0)),
        WitnessClaim(
            "strict inclusion: the allowed theory is smaller than the quantum set",
            bool(witnesses)),
    ]
    return ExclusionReport(theory.label, witnesses, survive, narrative)
