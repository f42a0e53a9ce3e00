from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from exlab import (
    AugmentedTheory,
    Behavior,
    PreconditionError,
    antiblocker,
    complement,
    corner_subset,
    demonstrate_post_quantum_exclusion,
    enumerate_graphs,
    ep_product,
    equal,
    fractional_packing,
    largest_ep_theory,
    maximal_independent_sets,
    named_graph,
    post_quantum_witness,
    qstab,
    sample_quantum_self_duality,
    stab,
    support,
    verify_antiblocking_dualities,
    yan_construction,
)

from conftest import random_graph


def odd_cycle_theta(n: int) -> float:
    return n * math.cos(math.pi / n) / (1 + math.cos(math.pi / n))


class TestYanConstruction:
    def test_pentagon(self):
        yc = yan_construction(named_graph("C5"))
        assert yc.product.n == 25
        assert len(yc.diagonal) == 5

    def test_k2(self):
        yc = yan_construction(named_graph("K2"))
        assert yc.product.n == 4
        assert yc.diagonal == (0, 3)
        assert yc.product.has_edge(0, 3)

    def test_single_vertex(self):
        yc = yan_construction(named_graph("K1"))
        assert yc.product.n == 1 and yc.diagonal == (0,)

    def test_diagonal_clique_on_corpus(self, small_corpus):
        for g in small_corpus:
            if g.n * g.n <= 4096:
                yc = yan_construction(g)
                for a in yc.diagonal:
                    for b in yc.diagonal:
                        if a != b:
                            assert yc.product.has_edge(a, b)


class TestEpProduct:
    def test_kcbs_saturates(self):
        p = [1 / math.sqrt(5)] * 5
        assert abs(ep_product(p, p) - 1.0) < 1e-9

    def test_zero(self):
        assert ep_product([0.0] * 5, [0.3] * 5) == 0.0

    def test_uniform_half_violates(self):
        assert abs(ep_product([0.5] * 5, [0.5] * 5) - 1.25) < 1e-12

    def test_length_mismatch(self):
        with pytest.raises(PreconditionError):
            ep_product([0.5], [0.5, 0.5])


class TestLargestEpTheory:
    def test_e1_complement_gives_classical(self, small_corpus):
        for g in small_corpus:
            if g.n <= 6:
                assert equal(largest_ep_theory(qstab(complement(g))), stab(g))

    def test_classical_complement_gives_e1(self, small_corpus):
        for g in small_corpus:
            if g.n <= 6:
                assert equal(largest_ep_theory(stab(complement(g))), qstab(g))

    def test_double_antiblocker_fixed_point(self):
        c = stab(named_graph("C5"))
        assert equal(largest_ep_theory(antiblocker(c)), c)


class TestAntiblockingDualities:
    def test_pentagon(self):
        assert verify_antiblocking_dualities(named_graph("C5")).passed

    def test_all_four_vertex_classes(self):
        for g in enumerate_graphs(4):
            assert verify_antiblocking_dualities(g).passed

    def test_seeded_random_graphs_up_to_eight(self):
        rng = np.random.default_rng(19)
        for _ in range(10):
            g = random_graph(rng, int(rng.integers(2, 9)), p=float(rng.random()))
            assert verify_antiblocking_dualities(g).passed

    def test_classical_behaviors_respect_complement_e1(self):
        # deterministic noncontextual supports never violate half-spaces built
        # from single-copy exclusivity behaviors of the complement
        rng = np.random.default_rng(3)
        for _ in range(10):
            g = random_graph(rng, int(rng.integers(2, 8)))
            gbar = complement(g)
            _, q = fractional_packing(gbar, random_rational(rng, g.n))
            for ind_set in maximal_independent_sets(g):
                assert sum((q[v] for v in ind_set), Fraction(0)) <= 1

    def test_monotone_restriction(self):
        # smaller complementary theory -> larger allowed theory, and conversely
        for g in (named_graph("C5"), named_graph("C4"), named_graph("K3")):
            inner, outer = stab(g), qstab(g)
            assert corner_subset(inner, outer)[0]
            assert corner_subset(antiblocker(outer), antiblocker(inner))[0]


def random_rational(rng, n):
    return [Fraction(int(rng.integers(0, 33)), 16) for _ in range(n)]


class TestQuantumSelfDuality:
    def test_pentagon_sampled(self):
        report = sample_quantum_self_duality(named_graph("C5"), n_directions=20, seed=7)
        assert report.passed
        assert report.max_cross_ep <= 1 + 1e-6
        for record in report.records:
            assert abs(record.tightness - 1.0) < 1e-4

    def test_triangle_trivial(self):
        report = sample_quantum_self_duality(named_graph("K3"), n_directions=10, seed=1)
        assert report.passed

    def test_heptagon_sampled(self):
        report = sample_quantum_self_duality(named_graph("C7"), n_directions=10, seed=3)
        assert report.passed


class TestPostQuantumWitness:
    def test_pentagon_uniform_half(self):
        report = post_quantum_witness(named_graph("C5"), [0.5] * 5)
        assert abs(report.theta_value - math.sqrt(5) / 2) < 1e-5
        assert report.inner_product > 1
        assert abs(report.inner_product - report.theta_value) <= 1e-6
        assert report.witness_is_post_classical
        assert report.passed
        # witness is approximately the rescaled pentagon optimum
        assert all(abs(p - 1 / math.sqrt(5)) < 1e-5 for p in report.witness)

    def test_witness_certificate_is_exact(self):
        report = post_quantum_witness(named_graph("C5"), [0.5] * 5)
        cert = report.classical_certificate
        g = complement(named_graph("C5"))
        dot = sum(c * x for c, x in zip(cert, report.witness.as_fractions()))
        assert dot > 1
        assert support(stab(g), cert) <= 1

    def test_quantum_target_rejected(self):
        with pytest.raises(PreconditionError, match="quantum-realizable"):
            post_quantum_witness(named_graph("C5"), [0.4] * 5)

    def test_boundary_target_rejected_as_undecidable(self):
        with pytest.raises(PreconditionError, match="boundary"):
            post_quantum_witness(named_graph("C5"), [1 / math.sqrt(5)] * 5)

    def test_non_e1_target_rejected(self):
        with pytest.raises(PreconditionError, match="clique inequality"):
            post_quantum_witness(named_graph("C5"), [0.8] * 5)

    def test_heptagon_uniform_half(self):
        # the complement of the heptagon hosts the witness; its theta follows
        # from the vertex-transitive product identity theta(G) theta(comp) = n
        report = post_quantum_witness(named_graph("C7"), [0.5] * 7)
        expected = 7 / odd_cycle_theta(7) / 2
        assert abs(report.theta_value - expected) < 1e-6
        assert report.inner_product > 1
        assert report.witness_is_post_classical
        assert report.passed

    def test_report_serializes_with_residuals(self):
        import json
        report = post_quantum_witness(named_graph("C5"), [0.5] * 5)
        payload = report.to_dict()
        assert all("residual" in claim for claim in payload["claims"])
        json.dumps(payload)  # JSON-ready without further conversion

    def test_witness_chain_consistency(self):
        report = post_quantum_witness(named_graph("C5"), [0.5] * 5)
        real = report.witness_realization
        reproduced = [float(np.dot(real.state, v) ** 2) for v in real.event_vectors]
        assert max(abs(a - b) for a, b in zip(reproduced, report.witness)) < 1e-5
        assert abs(report.inner_product - report.theta_value) < 1e-5


class TestAugmentedTheoryAndDemo:
    def test_build_flags_post_quantum(self):
        g = named_graph("C5")
        theory = AugmentedTheory.build(g, [[0.5] * 5, [0.4] * 5])
        assert theory.post_quantum == (True, False)

    def test_build_rejects_non_e1(self):
        with pytest.raises(PreconditionError, match="clique inequality"):
            AugmentedTheory.build(named_graph("C5"), [[0.9] * 5])

    def test_pentagon_demo(self):
        g = named_graph("C5")
        theory = AugmentedTheory.build(g, [[0.5] * 5], label="Q + {uniform 1/2}")
        report = demonstrate_post_quantum_exclusion(g, theory)
        assert report.passed
        assert len(report.witnesses) == 1
        assert report.classical_behaviors_survive

    def test_demo_propagates_non_post_quantum_error(self):
        g = named_graph("C5")
        theory = AugmentedTheory.build(g, [[1 / math.sqrt(5)] * 5])
        assert theory.post_quantum == (False,)
        with pytest.raises(PreconditionError):
            demonstrate_post_quantum_exclusion(g, theory)

    def test_empty_theory_rejected(self):
        g = named_graph("C5")
        theory = AugmentedTheory.build(g, [])
        with pytest.raises(PreconditionError, match="no extra generators"):
            demonstrate_post_quantum_exclusion(g, theory)

    def test_heptagon_demo(self):
        g = named_graph("C7")
        theory = AugmentedTheory.build(g, [[0.5] * 7])
        report = demonstrate_post_quantum_exclusion(g, theory)
        assert report.passed
