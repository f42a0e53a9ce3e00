#!/usr/bin/env python3
# Post-quantum behaviors come at a price: they forbid quantum ones.
#
# Suppose the pentagon experiment realizes the uniform behavior at 1/2 per
# event.  That point satisfies every single-copy exclusivity constraint but
# lies strictly outside the quantum set.  Feeding it through the composite
# construction with the complementary experiment produces a quantum behavior
# there whose factorized product with the target exceeds 1 — so if the
# exclusivity principle holds and the target is realized, that genuinely
# quantum behavior can never be observed.

import numpy as np

from exlab import (
    AugmentedTheory,
    Behavior,
    complement,
    demonstrate_post_quantum_exclusion,
    named_graph,
    post_quantum_witness,
)

pentagon = named_graph("C5")
target = Behavior((0.5,) * 5)

report = post_quantum_witness(pentagon, target)
print("target behavior         :", list(target))
print(f"support along target    : {report.theta_value:.9f}  (> 1: post-quantum)")
print(f"excluded quantum witness: {[round(p, 6) for p in report.witness]}")
print(f"factorized product      : {report.inner_product:.9f}")
print("witness is post-classical:", report.witness_is_post_classical)

# The witness comes with an explicit quantum realization on the complementary
# experiment: a unit state and one unit vector per event, orthogonal across
# every edge, reproducing the behavior as squared overlaps.
real = report.witness_realization
residuals = real.residuals(complement(pentagon), report.witness)
print("\nrealization state       :", np.round(real.state, 6))
print("edge-orthogonality error:", f"{residuals['max_edge_overlap']:.2e}")
print("behavior reproduction   :", f"{residuals['max_behavior_error']:.2e}")

for claim in report.narrative:
    print(f"  [{'ok' if claim.passed else 'FAIL'}] {claim.description}")

# Wrap the same target into an augmented theory "quantum + one extra point"
# and run the full exclusion narrative, including the check that classical
# behaviors all survive the new half-space.
theory = AugmentedTheory.build(pentagon, [target], label="Q + {uniform 1/2}")
exclusion = demonstrate_post_quantum_exclusion(pentagon, theory)
print(f"\naugmented theory '{exclusion.theory_label}':")
for claim in exclusion.narrative:
    print(f"  [{'ok' if claim.passed else 'FAIL'}] {claim.description}")

# The heptagon tells the same story without self-complementarity; the numbers
# change (the witness lives on the heptagon's complement) but the structure
# is identical.
heptagon = named_graph("C7")
report7 = post_quantum_witness(heptagon, Behavior((0.5,) * 7))
print(f"\nheptagon: support along target = {report7.theta_value:.9f}, "
      f"product = {report7.inner_product:.9f}, "
      f"post-classical witness: {report7.witness_is_post_classical}")
