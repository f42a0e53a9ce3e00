#!/usr/bin/env python3
# The pentagon experiment: five events, cyclically exclusive.
#
# Three numbers bound the expression S = p(e0) + ... + p(e4), one per theory:
# the classical polytope tops out at the independence number, the quantum set
# at the Lovasz number, and the single-copy exclusivity set at the fractional
# packing number.  For the pentagon they are 2 < sqrt(5) < 5/2, and the walk
# below recomputes all three from scratch.

import math

from exlab import (
    fractional_packing,
    independence_number,
    lovasz_theta,
    maximal_cliques,
    maximal_independent_sets,
    named_graph,
    to_graph6,
)

pentagon = named_graph("C5")
print("pentagon:", pentagon.n, "vertices,", pentagon.edge_count, "edges,",
      "graph6", to_graph6(pentagon))

# The exclusivity structure: maximal cliques are the five edges, and the
# classical deterministic assignments are supported on independent sets.
print("maximal cliques:        ", maximal_cliques(pentagon))
print("maximal independent sets:", maximal_independent_sets(pentagon))

# Classical ceiling: exact branch-and-bound over independent sets.
alpha, witness = independence_number(pentagon, [1] * 5)
print(f"\nalpha   = {alpha}  attained by {witness}")

# Quantum ceiling: the theta-body SDP.  Its optimizer diagonal is itself a
# quantum behavior, here the uniform point at 1/sqrt(5) per event.
theta = lovasz_theta(pentagon, [1] * 5)
print(f"theta   = {theta.value:.9f}  (sqrt(5) = {math.sqrt(5):.9f})")
print("        optimizer behavior:", [round(p, 6) for p in theta.behavior])

# Single-copy exclusivity ceiling: exact rational LP over clique inequalities.
alpha_star, optimizer = fractional_packing(pentagon, [1] * 5)
print(f"alpha*  = {alpha_star}  attained by {optimizer}")

assert float(alpha) < theta.value < float(alpha_star)
print("\nstrict sandwich confirmed: alpha < theta < alpha*")

# Weights change nothing structurally; every quantity scales exactly.
weights = [2, 1, 1, 1, 1]
alpha_w, witness_w = independence_number(pentagon, weights)
theta_w = lovasz_theta(pentagon, weights)
alpha_star_w, _ = fractional_packing(pentagon, weights)
print(f"\nweighted ({weights}): alpha = {alpha_w} at {witness_w}, "
      f"theta = {theta_w.value:.6f}, alpha* = {alpha_star_w}")
