"""Correlation sets of exclusivity graphs and their anti-blocking duality."""

from .errors import (
    ExlabError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    SolverError,
)
from .graphs import (
    Graph,
    ProductIndexMap,
    complement,
    disjunctive_product,
    enumerate_graphs,
    find_isomorphism,
    is_isomorphic,
    is_self_complementary,
    named_graph,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .cliques import (
    independence_number,
    is_clique,
    is_independent,
    maximal_cliques,
    maximal_independent_sets,
)
from .lp import LpProblem, LpSolution, fractional_packing, solve_lp
from .corners import (
    Behavior,
    ConvexCorner,
    MembershipResult,
    antiblocker,
    corner_from_json,
    corner_subset,
    corner_to_json,
    equal,
    hrep,
    hrep_vertices,
    membership,
    qstab,
    stab,
    support,
    vrep,
)
from .sdp import (
    DEFAULT_TOLERANCES,
    QuantumRealization,
    SdpProblem,
    SdpSolution,
    SdpTolerances,
    ThetaMembership,
    ThetaResult,
    extract_realization,
    lovasz_theta,
    solve_sdp,
    th_membership,
)
from .ep import (
    AugmentedTheory,
    DualityReport,
    ExclusionReport,
    SelfDualityReport,
    WitnessReport,
    YanConstruction,
    demonstrate_post_quantum_exclusion,
    ep_product,
    largest_ep_theory,
    post_quantum_witness,
    sample_quantum_self_duality,
    verify_antiblocking_dualities,
    yan_construction,
)

__version__ = "0.1.0"
