"""Exact Steiner-tree packing and extremal generalized connectivity.

Computes the generalized local connectivity kappa(S) (max internally
disjoint S-Steiner trees) and its edge version lambda(S) exactly, packs
spanning trees constructively with the Nash-Williams/Tutte partition
condition as oracle, constructs the extremal families attaining the
closed-form edge-count bounds for k = n and k = n-1 terminal sets, and
verifies the closed forms against isomorph-reduced exhaustive search at
small order.
"""

from .errors import BudgetExceededError, GraphInputError, RegimeError, SteinerPackError
from .families import (
    ClosedFormResult,
    FamilySpec,
    build_family,
    characterization_predicate,
    construct_Gn,
    construct_Hn,
    construct_remark,
    f_closed_form,
    h_from_f,
    k3_lower_bound,
    remark_lower_bound,
)
from .graphs import (
    Graph,
    TreeCertificate,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edges,
    hamiltonian_cycle,
    mask_of,
    parse_graph6,
    path_graph,
    second_min_degree_vertex,
    star_graph,
    validate_tree_certificate,
    write_graph6,
)
from .kernel import BACKEND
from .search import (
    ExtremalReport,
    brute_force_extremal,
    enumerate_graphs,
    is_isomorphic,
    verify_characterization,
    verify_observations,
)
from .spanning import (
    PackingCertificate,
    Partition,
    check_sufficiency,
    cross_edge_count,
    max_spanning_tree_packing,
    nash_williams_check,
    partition_from_blocks,
    validate_packing,
)
from .steiner import (
    ConnectivityProfile,
    greedy_star_tree,
    kappa_S,
    lambda_S,
    lemma4_bound,
    lemma56_upper_bounds,
    peel_lower_bound,
    profile,
)

__version__ = "0.1.0"
