"""Exact, desk-scale tools for saturated uniform hypergraphs and their shadows."""

from .bounds import (
    DeficitCheck,
    Threshold,
    aes_threshold,
    degree_stability_bound,
    degree_stability_contrapositive,
    degree_stability_epsilon,
    deleted_vertex_bound,
    e1_size,
    e2_size,
    eta,
    f_threshold,
    pss_deficit_check,
    threshold,
    turan_gap,
    turan_lower_bound_check,
    verify_aes_instance,
    verify_codegree_instance,
)
from .cliques import (
    CliqueCounts,
    PreconditionError,
    clique_counts,
    common_neighborhood,
    count_cliques,
    degeneracy_order,
    find_clique,
    fisher_ryan_check,
    is_clique,
    is_kt_free,
    iter_cliques,
    t_plus,
    triangle_count,
)
from .constructions import (
    Gadget,
    PSSConstruction,
    PSSParams,
    WheelBlowup,
    WheelWitness,
    blowup,
    complete_multipartite,
    cycle_graph,
    elementary_symmetric,
    lift_cliques_to_rgraph,
    pss_base,
    pss_full,
    pss_gadget,
    pss_gls,
    pss_gls_gadget,
    pss_gls_vertex_formula,
    turan_count,
    turan_graph,
    turan_hypergraph,
    turan_parts,
    wheel,
    wheel_blowup,
    wheel_blowup_3graph,
    wheel_blowup_edge_count,
)
from .hypercore import (
    CodegreeProfile,
    Graph,
    Hypergraph,
    HypergraphError,
    Partition,
    as_graph,
    codegree_profile,
    color_graph,
    degree,
    degrees,
    is_l_partite,
    link,
    min_degree,
    min_positive_codegree,
    new_hypergraph,
    shadow,
    shadow_graph,
)
from .saturation import (
    SaturationReport,
    contains_member,
    is_free,
    is_graph_saturated,
    is_kr_maximal_free,
    is_saturated_direct,
    is_saturated_via_shadow,
    kr_maximal_violation,
    non_saturating_pair,
    saturated_completion,
)
from .search import (
    GuardExceeded,
    MultipartiteResult,
    PeelResult,
    TuranSearchResult,
    all_graphs,
    brute_force_turan,
    canonical_form,
    complete_multipartite_partition,
    false_twin_classes,
    find_wheel_subgraph,
    graph_representatives,
    is_complete_multipartite,
    max_complete_multipartite_induced,
    peel_small_vertices,
    saturated_graphs,
)

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
