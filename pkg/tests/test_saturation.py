import random
from itertools import combinations

import pytest
from networkx.generators.atlas import graph_atlas_g

import oracles
from conftest import random_graph, random_hypergraph
from hypersat import (
    Graph,
    Hypergraph,
    HypergraphError,
    PreconditionError,
    contains_member,
    count_cliques,
    cycle_graph,
    is_free,
    is_graph_saturated,
    is_kr_maximal_free,
    is_saturated_direct,
    is_saturated_via_shadow,
    kr_maximal_violation,
    new_hypergraph,
    non_saturating_pair,
    saturated_completion,
    shadow_graph,
    turan_graph,
    turan_hypergraph,
    wheel_blowup_3graph,
)

T353 = turan_hypergraph(5, 3, 3)


def atlas(n):
    return [Graph.from_edges(n, g.edges()) for g in graph_atlas_g() if g.number_of_nodes() == n]


# --- membership -------------------------------------------------------------------


def test_complete_3graph_contains_member():
    H = new_hypergraph(3, 4, combinations(range(4), 3))
    assert contains_member(H, 3) == (0, 1, 2, 3)


def test_turan_is_free():
    assert contains_member(T353, 3) is None


def test_turan_plus_nonedge_has_member():
    for E in combinations(range(5), 3):
        if E in T353:
            continue
        H = T353.with_edge(E)
        S = contains_member(H, 3)
        assert S is not None
        assert oracles.contains_member(5, H.edges, 3) is not None
        assert all(p in oracles.pairs_covered(H.edges) for p in combinations(S, 2))


def test_membership_needs_l_plus_1_ge_r():
    with pytest.raises(HypergraphError):
        contains_member(new_hypergraph(4, 5, [(0, 1, 2, 3)]), 2)


def test_membership_matches_oracle(rng):
    for _ in range(200):
        n, r = rng.randint(3, 7), rng.choice([2, 3])
        l = rng.randint(r - 1, 4)
        H = random_hypergraph(rng, n, r, rng.uniform(0.1, 0.7))
        assert is_free(H, l) == (oracles.contains_member(n, H.edges, l) is None)


# --- direct saturation ------------------------------------------------------------


def test_turan_saturated_direct():
    rep = is_saturated_direct(T353, 3)
    assert rep.is_free and rep.is_saturated and rep.non_saturating_edge is None
    assert sum(1 for E in combinations(range(5), 3) if E not in T353) == 6


def test_single_edge_not_saturated():
    rep = is_saturated_direct(new_hypergraph(3, 5, [(0, 1, 2)]), 3)
    assert rep.is_free and not rep.is_saturated
    assert rep.non_saturating_edge is not None
    assert rep.violating_member is None


def test_wheel_blowup_l4_saturated_direct():
    rep = is_saturated_direct(wheel_blowup_3graph(4, 22), 4)
    assert rep.is_free and rep.is_saturated


def test_nonfree_report_has_member():
    H = new_hypergraph(3, 4, combinations(range(4), 3))
    for fn in (is_saturated_direct, is_saturated_via_shadow):
        rep = fn(H, 3)
        assert not rep.is_free and not rep.is_saturated
        assert rep.violating_member == (0, 1, 2, 3) and rep.non_saturating_edge is None


def test_report_witness_exclusive(rng):
    for _ in range(100):
        H = random_hypergraph(rng, 6, 3, rng.uniform(0.2, 0.8))
        for fn in (is_saturated_direct, is_saturated_via_shadow):
            rep = fn(H, 3)
            assert not rep.is_saturated or rep.is_free
            witnesses = (rep.violating_member is not None) + (rep.non_saturating_edge is not None)
            assert witnesses == (0 if rep.is_saturated else 1)
            assert bool(rep) == rep.is_saturated


def test_direct_matches_oracle_random(rng):
    for _ in range(150):
        n = rng.randint(3, 6)
        H = random_hypergraph(rng, n, 3, rng.uniform(0.3, 0.9))
        assert is_saturated_direct(H, 3).is_saturated == oracles.is_saturated(n, 3, H.edges, 3)


# --- K_r-maximality ---------------------------------------------------------------


def test_kr_maximal_examples():
    assert is_kr_maximal_free(turan_graph(5, 3), 3, 3)
    assert is_kr_maximal_free(cycle_graph(5), 2, 2)
    K222 = turan_graph(6, 3)
    missing = K222.without_edges([K222.edges()[0]])
    why = kr_maximal_violation(missing, 3, 3)
    assert why is not None and why[0] == "rset"
    assert not is_kr_maximal_free(missing, 3, 3)


def test_kr_maximal_witness_kinds():
    assert kr_maximal_violation(Graph.complete(4), 3, 3) == ("clique", (0, 1, 2, 3))
    with pytest.raises(HypergraphError):
        kr_maximal_violation(cycle_graph(5), 3, 2)


def test_rset_reduction_full_quantifier_n5():
    # literal definition over every E' subset of non-edges, one graph per isomorphism class
    for n in range(3, 6):
        for G in atlas(n):
            expected = oracles.kr_maximal_literal(n, oracles.graph_edges(G), 3, 3)
            assert is_kr_maximal_free(G, 3, 3) == expected, G


def test_rset_reduction_bounded_quantifier_n6():
    # every E' lying inside a single 3-set, all 6-vertex classes
    for G in atlas(6):
        expected = oracles.kr_maximal_rset_subsets(6, oracles.graph_edges(G), 3, 3)
        assert is_kr_maximal_free(G, 3, 3) == expected, G


def test_rset_reduction_random_small(rng):
    for _ in range(40):
        n = rng.randint(3, 6)
        G = random_graph(rng, n, rng.uniform(0.3, 0.9))
        assert is_kr_maximal_free(G, 3, 3) == oracles.kr_maximal_literal(n, oracles.graph_edges(G), 3, 3, max_added=3)


# --- saturation via the shadow ----------------------------------------------------


def test_via_shadow_examples():
    assert is_saturated_via_shadow(T353, 3).is_saturated
    minus = T353.without_edge(T353.edges[0])
    rep = is_saturated_via_shadow(minus, 3)
    assert rep.is_free and not rep.is_saturated
    assert rep.non_saturating_edge == T353.edges[0]
    assert is_saturated_via_shadow(wheel_blowup_3graph(3, 14), 3).is_saturated


def test_via_shadow_precondition():
    G = new_hypergraph(2, 4, [(0, 1)])
    with pytest.raises(HypergraphError):
        is_saturated_via_shadow(G, 2)


def test_via_shadow_l_plus_1_eq_r():
    # l + 1 = r: any missing r-set completes a K_r on its own
    for n in (4, 5):
        for mask in range(0, 1 << 10, 37):
            rsets = list(combinations(range(n), 3))
            H = Hypergraph(3, n, tuple(e for i, e in enumerate(rsets) if mask >> i & 1))
            assert is_saturated_via_shadow(H, 2).is_saturated == is_saturated_direct(H, 2).is_saturated


def test_checkers_agree_random_n6(rng):
    for _ in range(200):
        H = random_hypergraph(rng, 6, 3, rng.uniform(0.2, 0.9))
        assert is_saturated_direct(H, 3).is_saturated == is_saturated_via_shadow(H, 3).is_saturated


def test_edges_bounded_by_shadow_cliques():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(3, 8)
        H = random_hypergraph(rng, n, 3, rng.uniform(0.05, 0.9))
        assert len(H) <= count_cliques(shadow_graph(H), 3)


# --- completion -------------------------------------------------------------------


def test_completion_examples():
    T = turan_graph(5, 3)
    assert saturated_completion(T, 3) == T
    out = saturated_completion(Graph.empty(3), 2)
    assert out.edges() == [(0, 1), (0, 2)]
    assert is_graph_saturated(out, 2)
    S = shadow_graph(wheel_blowup_3graph(3, 14))
    assert saturated_completion(S, 3, check_r=3) == S


def test_completion_rejects_nonfree():
    with pytest.raises(PreconditionError):
        saturated_completion(Graph.complete(4), 3)


def test_completion_properties(rng):
    for _ in range(120):
        l = rng.choice([2, 3, 4])
        G = random_graph(rng, rng.randint(1, 10), rng.uniform(0.0, 0.5))
        try:
            out = saturated_completion(G, l)
        except PreconditionError:
            continue
        assert all(out.has_edge(u, v) for u, v in G.edges())
        assert is_graph_saturated(out, l)
        assert non_saturating_pair(out, l) is None
        assert saturated_completion(out, l) == out


def test_completion_preserves_kr_count_when_maximal():
    for G in atlas(6):
        if is_kr_maximal_free(G, 3, 3):
            out = saturated_completion(G, 3, check_r=3)
            assert count_cliques(out, 3) == count_cliques(G, 3)
