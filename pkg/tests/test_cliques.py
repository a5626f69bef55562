import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import random_graph
from hypersat import (
    Graph,
    HypergraphError,
    PreconditionError,
    clique_counts,
    common_neighborhood,
    count_cliques,
    cycle_graph,
    degeneracy_order,
    find_clique,
    fisher_ryan_check,
    is_clique,
    is_kt_free,
    iter_cliques,
    shadow_graph,
    t_plus,
    turan_graph,
    wheel,
    wheel_blowup_3graph,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def make_free(rng, n, p, ell):
    G = random_graph(rng, n, p)
    while (K := find_clique(G, ell + 1)) is not None:
        G = G.without_edges([rng.choice(list(combinations(K, 2)))])
    return G


K4 = Graph.complete(4)
C5 = cycle_graph(5)


@pytest.mark.parametrize(
    "G,t,expected",
    [(K4, 3, 4), (C5, 3, 0), (turan_graph(5, 3), 3, 4), (K4, 1, 4), (K4, 4, 1), (K4, 5, 0)],
)
def test_count_examples(G, t, expected):
    assert count_cliques(G, t) == expected


def test_turan_triangles_match_transversals():
    G = turan_graph(5, 3)
    assert count_cliques(G, 3) == oracles.count_cliques(5, oracles.graph_edges(G), 3) == 2 * 2 * 1


def test_count_rejects_t0():
    with pytest.raises(HypergraphError):
        count_cliques(K4, 0)


@given(graphs(), st.integers(1, 6))
def test_count_matches_bruteforce(G, t):
    assert count_cliques(G, t) == oracles.count_cliques(G.n, oracles.graph_edges(G), t)


@given(graphs(max_n=8), st.integers(2, 5))
def test_iter_cliques_exact_and_deterministic(G, t):
    got = list(iter_cliques(G, t))
    assert len(got) == len(set(got)) == count_cliques(G, t)
    assert all(is_clique(G, c) and list(c) == sorted(c) for c in got)
    assert got == list(iter_cliques(G, t))


@given(graphs(max_n=9), st.data())
def test_removing_edge_is_monotone(G, data):
    if not G.edge_count:
        return
    e = data.draw(st.sampled_from(G.edges()))
    H = G.without_edges([e])
    for t in range(1, 6):
        assert count_cliques(H, t) <= count_cliques(G, t)


def test_degeneracy_order_is_permutation():
    G = turan_graph(9, 3)
    assert sorted(degeneracy_order(G)) == list(range(9))


# --- freeness ---------------------------------------------------------------------


def test_freeness_examples():
    assert is_kt_free(C5, 3)
    K222 = turan_graph(6, 3)
    assert is_kt_free(K222, 4)
    tri = find_clique(K222, 3)
    assert tri is not None and not is_kt_free(K222, 3)
    parts = [{0, 1}, {2, 3}, {4, 5}]
    assert all(len(set(tri) & p) == 1 for p in parts)
    W31, _ = wheel(3, 1)
    assert is_kt_free(W31, 4)
    assert oracles.count_cliques(6, oracles.graph_edges(W31), 4) == 0


def test_kt_free_needs_t2():
    with pytest.raises(HypergraphError):
        is_kt_free(C5, 1)


# --- t_plus -----------------------------------------------------------------------


def test_tplus_examples():
    assert t_plus(K4) == 2
    assert t_plus(C5) is None
    assert t_plus(shadow_graph(wheel_blowup_3graph(3, 14))) == 4


@given(graphs(max_n=9))
def test_tplus_recount(G):
    counts = [sum(1 for w in range(G.n) if G.has_edge(u, w) and G.has_edge(v, w)) for u, v in G.edges()]
    positive = [c for c in counts if c]
    tp = t_plus(G)
    assert tp == (min(positive) if positive else None)
    if tp is not None:
        assert all(c >= tp for c in positive)


# --- common neighbourhood ---------------------------------------------------------


def test_common_neighborhood_examples():
    assert common_neighborhood(K4, {0, 1}) == {2, 3}
    assert common_neighborhood(C5, {0, 2}) == {1}
    T = turan_graph(5, 3)  # parts {0,1}, {2,3}, {4}
    assert common_neighborhood(T, {0, 1}) == {2, 3, 4}


def test_common_neighborhood_empty_set():
    with pytest.raises(HypergraphError):
        common_neighborhood(K4, [])


# --- Fisher-Ryan ------------------------------------------------------------------


def test_fisher_ryan_complete():
    counts, ok = fisher_ryan_check(Graph.complete(3), 3)
    assert counts.counts == (3, 3, 1) and ok


def test_fisher_ryan_c5():
    counts, ok = fisher_ryan_check(C5, 2)
    assert counts.counts == (5, 5) and ok


def test_fisher_ryan_turan():
    counts, ok = fisher_ryan_check(turan_graph(6, 3), 3)
    assert counts.counts == (6, 12, 8) and ok


def test_fisher_ryan_equality_on_complete():
    from fractions import Fraction
    from math import comb

    for ell in range(1, 7):
        counts, ok = fisher_ryan_check(Graph.complete(ell), ell)
        assert ok
        assert all(Fraction(counts[i], comb(ell, i)) == 1 for i in range(1, ell + 1))


def test_fisher_ryan_rejects_nonfree():
    with pytest.raises(PreconditionError) as info:
        fisher_ryan_check(K4, 3)
    assert sorted(info.value.witness) == [0, 1, 2, 3]


def test_fisher_ryan_random_against_highprecision():
    rng = random.Random(7)
    for _ in range(150):
        ell = rng.choice([3, 4])
        G = make_free(rng, rng.randint(1, 12), rng.uniform(0.3, 0.9), ell)
        counts, ok = fisher_ryan_check(G, ell)
        assert ok
        assert oracles.fisher_ryan_holds(counts.counts, ell)
        assert counts[1] == G.n and counts[2] == G.edge_count


def test_clique_counts_invariants():
    G = turan_graph(7, 3)
    cc = clique_counts(G, 3)
    assert cc[1] == 7 and cc[2] == G.edge_count and cc.ell == 3


def test_clique_counts_sequence_protocol():
    cc = clique_counts(Graph.complete(4), 4)
    assert tuple(cc) == (4, 6, 4, 1) and len(cc) == 4
    with pytest.raises(IndexError):
        cc[0]
    with pytest.raises(IndexError):
        cc[5]
