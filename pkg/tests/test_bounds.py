from fractions import Fraction
from math import comb

import networkx as nx
import pytest

from hypersat import (
    Graph,
    HypergraphError,
    PSSParams,
    aes_threshold,
    blowup,
    cycle_graph,
    degree_stability_bound,
    degree_stability_contrapositive,
    degree_stability_epsilon,
    deleted_vertex_bound,
    e1_size,
    e2_size,
    eta,
    f_threshold,
    lift_cliques_to_rgraph,
    pss_deficit_check,
    pss_full,
    threshold,
    turan_count,
    turan_gap,
    turan_graph,
    turan_lower_bound_check,
    verify_aes_instance,
    verify_codegree_instance,
    wheel,
    wheel_blowup_3graph,
)


def test_f_values():
    assert f_threshold(3) == Fraction(2, 7)
    assert f_threshold(4) == Fraction(5, 11)
    assert f_threshold(5) == Fraction(8, 14) == Fraction(4, 7)
    with pytest.raises(HypergraphError):
        f_threshold(2)


def test_aes_values():
    assert aes_threshold(2) == Fraction(2, 5)
    assert aes_threshold(3) == Fraction(5, 8)
    assert aes_threshold(4) == Fraction(8, 11)
    with pytest.raises(HypergraphError):
        aes_threshold(1)


@pytest.mark.parametrize("l", range(3, 30))
def test_f_below_aes(l):
    assert f_threshold(l) < aes_threshold(l)


def test_epsilon_values():
    assert degree_stability_epsilon(3, 3) == Fraction(1, 9) - Fraction(25, 256) == Fraction(31, 2304)
    assert degree_stability_epsilon(4, 3) == 3 * (Fraction(1, 16) - Fraction(64, 1089))
    assert degree_stability_bound(3, 3, 9) == Fraction(25, 256) * 81
    with pytest.raises(HypergraphError):
        degree_stability_epsilon(3, 4)


def test_eta_and_deleted_bound():
    assert eta(3, 3) == Fraction(1, 10**5 * 27 * 125)
    assert deleted_vertex_bound(3, 3, Fraction(1, 10), 100) == 10**6 * 27 * 125 * 10


def test_threshold_wrapper():
    t = threshold("f", l=4)
    assert t.value == Fraction(5, 11) and t.name == "f" and t.params == {"l": 4}
    assert t.times(22) == 10
    assert threshold("epsilon", l=3, r=3).value == Fraction(31, 2304)


def test_wheel_formula_examples():
    assert (e1_size(3, 1), e2_size(3, 1)) == (10, 5)
    assert (e1_size(4, 2), e2_size(4, 2)) == (16, 10)
    assert all(e2_size(l, 0) == 0 for l in range(2, 9))
    with pytest.raises(HypergraphError):
        e1_size(3, 2)


def test_wheel_formulas_against_generator():
    for l in range(2, 9):
        for k in range(l - 1):
            G, w = wheel(l, k)
            R = set(w.r_set)
            assert e1_size(l, k) == G.edge_count
            assert e2_size(l, k) == sum((u in R) != (v in R) for u, v in G.edges())


# --- instance verifiers -----------------------------------------------------------


def test_aes_c5_blowup_tight():
    G, _ = blowup(cycle_graph(5), [2] * 5)
    assert G.min_degree() == 4 == aes_threshold(2) * 10
    assert verify_aes_instance(G, 2)


def test_aes_turan_and_petersen():
    T = turan_graph(9, 3)
    assert T.min_degree() == 6 > aes_threshold(3) * 9
    assert verify_aes_instance(T, 3)
    P = Graph.from_edges(10, nx.petersen_graph().edges())
    assert P.min_degree() == 3 < aes_threshold(2) * 10
    assert verify_aes_instance(P, 2)


def test_aes_vacuous_branches():
    assert verify_aes_instance(Graph.complete(3), 2)  # contains K_3
    assert verify_aes_instance(Graph.complete(4), 2)  # dense but not triangle-free
    assert verify_aes_instance(Graph.empty(4), 2)  # degree 0


def test_codegree_verifier():
    assert verify_codegree_instance(wheel_blowup_3graph(4, 22), 4)
    assert verify_codegree_instance(wheel_blowup_3graph(3, 14), 3)


def test_degree_contrapositive():
    H = wheel_blowup_3graph(4, 22)
    assert degree_stability_contrapositive(H, 4)
    from hypersat import min_degree

    assert min_degree(H) <= degree_stability_bound(4, 3, 22)


# --- Turan bounds -----------------------------------------------------------------


def test_turan_lower_bound_examples():
    assert turan_lower_bound_check(5, 3, 3)
    assert abs(float(turan_gap(5, 3, 3)) + 0.63) < 0.005
    assert turan_lower_bound_check(100, 4, 3)
    assert turan_gap(12, 3, 3) == 0 and turan_gap(12, 4, 2) == 0


def test_turan_lower_bound_grid():
    for r in range(2, 5):
        for l in range(r, 7):
            for n in range(0, 201):
                assert turan_lower_bound_check(n, l, r), (n, l, r)


def test_turan_gap_nonpositive():
    # balanced parts maximise e_r, so the gap is never positive
    for n in range(0, 60):
        for l, r in [(3, 2), (3, 3), (4, 3), (5, 4)]:
            assert turan_gap(n, l, r) <= 0


# --- PSS deficit ------------------------------------------------------------------


def test_pss_deficit_holds_on_construction():
    c = pss_full(PSSParams(3, 2, 98, Graph.complete(2)))
    H = lift_cliques_to_rgraph(c.graph, 3)
    chk = pss_deficit_check(len(H), 98, 3, 3, 2)
    assert chk.holds
    assert chk.turan == turan_count(98, 3, 3)
    assert chk.linear_term == Fraction(comb(3, 3) * 3 * 2 * 98**2, 27)


def test_pss_deficit_is_weak_at_desk_scale():
    # the error term exceeds t_3(98, 3) outright, so even 0 edges pass at n = 98
    assert pss_deficit_check(0, 98, 3, 3, 2).holds


def test_pss_deficit_can_fail():
    n = 10_000
    t = turan_count(n, 3, 3)
    assert not pss_deficit_check(0, n, 3, 3, 2).holds
    assert pss_deficit_check(t, n, 3, 3, 2).holds
    # the exact l-th power comparison agrees with a float evaluation away from the boundary
    chk = pss_deficit_check(t // 2, n, 3, 3, 2)
    slack = t // 2 - t + float(chk.linear_term + chk.gadget_term)
    assert chk.holds == (slack >= -(n ** (2 + 1 / 3)))
