"""A dense non-partite saturated graph built from small gadgets.

The gadget G_(l,s) is stitched from copies of complete bipartite graphs.
Padding it into l balanced classes and completing to a K_(l+1)-saturated
graph yields a 98-vertex graph whose lifted triangles make a saturated
3-graph far from l-partite, yet with almost the Turán number of edges.
"""

from hypersat import (
    Graph,
    PSSParams,
    is_l_partite,
    is_saturated_via_shadow,
    lift_cliques_to_rgraph,
    max_complete_multipartite_induced,
    pss_deficit_check,
    pss_full,
    pss_gls,
    turan_count,
)

g = pss_gls(3, 2)
print(f"gadget G_(3,2): {g.n} vertices, {g.edge_count} edges")

c = pss_full(PSSParams(3, 2, 98, Graph.complete(2)))
G = c.graph
print(f"completed graph: {G.n} vertices, {G.edge_count} edges, classes {[len(x) for x in c.classes]}")
print("3-colourable:", is_l_partite(G, 3) is not None)

H = lift_cliques_to_rgraph(G, 3)
print(f"lifted 3-graph: {len(H)} edges vs t_3(98,3) = {turan_count(98, 3, 3)}")
print("saturated via shadow:", bool(is_saturated_via_shadow(H, 3)))

chk = pss_deficit_check(len(H), 98, 3, 3, 2)
print("deficit bound:", chk.holds, "(at this size the error term already exceeds the Turán count)")

best = max_complete_multipartite_induced(G, 3)
print(f"largest induced complete 3-partite subgraph: {best.size} of 98 vertices (exact: {best.exact})")
