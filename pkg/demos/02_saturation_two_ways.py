"""Saturation can be decided on the hypergraph or on its pair shadow.

An r-graph H is saturated for the (l+1)-clique family exactly when its
shadow graph is K_r-maximal among K_(l+1)-free graphs and every r-clique of
the shadow is already an edge of H.  Here both checkers run over every
3-graph on five vertices, and the verdicts never differ.
"""

from collections import Counter
from itertools import combinations

from hypersat import Hypergraph, count_cliques, is_saturated_direct, is_saturated_via_shadow, shadow_graph

triples = list(combinations(range(5), 3))
verdicts = Counter()
for mask in range(1 << len(triples)):
    H = Hypergraph(3, 5, tuple(t for i, t in enumerate(triples) if mask >> i & 1))
    a = is_saturated_direct(H, 3).is_saturated
    b = is_saturated_via_shadow(H, 3).is_saturated
    assert a == b
    assert len(H) <= count_cliques(shadow_graph(H), 3)
    verdicts[a] += 1

print(f"{verdicts[True]} saturated and {verdicts[False]} unsaturated 3-graphs on 5 vertices")
print("direct and shadow checkers agree on all of them")

# a report carries a witness when saturation fails
H = Hypergraph(3, 5, ((0, 1, 2), (0, 3, 4)))
rep = is_saturated_direct(H, 3)
print("\nexample: edges", H.edges)
print("  free:", rep.is_free, " saturated:", rep.is_saturated, " addable edge:", rep.non_saturating_edge)
