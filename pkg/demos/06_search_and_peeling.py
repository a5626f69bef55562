"""Search utilities: wheels inside saturated graphs, and small-vertex peeling.

Every K_(l+1)-saturated graph that is not complete multipartite contains a
wheel-like subgraph.  We check that over all saturated graphs on at most
seven vertices, then peel low-degree vertices from a random graph.
"""

import random
from itertools import combinations

from hypersat import Graph, find_wheel_subgraph, is_complete_multipartite, peel_small_vertices, saturated_graphs

for l in (2, 3):
    total = with_wheel = 0
    for n in range(1, 8):
        for G in saturated_graphs(n, l):
            total += 1
            w = find_wheel_subgraph(G, l)
            assert (w is None) == is_complete_multipartite(G)
            with_wheel += w is not None
    print(f"l={l}: {total} saturated graphs, {with_wheel} contain a wheel, the rest are complete multipartite")

rng = random.Random(5)
G = Graph.from_edges(30, [e for e in combinations(range(30), 2) if rng.random() < 0.25])
res = peel_small_vertices(G, 2, "1/10")
print(f"\npeeling a random graph on 30 vertices: deleted {len(res.deleted)}, kept {len(res.kept)}")
