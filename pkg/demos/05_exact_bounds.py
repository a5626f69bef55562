"""Thresholds, clique-count inequalities and minimum-degree certificates.

Every quantity is an exact Fraction, so comparisons never round.
"""

import random
from itertools import combinations

from hypersat import (
    Graph,
    aes_threshold,
    blowup,
    cycle_graph,
    degree_stability_epsilon,
    f_threshold,
    find_clique,
    fisher_ryan_check,
    turan_gap,
    verify_aes_instance,
)

print("l   f(l)    AES threshold")
for l in range(3, 8):
    print(f"{l}   {str(f_threshold(l)):<6}  {aes_threshold(l)}")
print("epsilon(3,3) =", degree_stability_epsilon(3, 3))
print("Turán gap at (5,3,3):", float(turan_gap(5, 3, 3)))

# clique counts of a random K_5-free graph obey the normalised power-mean chain
rng = random.Random(1)
G = Graph.from_edges(11, [e for e in combinations(range(11), 2) if rng.random() < 0.7])
while (K := find_clique(G, 5)) is not None:
    G = G.without_edges([K[:2]])
counts, ok = fisher_ryan_check(G, 4)
print("\nclique counts", tuple(counts), "chain holds:", ok)

# balanced C5 blowups sit exactly at the triangle-free threshold 2n/5
for m in range(1, 5):
    B, _ = blowup(cycle_graph(5), [m] * 5)
    print(f"C5 blowup n={5 * m}: min degree {B.min_degree()}, 2n/5 = {aes_threshold(2) * 5 * m}, certified {verify_aes_instance(B, 2)}")
