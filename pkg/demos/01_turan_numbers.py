"""Turán numbers for hypergraph cliques, checked by exhaustive search.

For tiny n we can afford to look at every 3-graph.  The largest one that
avoids the clique family turns out to be the balanced complete 3-partite
3-graph, and nothing else up to isomorphism.
"""

from hypersat import brute_force_turan, canonical_form, turan_count, turan_hypergraph

print("n  t_3(n,3)  brute-force max  extremal classes  scanned")
for n in (4, 5, 6):
    res = brute_force_turan(n, 3, 3)
    print(f"{n}  {turan_count(n, 3, 3):>8}  {res.max_edges:>15}  {len(res.extremal_canonical_forms):>16}  {res.count_checked:>7}")
    assert res.extremal_canonical_forms == (canonical_form(turan_hypergraph(n, 3, 3)),)

print("\nThe single extremal class is always the Turán hypergraph itself.")
print("Parts of T_3(6, 3):", turan_hypergraph(6, 3, 3).edges[:4], "...")
