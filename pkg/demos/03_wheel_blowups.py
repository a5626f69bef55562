"""Wheel-like graphs and the 3-graphs obtained by blowing them up.

W_(l,k) glues two (l-1)-cliques along k vertices and adds a top vertex and
a bottom edge.  Blowing up W_(l,l-2) and lifting its triangles gives a
saturated 3-graph that is not l-partite, with minimum positive co-degree
equal to the threshold f(l) times n.
"""

from hypersat import (
    codegree_profile,
    e1_size,
    e2_size,
    f_threshold,
    is_l_partite,
    is_saturated_via_shadow,
    wheel,
    wheel_blowup_3graph,
)

print("l  k  vertices  edges  crossing")
for l in range(2, 6):
    for k in range(l - 1):
        G, _ = wheel(l, k)
        print(f"{l}  {k}  {G.n:>8}  {G.edge_count:>5}  {e2_size(l, k):>8}")
        assert G.edge_count == e1_size(l, k)

for l, n in ((3, 14), (4, 22), (5, 28)):
    H = wheel_blowup_3graph(l, n)
    prof = codegree_profile(H)
    print(
        f"\nl={l}, n={n}: {len(H)} edges, saturated {bool(is_saturated_via_shadow(H, l))}, "
        f"{l}-partite {is_l_partite(H, l) is not None}, {l + 1}-partite {is_l_partite(H, l + 1) is not None}"
    )
    print(f"  positive co-degrees {sorted(prof.spectrum())}, f(l)*n = {f_threshold(l) * n}")
