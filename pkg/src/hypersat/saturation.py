"""Freeness and saturation predicates for the family of (l+1)-sets with all pairs covered.

An r-graph contains a member of the family exactly when some (l+1)-set has
every pair covered by an edge, i.e. when its pair graph has an (l+1)-clique.
Two saturation checkers are provided and kept deliberately separate:

* :func:`is_saturated_direct` tries every missing r-set and asks whether its
  addition covers a new (l+1)-set.
* :func:`is_saturated_via_shadow` checks that every r-clique of the pair
  graph is already an edge and that the pair graph is K_r-maximal
  K_{l+1}-free.

Agreement between them is a property test, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cliques import (
    PreconditionError,
    count_cliques,
    find_clique,
    find_clique_in,
    find_clique_through,
    iter_cliques,
)
from .hypercore import Graph, Hypergraph, HypergraphError, shadow_graph


@dataclass(frozen=True)
class SaturationReport:
    is_free: bool
    is_saturated: bool
    violating_member: tuple[int, ...] | None = None
    non_saturating_edge: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.is_saturated


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise HypergraphError(msg)


def contains_member(H: Hypergraph | Graph, l: int) -> tuple[int, ...] | None:
    """An (l+1)-set whose pairs are all covered by edges of ``H``, or ``None``."""
    r = 2 if isinstance(H, Graph) else H.r
    _need(l + 1 >= r, f"need l+1 >= r (l={l}, r={r})")
    return find_clique(shadow_graph(H), l + 1)


def is_free(H: Hypergraph | Graph, l: int) -> bool:
    return contains_member(H, l) is None


def is_saturated_direct(H: Hypergraph, l: int) -> SaturationReport:
    """Saturation straight from the definition.

    For each r-set ``E`` not in ``H`` (lexicographic order) the pair graph of
    ``H + E`` is the old one plus the pairs of ``E``; any new covered
    (l+1)-set must use one of those new pairs.
    """
    _need(l + 1 >= H.r, f"need l+1 >= r (l={l}, r={H.r})")
    G = shadow_graph(H)
    member = find_clique(G, l + 1)
    if member is not None:
        return SaturationReport(False, False, violating_member=member)
    edges = H.edge_set
    adj = G.adj
    for E in combinations(range(H.n), H.r):
        if E in edges:
            continue
        new = [(u, v) for u, v in combinations(E, 2) if not adj[u] >> v & 1]
        if not new:
            return SaturationReport(True, False, non_saturating_edge=E)
        bumped = list(adj)
        for u, v in new:
            bumped[u] |= 1 << v
            bumped[v] |= 1 << u
        if find_clique_through(bumped, new, l + 1) is None:
            return SaturationReport(True, False, non_saturating_edge=E)
    return SaturationReport(True, True)


def saturating_pairs(G: Graph, l: int) -> set[tuple[int, int]]:
    """Non-edges whose addition alone creates a K_{l+1}."""
    adj = G.adj
    return {(u, v) for u, v in G.non_edges() if find_clique_in(adj, adj[u] & adj[v], l - 1) is not None}


def non_saturating_pair(G: Graph, l: int) -> tuple[int, int] | None:
    """First non-edge (lexicographic) whose addition keeps ``G`` K_{l+1}-free."""
    adj = G.adj
    for u, v in G.non_edges():
        if find_clique_in(adj, adj[u] & adj[v], l - 1) is None:
            return (u, v)
    return None


def is_graph_saturated(G: Graph, l: int) -> bool:
    """K_{l+1}-free and every non-edge creates a K_{l+1}."""
    return find_clique(G, l + 1) is None and non_saturating_pair(G, l) is None


def kr_maximal_violation(G: Graph, r: int, l: int) -> tuple[str, tuple[int, ...]] | None:
    """Why ``G`` fails to be K_r-maximal K_{l+1}-free, or ``None`` if it is.

    Returns ``("clique", K)`` for a K_{l+1} in ``G`` or ``("rset", U)`` for an
    r-set whose completion increases the K_r count but creates no K_{l+1}.

    Only completions of single r-sets are tried: any edge set that raises
    the K_r count completes some r-set ``U``, and ``G`` plus the missing
    pairs of ``U`` is a subgraph of ``G`` plus that edge set.
    """
    _need(l >= r >= 2, f"need l >= r >= 2 (l={l}, r={r})")
    K = find_clique(G, l + 1)
    if K is not None:
        return ("clique", K)
    sat = saturating_pairs(G, l)
    if len(sat) == G.n * (G.n - 1) // 2 - G.edge_count:
        return None
    adj = G.adj
    for U in combinations(range(G.n), r):
        missing = [(u, v) for u, v in combinations(U, 2) if not adj[u] >> v & 1]
        if not missing or any(p in sat for p in missing):
            continue
        bumped = list(adj)
        for u, v in missing:
            bumped[u] |= 1 << v
            bumped[v] |= 1 << u
        if find_clique_through(bumped, missing, l + 1) is None:
            return ("rset", U)
    return None


def is_kr_maximal_free(G: Graph, r: int, l: int) -> bool:
    return kr_maximal_violation(G, r, l) is None


def is_saturated_via_shadow(H: Hypergraph, l: int) -> SaturationReport:
    """Saturation through the pair graph: every r-clique is an edge, and the
    pair graph is K_r-maximal K_{l+1}-free."""
    _need(l + 1 >= H.r >= 3, f"need l+1 >= r >= 3 (l={l}, r={H.r})")
    G = shadow_graph(H)
    member = find_clique(G, l + 1)
    if member is not None:
        return SaturationReport(False, False, violating_member=member)
    edges = H.edge_set
    for K in iter_cliques(G, H.r):
        if K not in edges:
            return SaturationReport(True, False, non_saturating_edge=K)
    if l + 1 == H.r:
        # completing any r-set already creates K_{l+1} = K_r
        return SaturationReport(True, True)
    why = kr_maximal_violation(G, H.r, l)
    if why is not None:
        return SaturationReport(True, False, non_saturating_edge=why[1])
    return SaturationReport(True, True)


def saturated_completion(G: Graph, l: int, check_r: int | None = None) -> Graph:
    """Add non-edges in lexicographic order while the graph stays K_{l+1}-free.

    Adding edges can only turn admissible non-edges inadmissible, so a single
    lexicographic pass equals "repeatedly add the smallest admissible
    non-edge".  With ``check_r`` given and ``G`` K_r-maximal, the K_r count is
    verified unchanged.
    """
    K = find_clique(G, l + 1)
    if K is not None:
        raise PreconditionError(f"input contains K_{l + 1}", K)
    adj = list(G.adj)
    for u, v in G.non_edges():
        if find_clique_in(adj, adj[u] & adj[v], l - 1) is None:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    out = Graph(G.n, adj)
    if check_r is not None and l >= check_r and is_kr_maximal_free(G, check_r, l):
        before, after = count_cliques(G, check_r), count_cliques(out, check_r)
        if before != after:
            raise RuntimeError(f"completion changed the K_{check_r} count ({before} -> {after})")
    return out
