"""Clique enumeration and counting on bitset graphs.

Enumeration follows a degeneracy ordering: each clique is generated once,
from its earliest vertex in that order, by intersecting later-neighbour
masks.  All results are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator

from .hypercore import Graph, HypergraphError, iter_bits, to_mask


class PreconditionError(ValueError):
    """An input violates an operation's precondition; ``witness`` shows why."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class CliqueCounts:
    ell: int
    counts: tuple[int, ...]  # counts[i-1] = number of copies of K_i

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= len(self.counts):
            raise IndexError(f"clique size {i} outside 1..{len(self.counts)}")
        return self.counts[i - 1]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)


def degeneracy_order(G: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (lowest index on ties)."""
    alive = G.vertex_mask
    deg = G.degrees()
    order = []
    for _ in range(G.n):
        v = min(iter_bits(alive), key=lambda u: (deg[u], u))
        order.append(v)
        alive &= ~(1 << v)
        for u in iter_bits(G.adj[v] & alive):
            deg[u] -= 1
    return order


def _forward_masks(G: Graph) -> list[tuple[int, int]]:
    order = degeneracy_order(G)
    later = G.vertex_mask
    out = []
    for v in order:
        later &= ~(1 << v)
        out.append((v, G.adj[v] & later))
    return out


def _count_in(adj: tuple[int, ...], cand: int, t: int) -> int:
    # number of t-cliques inside the vertex mask ``cand``
    if t == 0:
        return 1
    if t == 1:
        return cand.bit_count()
    if t == 2:
        total = 0
        rest = cand
        while rest:
            low = rest & -rest
            rest ^= low
            total += (adj[low.bit_length() - 1] & rest).bit_count()
        return total
    total = 0
    rest = cand
    while rest.bit_count() >= t:
        low = rest & -rest
        rest ^= low
        total += _count_in(adj, adj[low.bit_length() - 1] & rest, t - 1)
    return total


def count_cliques(G: Graph, t: int) -> int:
    """Exact number of t-cliques (``t = 1`` counts vertices)."""
    if t < 1:
        raise HypergraphError(f"clique size must be positive (got {t})")
    if t == 1:
        return G.n
    return sum(_count_in(G.adj, fwd, t - 1) for _, fwd in _forward_masks(G))


def _iter_in(adj, cand: int, t: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if t == 0:
        yield prefix
        return
    rest = cand
    while rest.bit_count() >= t:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        yield from _iter_in(adj, adj[v] & rest, t - 1, prefix + (v,))


def iter_cliques(G: Graph, t: int) -> Iterator[tuple[int, ...]]:
    """Yield every t-clique once, as a sorted tuple, in a deterministic order."""
    if t < 1:
        raise HypergraphError(f"clique size must be positive (got {t})")
    if t == 1:
        yield from ((v,) for v in range(G.n))
        return
    for v, fwd in _forward_masks(G):
        for c in _iter_in(G.adj, fwd, t - 1, (v,)):
            yield tuple(sorted(c))


def find_clique(G: Graph, t: int) -> tuple[int, ...] | None:
    return next(iter_cliques(G, t), None)


def find_clique_in(adj: tuple[int, ...] | list[int], cand: int, t: int) -> tuple[int, ...] | None:
    """A t-clique inside vertex mask ``cand`` (lowest-index-first search), or ``None``."""
    if t == 0:
        return ()
    rest = cand
    while rest.bit_count() >= t:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        sub = find_clique_in(adj, adj[v] & rest, t - 1)
        if sub is not None:
            return (v, *sub)
    return None


def find_clique_through(adj, pairs: Iterable[tuple[int, int]], t: int) -> tuple[int, ...] | None:
    """A t-clique of ``adj`` containing both ends of one of ``pairs`` (each must be an edge)."""
    for u, v in pairs:
        sub = find_clique_in(adj, adj[u] & adj[v], t - 2)
        if sub is not None:
            return tuple(sorted((u, v, *sub)))
    return None


def is_kt_free(G: Graph, t: int) -> bool:
    if t < 2:
        raise HypergraphError(f"clique size must be at least 2 (got {t})")
    return find_clique(G, t) is None


def clique_counts(G: Graph, ell: int) -> CliqueCounts:
    return CliqueCounts(ell, tuple(count_cliques(G, i) for i in range(1, ell + 1)))


def triangle_count(G: Graph, u: int, v: int) -> int:
    return (G.adj[u] & G.adj[v]).bit_count()


def t_plus(G: Graph) -> int | None:
    """Least number of triangles on an edge, over edges lying in some triangle."""
    best = None
    for u, v in G.edges():
        c = (G.adj[u] & G.adj[v]).bit_count()
        if c and (best is None or c < best):
            best = c
    return best


def common_neighborhood(G: Graph, S: Iterable[int]) -> frozenset[int]:
    S = list(S)
    if not S:
        raise HypergraphError("common neighbourhood of an empty set is undefined")
    m = G.vertex_mask
    for v in S:
        m &= G.adj[v]
    return frozenset(iter_bits(m))


def _root_le(a: Fraction, i: int, b: Fraction, j: int) -> bool:
    # a^(1/i) <= b^(1/j) for non-negative rationals, via a^j <= b^i
    return a**j <= b**i


def fisher_ryan_check(G: Graph, ell: int) -> tuple[CliqueCounts, bool]:
    """Clique counts k_1..k_ell and whether the Fisher-Ryan chain holds.

    The chain ``(k_ell/C(ell,ell))^(1/ell) <= ... <= k_1/C(ell,1)`` is checked
    link by link with integer-power cross comparisons.
    """
    if ell < 1:
        raise HypergraphError(f"ell must be positive (got {ell})")
    witness = find_clique(G, ell + 1)
    if witness is not None:
        raise PreconditionError(f"graph contains K_{ell + 1}", witness)
    counts = clique_counts(G, ell)
    norm = [Fraction(counts[i], comb(ell, i)) for i in range(1, ell + 1)]
    ok = all(_root_le(norm[i], i + 1, norm[i - 1], i) for i in range(1, ell))
    return counts, ok


def has_clique_mask(adj, mask: int) -> bool:
    """True iff the vertex set ``mask`` is a clique."""
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        if rest & ~adj[low.bit_length() - 1]:
            return False
    return True


def is_clique(G: Graph, vertices: Iterable[int]) -> bool:
    return has_clique_mask(G.adj, to_mask(vertices))
