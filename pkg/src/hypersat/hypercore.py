"""Core data model: uniform hypergraphs, bitset graphs, shadows, links and co-degrees.

Vertices are dense integers ``0..n-1``.  Edges of a :class:`Hypergraph` are
ascending tuples and the edge list is kept in lexicographic order, so two
hypergraphs with the same edge set are equal and serialize identically.

:class:`Graph` stores one neighbour bitmask (a Python ``int``) per vertex;
common neighbourhoods are single ``&`` operations, which is what the
clique and saturation code leans on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class HypergraphError(ValueError):
    """Raised for malformed edges or out-of-range arguments."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices ``0..n-1``.

    Build instances with :func:`new_hypergraph`, which validates and
    canonicalizes; the constructor itself trusts its input.
    """

    r: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.edges)

    def __contains__(self, edge: object) -> bool:
        if not isinstance(edge, (tuple, list, set, frozenset)):
            return False
        return tuple(sorted(edge)) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.edges)

    def with_edge(self, edge: Iterable[int]) -> Hypergraph:
        return new_hypergraph(self.r, self.n, [*self.edges, tuple(edge)])

    def without_edge(self, edge: Iterable[int]) -> Hypergraph:
        e = tuple(sorted(edge))
        return Hypergraph(self.r, self.n, tuple(x for x in self.edges if x != e))

    def to_graph(self) -> Graph:
        if self.r != 2:
            raise HypergraphError(f"only 2-uniform hypergraphs convert to Graph (r={self.r})")
        return Graph.from_edges(self.n, self.edges)

    def pair_graph(self) -> Graph:
        """The graph of pairs covered by an edge (the (r-2)-th shadow)."""
        adj = [0] * self.n
        for e in self.edges:
            m = to_mask(e)
            for v in e:
                adj[v] |= m
        for v in range(self.n):
            adj[v] &= ~(1 << v)
        return Graph(self.n, tuple(adj))


def new_hypergraph(r: int, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate ``edges`` and return the canonical r-graph on ``n`` vertices.

    Duplicate edges (in any vertex order) collapse to one.

    >>> len(new_hypergraph(3, 4, [{0, 1, 2}, (2, 1, 0)]))
    1
    """
    if r < 1:
        raise HypergraphError(f"uniformity must be positive (r={r})")
    if n < 0:
        raise HypergraphError(f"vertex count must be non-negative (n={n})")
    canon = set()
    for raw in edges:
        e = tuple(sorted(raw))
        if len(set(e)) != r or len(e) != r:
            raise HypergraphError(f"edge {tuple(raw)} does not have exactly {r} distinct vertices")
        for v in e:
            if not (isinstance(v, int) and 0 <= v < n):
                raise HypergraphError(f"edge {e}: vertex {v} out of range (n={n})")
        canon.add(e)
    return Hypergraph(r, n, tuple(sorted(canon)))


class Graph:
    """Simple undirected graph with bitmask adjacency.

    ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge.  Instances are treated
    as immutable; mutate-style helpers return new graphs.
    """

    __slots__ = ("n", "adj", "edge_count", "__weakref__")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)
        self.edge_count = sum(a.bit_count() for a in self.adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        adj = [0] * n
        for e in edges:
            u, v = e
            if u == v:
                raise HypergraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise HypergraphError(f"edge {(u, v)}: vertex out of range (n={n})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        full = self.vertex_mask
        out = []
        for u in range(self.n):
            missing = (full & ~self.adj[u]) >> (u + 1)
            for v in iter_bits(missing):
                out.append((u, u + 1 + v))
        return out

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, [full & ~a & ~(1 << v) for v, a in enumerate(self.adj)])

    def with_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        adj = list(self.adj)
        for u, v in pairs:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, adj)

    def without_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        adj = list(self.adj)
        for u, v in pairs:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the old labels."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            adj.append(to_mask(pos[u] for u in iter_bits(self.adj[v]) if u in pos))
        return Graph(len(old), adj), old

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = to_mask(perm[u] for u in iter_bits(self.adj[v]))
        return Graph(self.n, adj)

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, [*self.adj, *(a << shift for a in other.adj)])

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(2, self.n, tuple(self.edges()))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def as_graph(G: Graph | Hypergraph) -> Graph:
    if isinstance(G, Graph):
        return G
    return G.to_graph()


@dataclass(frozen=True)
class Partition:
    """Ordered disjoint vertex classes covering ``ground``."""

    classes: tuple[tuple[int, ...], ...]
    ground: frozenset[int] = field(default=frozenset())

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for c in self.classes:
            if seen.intersection(c):
                raise HypergraphError("partition classes overlap")
            seen.update(c)
        ground = self.ground or frozenset(seen)
        if seen != ground:
            raise HypergraphError("partition classes do not cover the ground set")
        object.__setattr__(self, "ground", frozenset(ground))

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def normalized(self) -> Partition:
        """Drop empty classes; sort each class and order classes by smallest member."""
        cls = sorted((tuple(sorted(c)) for c in self.classes if c), key=lambda c: c[0])
        return Partition(tuple(cls), self.ground)

    def is_proper_for(self, H: Hypergraph) -> bool:
        """True iff no edge of ``H`` meets a class twice."""
        where = self.class_of()
        return all(len({where[v] for v in e}) == len(e) for e in H.edges)


@dataclass(frozen=True)
class CodegreeProfile:
    """Containment counts for every (r-1)-set lying in at least one edge."""

    pairs: dict[tuple[int, ...], int]
    min_positive: int | None

    def spectrum(self) -> set[int]:
        return set(self.pairs.values())


def _check_vertex(H: Hypergraph | Graph, v: int) -> None:
    if not 0 <= v < H.n:
        raise HypergraphError(f"vertex {v} out of range (n={H.n})")


def shadow(H: Hypergraph, i: int = 1) -> Hypergraph:
    """The i-th shadow: all (r-i)-sets contained in some edge of ``H``."""
    if not 1 <= i <= H.r - 1:
        raise HypergraphError(f"shadow level must be in [1, {H.r - 1}] (got {i})")
    k = H.r - i
    sets = {s for e in H.edges for s in combinations(e, k)}
    return Hypergraph(k, H.n, tuple(sorted(sets)))


def shadow_graph(H: Hypergraph | Graph) -> Graph:
    """The (r-2)-th shadow as a :class:`Graph`; a graph is its own shadow."""
    if isinstance(H, Graph):
        return H
    if H.r == 2:
        return H.to_graph()
    return H.pair_graph()


def link(H: Hypergraph, v: int) -> Hypergraph:
    """The (r-1)-graph ``{A : A + {v} in H}``."""
    _check_vertex(H, v)
    rest = tuple(tuple(u for u in e if u != v) for e in H.edges if v in e)
    return Hypergraph(H.r - 1, H.n, tuple(sorted(rest)))


def degree(H: Hypergraph, v: int) -> int:
    _check_vertex(H, v)
    return sum(1 for e in H.edges if v in e)


def degrees(H: Hypergraph) -> list[int]:
    d = [0] * H.n
    for e in H.edges:
        for v in e:
            d[v] += 1
    return d


def min_degree(H: Hypergraph) -> int:
    return min(degrees(H), default=0)


def codegree_profile(H: Hypergraph) -> CodegreeProfile:
    counts: dict[tuple[int, ...], int] = {}
    for e in H.edges:
        for s in combinations(e, H.r - 1):
            counts[s] = counts.get(s, 0) + 1
    pairs = dict(sorted(counts.items()))
    return CodegreeProfile(pairs, min(pairs.values()) if pairs else None)


def min_positive_codegree(H: Hypergraph) -> int | None:
    return codegree_profile(H).min_positive


def color_graph(G: Graph, k: int) -> list[int] | None:
    """A proper ``k``-colouring of ``G`` by exhaustive backtracking, or ``None``.

    Uncoloured vertices are picked first-fail (fewest free colours, then
    highest degree, then lowest index); a fresh colour is only ever the
    lowest unused one, which removes colour-permutation symmetry.
    """
    n = G.n
    if n == 0:
        return []
    if k <= 0:
        return None
    adj = G.adj
    deg = G.degrees()
    color = [-1] * n
    # forbidden[v]: bitmask of colours already used by coloured neighbours
    forbidden = [0] * n
    full = (1 << k) - 1

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if color[v] >= 0:
                continue
            free = (full & ~forbidden[v]).bit_count()
            key = (free, -deg[v], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        avail = full & ~forbidden[v]
        limit = min(used + 1, k)
        for c in range(limit):
            if not avail >> c & 1:
                continue
            color[v] = c
            touched = []
            bit = 1 << c
            for u in iter_bits(adj[v]):
                if color[u] < 0 and not forbidden[u] & bit:
                    forbidden[u] |= bit
                    touched.append(u)
            if all(full & ~forbidden[u] for u in touched) and solve(done + 1, max(used, c + 1)):
                return True
            for u in touched:
                forbidden[u] &= ~bit
            color[v] = -1
        return False

    return list(color) if solve(0, 0) else None


def is_l_partite(H: Hypergraph | Graph, l: int) -> Partition | None:
    """A partition into at most ``l`` classes with no edge meeting a class twice.

    Works on the pair graph: a hypergraph is l-partite exactly when its
    (r-2)-th shadow is properly l-colourable.
    """
    if l < 1:
        raise HypergraphError(f"l must be at least 1 (got {l})")
    G = shadow_graph(H)
    coloring = color_graph(G, l)
    if coloring is None:
        return None
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, []).append(v)
    return Partition(tuple(tuple(c) for c in classes.values()), frozenset(range(G.n))).normalized()
