"""Exhaustive and structural search at desk scale.

Guards are explicit: exceeding one raises :class:`GuardExceeded` (or, for
branch and bound, returns a result flagged ``exact=False``); nothing falls
back to an approximation silently.  Defaults can be overridden with the
environment variables ``HYPERSAT_TURAN_GUARD``, ``HYPERSAT_CANON_GUARD`` and
``HYPERSAT_BNB_NODES``.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterator

import numpy as np

from .cliques import _iter_in, find_clique_in, iter_cliques
from .constructions import WheelWitness
from .hypercore import Graph, Hypergraph, HypergraphError, Partition, iter_bits
from .saturation import is_graph_saturated

log = logging.getLogger(__name__)


class GuardExceeded(RuntimeError):
    def __init__(self, what: str, value: int, limit: int):
        super().__init__(f"{what} = {value} exceeds guard {limit}")
        self.what, self.value, self.limit = what, value, limit


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def turan_guard() -> int:
    return _env_int("HYPERSAT_TURAN_GUARD", 24)


def canon_guard() -> int:
    return _env_int("HYPERSAT_CANON_GUARD", 9)


def bnb_node_guard() -> int:
    return _env_int("HYPERSAT_BNB_NODES", 2_000_000)


# --- canonical forms ---------------------------------------------------------


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int16).reshape(-1, n)


def canonical_form(H: Hypergraph | Graph, guard: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least sorted edge list over all relabelings.

    Two hypergraphs on the same vertex count have equal forms iff they are
    isomorphic.  Cost is n! rows, evaluated in numpy chunks.
    """
    if isinstance(H, Graph):
        H = H.to_hypergraph()
    limit = canon_guard() if guard is None else guard
    if H.n > limit:
        raise GuardExceeded("vertex count", H.n, limit)
    if not H.edges:
        return ()
    n, r = H.n, H.r
    E = np.array(H.edges, dtype=np.int64)
    weights = n ** np.arange(r - 1, -1, -1, dtype=np.int64)
    perms = _perms(n)
    best = None
    for start in range(0, len(perms), 40320):
        P = perms[start : start + 40320]
        mapped = np.sort(P[:, E], axis=2)  # (p, m, r)
        codes = np.sort(mapped @ weights, axis=1)  # (p, m)
        i = np.lexsort(codes.T[::-1])[0]
        row = tuple(int(c) for c in codes[i])
        if best is None or row < best:
            best = row
    out = []
    for c in best:
        digits = []
        for _ in range(r):
            c, d = divmod(c, n)
            digits.append(d)
        out.append(tuple(reversed(digits)))
    return tuple(out)


# --- brute-force Turan numbers --------------------------------------------


@dataclass(frozen=True)
class TuranSearchResult:
    n: int
    l: int
    r: int
    max_edges: int
    extremal_canonical_forms: tuple[tuple[tuple[int, ...], ...], ...]
    count_checked: int
    extremal_labeled: int


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(combinations(range(n), 2))}


def _set_pair_mask(s: tuple[int, ...], idx: dict[tuple[int, int], int]) -> int:
    m = 0
    for p in combinations(s, 2):
        m |= 1 << idx[p]
    return m


_LOW_BITS = 16
_MAX_STORED = 200_000


def _turan_block(args) -> tuple[int, list[int]]:
    pm, cliques, low_bits, highs = args
    pm = np.array(pm, dtype=np.uint64)
    Q = np.array(cliques, dtype=np.uint64)
    size = 1 << low_bits
    sh_low = np.zeros(size, dtype=np.uint64)
    pop_low = np.zeros(size, dtype=np.int64)
    for i in range(low_bits):
        h = 1 << i
        sh_low[h : 2 * h] = sh_low[:h] | pm[i]
        pop_low[h : 2 * h] = pop_low[:h] + 1
    best, found = -1, []
    high_pm = [int(x) for x in pm[low_bits:]]
    for h in highs:
        hs = 0
        for j in iter_bits(h):
            hs |= high_pm[j]
        sh = sh_low | np.uint64(hs)
        free = np.ones(size, dtype=bool)
        for q in Q:
            free &= (sh & q) != q
        if not free.any():
            continue
        cnt = pop_low + h.bit_count()
        m = int(cnt[free].max())
        if m < best:
            continue
        hits = np.flatnonzero(free & (cnt == m))
        if m > best:
            best, found = m, []
        if len(found) < _MAX_STORED:
            found.extend(int((h << low_bits) | x) for x in hits[: _MAX_STORED - len(found)])
    return best, found


def brute_force_turan(
    n: int,
    l: int,
    r: int,
    dedup: bool = True,
    guard: int | None = None,
    workers: int = 1,
) -> TuranSearchResult:
    """Enumerate all r-graphs on ``n`` vertices and keep the family-free maxima.

    Hypergraphs are edge-subset bitmasks over the lexicographic list of
    r-sets.  A subset is free iff its pair cover contains no complete
    (l+1)-set; pair covers are built for 2^16 masks at a time in numpy.
    """
    limit = turan_guard() if guard is None else guard
    N = comb(n, r)
    if N > limit:
        raise GuardExceeded("C(n, r)", N, limit)
    if comb(n, 2) > 64:
        raise GuardExceeded("C(n, 2)", comb(n, 2), 64)
    if l + 1 < r:
        raise HypergraphError(f"need l+1 >= r (l={l}, r={r})")
    rsets = list(combinations(range(n), r))
    idx = _pair_index(n)
    pm = [_set_pair_mask(s, idx) for s in rsets]
    cliques = [_set_pair_mask(s, idx) for s in combinations(range(n), l + 1)]
    low = min(N, _LOW_BITS)
    highs = list(range(1 << (N - low)))
    t0 = time.monotonic()
    chunks = [highs[i : i + 64] for i in range(0, len(highs), 64)]
    jobs = [(pm, cliques, low, c) for c in chunks]
    best, found = -1, []

    def merge(res):
        nonlocal best, found
        b, f = res
        if b > best:
            best, found = b, list(f)
        elif b == best:
            found.extend(f)

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for done, res in enumerate(pool.map(_turan_block, jobs), 1):
                merge(res)
                log.info("turan n=%d l=%d r=%d: %d/%d blocks", n, l, r, done, len(jobs))
    else:
        last = t0
        for done, job in enumerate(jobs, 1):
            merge(_turan_block(job))
            now = time.monotonic()
            if now - last > 2.0:
                log.info("turan n=%d l=%d r=%d: %d/%d blocks", n, l, r, done, len(jobs))
                last = now
    found.sort()
    forms: tuple = ()
    if dedup:
        seen = {}
        for mask in found:
            H = Hypergraph(r, n, tuple(rsets[i] for i in iter_bits(mask)))
            seen.setdefault(canonical_form(H), None)
        forms = tuple(sorted(seen))
    log.info("turan n=%d l=%d r=%d done in %.1fs", n, l, r, time.monotonic() - t0)
    return TuranSearchResult(n, l, r, best, forms, 1 << N, len(found))


# --- 5-wheel-like subgraphs ------------------------------------------------


def find_wheel_subgraph(G: Graph, l: int) -> WheelWitness | None:
    """An embedding (not necessarily induced) of some W_{l,k}, largest k first."""
    if l < 2:
        raise HypergraphError(f"need l >= 2 (l={l})")
    for k in range(l - 2, -1, -1):
        w = _find_wheel_k(G, l, k)
        if w is not None:
            return w
    return None


def _find_wheel_k(G: Graph, l: int, k: int) -> WheelWitness | None:
    adj = G.adj
    p = l - 1 - k
    shared = iter_cliques(G, k) if k else iter([()])
    for R in shared:
        common = G.vertex_mask
        for x in R:
            common &= adj[x]
        if common.bit_count() < 3 + 2 * p:
            continue
        for v in iter_bits(common):
            Nv = adj[v] & common
            if Nv.bit_count() < 2 * p:
                continue
            rest = common & ~(1 << v)
            for u1 in iter_bits(rest):
                for u2 in iter_bits(rest & adj[u1] & ~((1 << (u1 + 1)) - 1)):
                    C1 = Nv & adj[u1] & ~(1 << u2)
                    C2 = Nv & adj[u2] & ~(1 << u1)
                    if C1.bit_count() < p or C2.bit_count() < p:
                        continue
                    for P1 in _iter_in(adj, C1, p, ()):
                        m1 = 0
                        for x in P1:
                            m1 |= 1 << x
                        P2 = find_clique_in(adj, C2 & ~m1, p)
                        if P2 is not None:
                            return WheelWitness(
                                l, k, v, (u1, u2),
                                tuple(sorted(R + P1)), tuple(sorted(R + P2)), tuple(R),
                            )
    return None


def complete_multipartite_partition(G: Graph) -> Partition | None:
    """The class partition if ``G`` is complete multipartite (non-adjacency is an equivalence)."""
    full = G.vertex_mask
    seen = 0
    classes = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        cls = full & ~G.adj[v]
        for u in iter_bits(cls):
            if full & ~G.adj[u] != cls:
                return None
        seen |= cls
        classes.append(tuple(iter_bits(cls)))
    return Partition(tuple(classes), frozenset(range(G.n)))


def is_complete_multipartite(G: Graph) -> bool:
    return complete_multipartite_partition(G) is not None


# --- maximum induced complete multipartite subgraph -----------------------


@dataclass(frozen=True)
class MultipartiteResult:
    size: int
    vertices: tuple[int, ...]
    partition: Partition
    exact: bool
    nodes: int


def false_twin_classes(G: Graph) -> list[tuple[int, ...]]:
    """Groups of vertices with identical neighbourhoods (hence pairwise non-adjacent)."""
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(G.adj[v], []).append(v)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


def max_complete_multipartite_induced(G: Graph, l: int, max_nodes: int | None = None) -> MultipartiteResult:
    """Largest ``S`` with ``G[S]`` complete multipartite on at most ``l`` classes.

    False twins are contracted first: if ``S`` uses one vertex of a twin
    group, the rest of the group can join the same class, so some optimum is
    a union of whole groups.  Branch and bound then runs on the weighted
    quotient in descending-degree order.  Each open class keeps the mask of
    groups still able to join it; the bound is the current weight plus the
    weight of remaining groups able to join any class.  When ``max_nodes`` is
    exhausted the best set found so far is returned with ``exact=False``.
    """
    if l < 1:
        raise HypergraphError(f"need l >= 1 (l={l})")
    limit = bnb_node_guard() if max_nodes is None else max_nodes
    groups = false_twin_classes(G)
    q = len(groups)
    head = {g[0]: i for i, g in enumerate(groups)}
    where = {v: head[g[0]] for g in groups for v in g}
    adj = [0] * q
    for i, g in enumerate(groups):
        for u in iter_bits(G.adj[g[0]]):
            adj[i] |= 1 << where[u]
    weight = [len(g) for g in groups]
    full = (1 << q) - 1
    nonadj = [full & ~adj[v] & ~(1 << v) for v in range(q)]
    deg = [sum(weight[u] for u in iter_bits(adj[v])) for v in range(q)]
    order = sorted(range(q), key=lambda v: (-deg[v], v))
    suffix = [0] * (q + 1)
    for i in range(q - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << order[i])

    def mass(mask: int) -> int:
        return sum(weight[v] for v in iter_bits(mask))

    best_size = 0
    best_classes: list[int] = []
    nodes = 0
    exhausted = False

    def rec(i: int, classes: list[int], cands: list[int], newc: int, size: int) -> None:
        nonlocal best_size, best_classes, nodes, exhausted
        nodes += 1
        if nodes > limit:
            exhausted = True
            return
        if size > best_size:
            best_size, best_classes = size, list(classes)
        if i == q:
            return
        reach = newc if len(classes) < l else 0
        for c in cands:
            reach |= c
        reach &= suffix[i]
        if size + mass(reach) <= best_size:
            return
        # skip ahead to the next group that can still join something
        while i < q and not reach >> order[i] & 1:
            i += 1
        if i == q:
            return
        v = order[i]
        bit, w = 1 << v, weight[v]
        for ci in range(len(classes)):
            if cands[ci] & bit:
                nc = [c & adj[v] if j != ci else c & nonadj[v] for j, c in enumerate(cands)]
                cl = list(classes)
                cl[ci] |= bit
                rec(i + 1, cl, nc, newc & adj[v], size + w)
                if exhausted:
                    return
        if len(classes) < l and newc & bit:
            nc = [c & adj[v] for c in cands] + [newc & nonadj[v]]
            rec(i + 1, classes + [bit], nc, newc & adj[v], size + w)
            if exhausted:
                return
        rec(i + 1, classes, cands, newc, size)

    rec(0, [], [], full, 0)
    cls = [tuple(sorted(x for gi in iter_bits(c) for x in groups[gi])) for c in best_classes]
    cls.sort(key=lambda c: c[0])
    verts = tuple(sorted(v for c in cls for v in c))
    return MultipartiteResult(best_size, verts, Partition(tuple(cls), frozenset(verts)), not exhausted, nodes)


# --- small-vertex peeling -----------------------------------------------------


@dataclass(frozen=True)
class PeelResult:
    remainder: Graph
    kept: tuple[int, ...]
    deleted: tuple[int, ...]
    eta: Fraction


def peel_small_vertices(G: Graph, l: int, eta: Fraction | int | str) -> PeelResult:
    """Delete small vertices one at a time until none is left.

    A vertex is small when its degree in the current graph is below
    ``((l-1)/l - eta) * (current order)``; the lowest-degree small vertex
    (lowest index on ties) goes first.
    """
    eta = Fraction(eta)
    ratio = Fraction(l - 1, l) - eta
    if not (0 <= eta and ratio > 0):
        raise HypergraphError(f"need 0 <= eta < (l-1)/l (eta={eta})")
    alive = G.vertex_mask
    deleted = []
    while alive:
        order = alive.bit_count()
        cutoff = ratio * order
        pick, pick_deg = -1, None
        for v in iter_bits(alive):
            d = (G.adj[v] & alive).bit_count()
            if d < cutoff and (pick_deg is None or d < pick_deg):
                pick, pick_deg = v, d
        if pick < 0:
            break
        deleted.append(pick)
        alive &= ~(1 << pick)
    remainder, kept = G.induced(iter_bits(alive))
    return PeelResult(remainder, tuple(kept), tuple(deleted), eta)


# --- graph enumeration --------------------------------------------------------


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, in edge-bitmask order."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i in iter_bits(mask):
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield Graph(n, adj)


def graph_representatives(n: int) -> Iterator[Graph]:
    """Graphs on ``n <= 8`` vertices containing every isomorphism class at least once.

    For n <= 7 these are the networkx atlas graphs (one per class).  For
    n = 8 every 7-vertex atlas graph is extended by a new vertex with each
    possible neighbourhood: deleting a vertex from any 8-vertex graph leaves
    some 7-vertex class, so every 8-vertex class appears (with repeats).
    """
    if n > 8:
        raise GuardExceeded("vertex count", n, 8)
    from networkx.generators.atlas import graph_atlas_g

    atlas = graph_atlas_g()
    if n <= 7:
        for g in atlas:
            if g.number_of_nodes() == n:
                yield Graph.from_edges(n, g.edges())
        return
    for g in atlas:
        if g.number_of_nodes() != 7:
            continue
        base = Graph.from_edges(7, g.edges())
        for nb in range(1 << 7):
            adj = list(base.adj) + [nb]
            for u in iter_bits(nb):
                adj[u] |= 1 << 7
            yield Graph(8, adj)


def saturated_graphs(n: int, l: int) -> list[Graph]:
    """K_{l+1}-saturated graphs on ``n`` vertices, covering every isomorphism class.

    A saturated graph is its own saturated completion, so filtering the class
    representatives finds every class the completion process can reach.
    Labelled duplicates are removed; isomorphic copies may remain for n = 8.
    """
    seen: dict[tuple[int, ...], Graph] = {}
    for G in graph_representatives(n):
        if G.adj not in seen and is_graph_saturated(G, l):
            seen[G.adj] = G
    return list(seen.values())
