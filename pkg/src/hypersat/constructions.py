"""Deterministic generators for the named graphs and hypergraphs.

Every generator that has a natural vertex partition also exposes it, so
tests and callers can address specific classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .cliques import iter_cliques
from .hypercore import Graph, Hypergraph, HypergraphError, Partition


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise HypergraphError(msg)


# --- Turan hypergraphs -------------------------------------------------------


def turan_parts(n: int, l: int) -> list[list[int]]:
    """Near-equal consecutive parts of ``0..n-1``, larger parts first."""
    q, rem = divmod(n, l)
    parts, start = [], 0
    for i in range(l):
        size = q + (1 if i < rem else 0)
        parts.append(list(range(start, start + size)))
        start += size
    return parts


def elementary_symmetric(values: list[int], k: int) -> int:
    """e_k(values) by the standard O(len * k) recurrence."""
    e = [1] + [0] * k
    for x in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * x
    return e[k]


def turan_count(n: int, l: int, r: int) -> int:
    """Edge count of T_r(n, l): the degree-r elementary symmetric polynomial of the part sizes."""
    _need(l >= r >= 1, f"need l >= r (l={l}, r={r})")
    return elementary_symmetric([len(p) for p in turan_parts(n, l)], r)


def turan_hypergraph(n: int, l: int, r: int) -> Hypergraph:
    """T_r(n, l): all r-sets meeting each part at most once."""
    _need(l >= r >= 2, f"need l >= r >= 2 (l={l}, r={r})")
    part_of = {v: i for i, p in enumerate(turan_parts(n, l)) for v in p}
    edges = tuple(e for e in combinations(range(n), r) if len({part_of[v] for v in e}) == r)
    return Hypergraph(r, n, edges)


def turan_graph(n: int, l: int) -> Graph:
    return turan_hypergraph(n, l, 2).to_graph() if l >= 2 else Graph.empty(n)


def complete_multipartite(sizes: list[int]) -> Graph:
    part, v = [], 0
    for i, s in enumerate(sizes):
        part += [i] * s
    n = len(part)
    return Graph.from_edges(n, [(a, b) for a, b in combinations(range(n), 2) if part[a] != part[b]])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def blowup(G: Graph, sizes: list[int]) -> tuple[Graph, list[list[int]]]:
    """Replace vertex ``i`` by an independent set of ``sizes[i]`` vertices."""
    classes, start = [], 0
    for s in sizes:
        classes.append(list(range(start, start + s)))
        start += s
    edges = [(a, b) for u, v in G.edges() for a in classes[u] for b in classes[v]]
    return Graph.from_edges(start, edges), classes


# --- 5-wheel-like graphs -----------------------------------------------------


@dataclass(frozen=True)
class WheelWitness:
    """Labelled copy of W_{ell,k}: two (ell-1)-cliques q1, q2 sharing r_set."""

    ell: int
    k: int
    top: int
    bottom: tuple[int, int]
    q1: tuple[int, ...]
    q2: tuple[int, ...]
    r_set: tuple[int, ...] = field(default=())

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({self.top, *self.bottom, *self.q1, *self.q2}))

    def edges(self) -> list[tuple[int, int]]:
        u1, u2 = self.bottom
        out = set()
        for q in (self.q1, self.q2):
            out.update(combinations(sorted(q), 2))
            out.update(tuple(sorted((self.top, x))) for x in q)
        out.update(tuple(sorted((u1, x))) for x in self.q1)
        out.update(tuple(sorted((u2, x))) for x in self.q2)
        out.add(tuple(sorted((u1, u2))))
        return sorted(out)

    def is_valid(self) -> bool:
        l, k = self.ell, self.k
        q1, q2 = set(self.q1), set(self.q2)
        roles = {self.top, *self.bottom}
        return (
            len(q1) == len(q2) == l - 1
            and q1 & q2 == set(self.r_set)
            and len(self.r_set) == k
            and len(roles) == 3
            and not roles & (q1 | q2)
        )

    def embeds_in(self, G: Graph) -> bool:
        return self.is_valid() and all(G.has_edge(u, v) for u, v in self.edges())


def wheel(l: int, k: int) -> tuple[Graph, WheelWitness]:
    """W_{l,k} labelled as: top 0, bottom (1, 2), shared part, then the two private parts."""
    _need(l >= 2 and 0 <= k <= l - 2, f"need l >= 2 and 0 <= k <= l-2 (l={l}, k={k})")
    p = l - 1 - k
    R = tuple(range(3, 3 + k))
    P1 = tuple(range(3 + k, 3 + k + p))
    P2 = tuple(range(3 + k + p, 3 + k + 2 * p))
    w = WheelWitness(l, k, 0, (1, 2), R + P1, R + P2, R)
    return Graph.from_edges(2 * l - k + 1, w.edges()), w


# --- Popielarz-Sahasrabudhe-Snyder graphs -----------------------------------


@dataclass(frozen=True)
class Gadget:
    """A graph together with its ordered vertex classes."""

    graph: Graph
    classes: tuple[tuple[int, ...], ...]

    def partition(self) -> Partition:
        return Partition(self.classes, frozenset(range(self.graph.n)))


def _pss_recursive(t: int, sizes: list[int]) -> tuple[int, set[tuple[int, int]], list[list[int]]]:
    if t == 2:
        s = sizes[0]
        left, right = list(range(s)), list(range(s, 2 * s))
        return 2 * s, {(a, b) for a in left for b in right}, [left, right]
    nv, edges, classes = _pss_recursive(t - 1, sizes[:-1])
    copies = sizes[-1]
    all_edges: set[tuple[int, int]] = set()
    new_classes: list[list[int]] = [[] for _ in range(t)]
    spans = []
    for p in range(copies):
        off = p * nv
        all_edges.update((a + off, b + off) for a, b in edges)
        for i, c in enumerate(classes):
            new_classes[i].extend(v + off for v in c)
        spans.append(range(off, off + nv))
    base = copies * nv
    for p in range(copies):
        x = base + p
        new_classes[t - 1].append(x)
        for q in range(copies):
            if q != p:
                all_edges.update((y, x) for y in spans[q])
    return base + copies, all_edges, new_classes


def pss_gadget(t: int, sizes: list[int]) -> Gadget:
    """G_{t, s_1, ..., s_{t-1}} with its t classes.

    Level t+1 takes s_t disjoint copies of level t, merges their classes and
    adds new vertices x_1..x_{s_t}; x_p is joined to every vertex of every
    other copy.
    """
    _need(t >= 2, f"need t >= 2 (t={t})")
    _need(len(sizes) == t - 1, f"need {t - 1} sizes (got {len(sizes)})")
    _need(all(s >= 2 for s in sizes), "all sizes must be at least 2")
    nv, edges, classes = _pss_recursive(t, list(sizes))
    return Gadget(Graph.from_edges(nv, edges), tuple(tuple(c) for c in classes))


def pss_base(t: int, sizes: list[int]) -> Graph:
    return pss_gadget(t, sizes).graph


def pss_gls_gadget(l: int, s: int) -> Gadget:
    """G_{l,s} = G_{l, 2s, s, ..., s}."""
    _need(l >= 2 and s >= 2, f"need l >= 2 and s >= 2 (l={l}, s={s})")
    return pss_gadget(l, [2 * s] + [s] * (l - 2))


def pss_gls(l: int, s: int) -> Graph:
    return pss_gls_gadget(l, s).graph


def pss_gls_vertex_formula(l: int, s: int) -> int:
    """Closed-form vertex count (s/(s-1))(4 s^(l-1) - 3 s^(l-2) - 1)."""
    num = s * (4 * s ** (l - 1) - 3 * s ** (l - 2) - 1)
    q, rem = divmod(num, s - 1)
    assert rem == 0
    return q


@dataclass(frozen=True)
class PSSParams:
    ell: int
    s: int
    n: int
    top_graph: Graph | None = None

    def window(self) -> tuple[int, int]:
        base = 4 * self.s**self.ell * self.ell
        return base + self.s, base + 2 * self.s


@dataclass(frozen=True)
class PSSConstruction:
    """H_{l,s}(n) with its bookkeeping.

    ``classes`` lists A_1..A_l (copy classes plus balancing vertices) and
    A_{l+1} = x_1..x_s last.
    """

    graph: Graph
    classes: tuple[tuple[int, ...], ...]
    copies: tuple[tuple[int, ...], ...]
    balance: tuple[tuple[int, ...], ...]
    apexes: tuple[int, ...]


def _balance_sizes(class_sizes: list[int], total: int) -> list[int]:
    l = len(class_sizes)
    q, rem = divmod(total, l)
    # ceil slots go to the classes that are already largest (ties: lower index)
    order = sorted(range(l), key=lambda i: (-class_sizes[i], i))
    target = [q] * l
    for i in order[:rem]:
        target[i] += 1
    return [target[i] - class_sizes[i] for i in range(l)]


def pss_full(params: PSSParams) -> PSSConstruction:
    """H_{l,s}(n), optionally with ``top_graph`` embedded on the apex class.

    Between A_i and A_j (i != j <= l) a pair is an edge iff it is not an edge
    of any copy H_p; each apex x_p is joined to all of V(H_p) and nothing
    else outside the apex class.
    """
    l, s, n = params.ell, params.s, params.n
    _need(l >= 2 and s >= 2, f"need l >= 2 and s >= 2 (l={l}, s={s})")
    lo, hi = params.window()
    _need(lo <= n <= hi, f"n={n} outside the admissible window [{lo}, {hi}]")
    top = params.top_graph
    _need(top is None or top.n == s, f"top graph must have {s} vertices")

    gadget = pss_gls_gadget(l, s)
    gv = gadget.graph.n
    copies = [tuple(range(p * gv, (p + 1) * gv)) for p in range(s)]
    class_of: dict[int, int] = {}
    copy_of: dict[int, int] = {}
    per_class = [0] * l
    for p in range(s):
        for i, c in enumerate(gadget.classes):
            for v in c:
                class_of[p * gv + v] = i
                copy_of[p * gv + v] = p
            per_class[i] += len(c)
    m = _balance_sizes(per_class, n - s)
    _need(all(x >= 1 for x in m), f"infeasible balancing sizes {m}")

    nxt = s * gv
    balance = []
    for i in range(l):
        ys = tuple(range(nxt, nxt + m[i]))
        for y in ys:
            class_of[y] = i
        balance.append(ys)
        nxt += m[i]
    apexes = tuple(range(nxt, nxt + s))
    assert nxt + s == n

    gadget_adj = gadget.graph.adj
    adj = [0] * n
    body = nxt
    for u in range(body):
        cu, pu = class_of[u], copy_of.get(u)
        row = 0
        for v in range(body):
            if class_of[v] == cu:
                continue
            if pu is not None and copy_of.get(v) == pu and gadget_adj[u - pu * gv] >> (v - pu * gv) & 1:
                continue
            row |= 1 << v
        adj[u] = row
    for p, x in enumerate(apexes):
        for v in copies[p]:
            adj[x] |= 1 << v
            adj[v] |= 1 << x
    if top is not None:
        for a, b in top.edges():
            adj[apexes[a]] |= 1 << apexes[b]
            adj[apexes[b]] |= 1 << apexes[a]

    classes = [tuple(sorted(v for v in range(body) if class_of[v] == i)) for i in range(l)]
    classes.append(apexes)
    return PSSConstruction(Graph(n, adj), tuple(classes), tuple(copies), tuple(balance), apexes)


# --- clique lifting and the wheel blowup ------------------------------------


def lift_cliques_to_rgraph(G: Graph, r: int) -> Hypergraph:
    """The r-graph whose edges are the r-cliques of ``G``."""
    _need(r >= 2, f"need r >= 2 (r={r})")
    return Hypergraph(r, G.n, tuple(sorted(iter_cliques(G, r))))


@dataclass(frozen=True)
class WheelBlowup:
    hypergraph: Hypergraph
    a_classes: tuple[tuple[int, ...], ...]
    b_classes: tuple[tuple[int, ...], ...]


def wheel_blowup(l: int, n: int) -> WheelBlowup:
    """The co-degree extremal 3-graph on classes A_1..A_5 (cyclic) and B_1..B_{l-2}.

    Edges meet exactly one vertex in each of: A_i, A_{i+1}, B_j; A_i, B_j, B_j';
    or three distinct B classes.
    """
    _need(l >= 3, f"need l >= 3 (l={l})")
    if l == 3:
        _need(n % 7 == 0, f"l=3 needs 7 | n (n={n})")
        a_size, b_sizes = n // 7, [2 * n // 7]
    else:
        _need(n % (3 * l - 1) == 0, f"l={l} needs {3 * l - 1} | n (n={n})")
        a_size, b_sizes = n // (3 * l - 1), [3 * n // (3 * l - 1)] * (l - 2)
    classes, start = [], 0
    for size in [a_size] * 5 + b_sizes:
        classes.append(tuple(range(start, start + size)))
        start += size
    A, B = classes[:5], classes[5:]
    triples = []
    for i in range(5):
        for b in B:
            triples.append((A[i], A[(i + 1) % 5], b))
        for b1, b2 in combinations(B, 2):
            triples.append((A[i], b1, b2))
    triples.extend(combinations(B, 3))
    edges = {tuple(sorted((x, y, z))) for X, Y, Z in triples for x in X for y in Y for z in Z}
    return WheelBlowup(Hypergraph(3, n, tuple(sorted(edges))), tuple(A), tuple(B))


def wheel_blowup_3graph(l: int, n: int) -> Hypergraph:
    return wheel_blowup(l, n).hypergraph


def wheel_blowup_edge_count(l: int, n: int) -> int:
    a = n // 7 if l == 3 else n // (3 * l - 1)
    b = 2 * n // 7 if l == 3 else 3 * n // (3 * l - 1)
    k = l - 2
    return 5 * k * a * a * b + 5 * comb(k, 2) * a * b * b + comb(k, 3) * b**3
