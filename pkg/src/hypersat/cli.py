"""Command-line front end.

Hypergraph files are plain text::

    c optional comment lines
    p hgr <r> <n> <m>
    1 2 3
    ...

with ``m`` edge lines of ``r`` ascending 1-indexed vertices.  Every command
prints one JSON report on standard output.  Exit codes: 0 affirmative
verdict, 1 negative, 2 usage or input error, 3 inconclusive (a search guard
ran out).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from collections import Counter
from fractions import Fraction
from typing import Any, Callable

from . import bounds, constructions, hypercore, saturation, search
from .cliques import PreconditionError, count_cliques, find_clique, fisher_ryan_check, t_plus
from .hypercore import Graph, Hypergraph, HypergraphError, Partition

log = logging.getLogger("hypersat")

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class FormatError(HypergraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


# --- file format ---------------------------------------------------------------


def parse_hypergraph(text: str) -> Hypergraph:
    header = None
    edges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise FormatError(lineno, "duplicate header")
            if len(tokens) != 5 or tokens[1] != "hgr":
                raise FormatError(lineno, "malformed header, expected 'p hgr <r> <n> <m>'")
            try:
                r, n, m = (int(t) for t in tokens[2:])
            except ValueError:
                raise FormatError(lineno, "malformed header, expected integers") from None
            if r < 2 or n < 0 or m < 0:
                raise FormatError(lineno, f"need r >= 2, n >= 0, m >= 0 (got {r} {n} {m})")
            header = (r, n, m)
            continue
        if header is None:
            raise FormatError(lineno, "edge line before header")
        r, n, _ = header
        try:
            vs = [int(t) for t in tokens]
        except ValueError:
            raise FormatError(lineno, f"non-integer vertex in {line!r}") from None
        if len(vs) != r:
            raise FormatError(lineno, f"bad arity: expected {r} vertices, got {len(vs)}")
        for v in vs:
            if not 1 <= v <= n:
                raise FormatError(lineno, f"vertex {v} out of range (n={n})")
        if len(set(vs)) != r:
            raise FormatError(lineno, f"repeated vertex in {line!r}")
        edges.append(tuple(v - 1 for v in vs))
    if header is None:
        raise FormatError(0, "missing header 'p hgr <r> <n> <m>'")
    r, n, m = header
    if len(edges) != m:
        raise FormatError(0, f"header declares {m} edges, found {len(edges)}")
    return hypercore.new_hypergraph(r, n, edges)


def emit_hypergraph(H: Hypergraph | Graph) -> str:
    if isinstance(H, Graph):
        H = H.to_hypergraph()
    lines = [f"p hgr {H.r} {H.n} {len(H.edges)}"]
    lines.extend(" ".join(str(v + 1) for v in e) for e in H.edges)
    return "\n".join(lines) + "\n"


def emit_dot(G: Graph | Hypergraph) -> str:
    if isinstance(G, Hypergraph):
        if G.r != 2:
            raise HypergraphError("DOT export needs a 2-uniform hypergraph")
        G = G.to_graph()
    out = ["graph G {"]
    out.extend(f"  {v + 1};" for v in range(G.n))
    out.extend(f"  {u + 1} -- {v + 1};" for u, v in G.edges())
    out.append("}")
    return "\n".join(out) + "\n"


def digest(H: Hypergraph | Graph) -> str:
    return hashlib.sha256(emit_hypergraph(H).encode()).hexdigest()


# --- JSON helpers --------------------------------------------------------------


def exact(x: Any) -> Any:
    """Rationals become "p/q" strings; integers pass through."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def one_based(vs) -> list[int]:
    return [v + 1 for v in vs]


def partition_json(P: Partition) -> list[list[int]]:
    return [one_based(c) for c in P.classes]


def wheel_json(w: constructions.WheelWitness) -> dict:
    return {
        "l": w.ell,
        "k": w.k,
        "top": w.top + 1,
        "bottom": one_based(w.bottom),
        "q1": one_based(w.q1),
        "q2": one_based(w.q2),
        "r_set": one_based(w.r_set),
    }


class Report:
    def __init__(self, command: str):
        self.command = command
        self.input_digest: str | None = None
        self.verdict: bool | str = True
        self.witness: Any = None
        self.exact_values: dict[str, Any] = {}
        self.extra: dict[str, Any] = {}

    def value(self, name: str, v: Any) -> None:
        self.exact_values[name] = exact(v)

    def to_json(self, elapsed_ms: float) -> str:
        body = {
            "command": self.command,
            "input_digest": self.input_digest,
            "verdict": self.verdict,
            "witness": self.witness,
            "exact_values": self.exact_values,
            **self.extra,
            "elapsed_ms": round(elapsed_ms, 3),
        }
        return json.dumps(body, separators=(",", ":"))

    def exit_code(self) -> int:
        if self.verdict == "inconclusive":
            return EXIT_INCONCLUSIVE
        return EXIT_YES if self.verdict else EXIT_NO


class UsageError(Exception):
    pass


# --- I/O plumbing --------------------------------------------------------------


def read_input(args, rep: Report) -> Hypergraph:
    path = args.input
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    H = parse_hypergraph(text)
    rep.input_digest = digest(H)
    return H


def read_graph(args, rep: Report) -> Graph:
    """Graph input; r >= 3 files are replaced by their pair graph."""
    H = read_input(args, rep)
    if H.r > 2:
        rep.extra["graph"] = "pair-shadow"
    return hypercore.shadow_graph(H)


def write_output(args, rep: Report, H: Hypergraph | Graph) -> None:
    text = emit_hypergraph(H)
    rep.extra["output_digest"] = digest(H)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        rep.extra["hypergraph"] = text
    if getattr(args, "dot", None):
        try:
            with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(emit_dot(H))
        except OSError as exc:
            raise UsageError(f"cannot write {args.dot}: {exc.strerror}") from None


# --- gen -------------------------------------------------------------------------


def gen_turan(args, rep):
    H = constructions.turan_hypergraph(args.n, args.l, args.r)
    rep.value("edges", len(H))
    rep.value("turan_count", constructions.turan_count(args.n, args.l, args.r))
    write_output(args, rep, H)


def gen_wheel(args, rep):
    G, w = constructions.wheel(args.l, args.k)
    rep.value("vertices", G.n)
    rep.value("edges", G.edge_count)
    rep.extra["roles"] = wheel_json(w)
    write_output(args, rep, G)


def gen_wheel_blowup(args, rep):
    wb = constructions.wheel_blowup(args.l, args.n)
    rep.value("edges", len(wb.hypergraph))
    rep.extra["classes"] = [one_based(c) for c in wb.a_classes + wb.b_classes]
    write_output(args, rep, wb.hypergraph)


def gen_pss(args, rep):
    top = {"none": None, "complete": Graph.complete(args.s), "empty": Graph.empty(args.s)}[args.top]
    c = constructions.pss_full(constructions.PSSParams(args.l, args.s, args.n, top))
    rep.value("vertices", c.graph.n)
    rep.value("graph_edges", c.graph.edge_count)
    rep.extra["classes"] = [one_based(x) for x in c.classes]
    out: Hypergraph | Graph = c.graph
    if args.lift:
        out = constructions.lift_cliques_to_rgraph(c.graph, args.lift)
        rep.value("lifted_edges", len(out))
    write_output(args, rep, out)


# --- compute ---------------------------------------------------------------------


def compute_shadow(args, rep):
    H = read_input(args, rep)
    S = hypercore.shadow(H, args.level)
    rep.value("edges", len(S))
    write_output(args, rep, S)


def compute_link(args, rep):
    H = read_input(args, rep)
    L = hypercore.link(H, args.v - 1)
    rep.value("degree", len(L))
    write_output(args, rep, L)


def compute_codegree(args, rep):
    H = read_input(args, rep)
    prof = hypercore.codegree_profile(H)
    rep.value("min_positive", prof.min_positive)
    hist = Counter(prof.pairs.values())
    rep.extra["spectrum"] = {str(k): hist[k] for k in sorted(hist)}


def compute_cliques(args, rep):
    G = read_graph(args, rep)
    rep.value("count", count_cliques(G, args.t))


def compute_tplus(args, rep):
    G = read_graph(args, rep)
    rep.value("t_plus", t_plus(G))


# --- check -----------------------------------------------------------------------


def _sat_witness(sr: saturation.SaturationReport):
    if sr.violating_member is not None:
        return {"member": one_based(sr.violating_member)}
    if sr.non_saturating_edge is not None:
        return {"non_saturating": one_based(sr.non_saturating_edge)}
    return None


def check_free(args, rep):
    H = read_input(args, rep)
    member = saturation.contains_member(H, args.l)
    rep.verdict = member is None
    rep.witness = None if member is None else {"member": one_based(member)}


def check_saturated(args, rep):
    H = read_input(args, rep)
    if H.r == 2:
        G = H.to_graph()
        K = find_clique(G, args.l + 1)
        pair = None if K is not None else saturation.non_saturating_pair(G, args.l)
        rep.verdict = K is None and pair is None
        if K is not None:
            rep.witness = {"member": one_based(K)}
        elif pair is not None:
            rep.witness = {"non_saturating": one_based(pair)}
        return
    methods = ["direct", "shadow"] if args.method == "both" else [args.method]
    results = {}
    for m in methods:
        fn = saturation.is_saturated_direct if m == "direct" else saturation.is_saturated_via_shadow
        results[m] = fn(H, args.l)
    verdicts = {m: r.is_saturated for m, r in results.items()}
    if len(set(verdicts.values())) > 1:
        raise RuntimeError(f"saturation checkers disagree: {verdicts}")
    first = results[methods[0]]
    rep.verdict = first.is_saturated
    rep.witness = _sat_witness(first)
    rep.extra["methods"] = verdicts


def check_kr_maximal(args, rep):
    G = read_graph(args, rep)
    why = saturation.kr_maximal_violation(G, args.r, args.l)
    rep.verdict = why is None
    if why is not None:
        kind, vs = why
        rep.witness = {"clique" if kind == "clique" else "r_set": one_based(vs)}


def check_partite(args, rep):
    H = read_input(args, rep)
    P = hypercore.is_l_partite(H, args.l)
    rep.verdict = P is not None
    rep.witness = None if P is None else {"partition": partition_json(P)}


def check_codegree(args, rep):
    H = read_input(args, rep)
    dplus = hypercore.min_positive_codegree(H)
    rep.value("min_positive", dplus)
    rep.value("threshold", bounds.f_threshold(args.l) * H.n)
    rep.verdict = bounds.verify_codegree_instance(H, args.l)


def check_fisher_ryan(args, rep):
    G = read_graph(args, rep)
    counts, ok = fisher_ryan_check(G, args.l)
    rep.value("counts", list(counts.counts))
    rep.verdict = ok


def check_aes(args, rep):
    G = read_graph(args, rep)
    rep.value("min_degree", G.min_degree())
    rep.value("threshold", bounds.aes_threshold(args.l) * G.n)
    rep.verdict = bounds.verify_aes_instance(G, args.l)


# --- search ----------------------------------------------------------------------


def search_turan(args, rep):
    res = search.brute_force_turan(args.n, args.l, args.r, dedup=args.unique, guard=args.guard, workers=args.threads)
    t = constructions.turan_count(args.n, args.l, args.r)
    rep.value("turan_count", t)
    rep.value("count_checked", res.count_checked)
    rep.extra["max_edges"] = res.max_edges
    ok = res.max_edges == t
    if args.unique:
        rep.extra["classes"] = len(res.extremal_canonical_forms)
        ok = ok and len(res.extremal_canonical_forms) == 1
        rep.witness = {"extremal": [[one_based(e) for e in f] for f in res.extremal_canonical_forms]}
    rep.verdict = ok


def search_wheel(args, rep):
    G = read_graph(args, rep)
    w = search.find_wheel_subgraph(G, args.l)
    rep.verdict = w is not None
    rep.witness = None if w is None else wheel_json(w)


def search_max_multipartite(args, rep):
    G = read_graph(args, rep)
    res = search.max_complete_multipartite_induced(G, args.l, max_nodes=args.max_nodes)
    rep.value("size", res.size)
    rep.value("nodes", res.nodes)
    rep.extra["vertices"] = one_based(res.vertices)
    rep.extra["partition"] = partition_json(res.partition)
    rep.verdict = True if res.exact else "inconclusive"


def run_peel(args, rep):
    G = read_graph(args, rep)
    res = search.peel_small_vertices(G, args.l, Fraction(args.eta))
    rep.value("eta", res.eta)
    rep.value("deleted_count", len(res.deleted))
    rep.extra["deleted"] = one_based(res.deleted)
    rep.extra["kept"] = one_based(res.kept)


# --- bounds ----------------------------------------------------------------------


def _bound(rep, value):
    rep.value("value", value)
    rep.extra["value"] = exact(value)
    rep.extra["decimal"] = float(value)


def bounds_cmd(fn: Callable[[argparse.Namespace], Any]):
    return lambda args, rep: _bound(rep, fn(args))


def bounds_turan_gap(args, rep):
    _bound(rep, bounds.turan_gap(args.n, args.l, args.r))
    rep.verdict = bounds.turan_lower_bound_check(args.n, args.l, args.r)


# --- argument parser -------------------------------------------------------------


def _io(p, need_input=True, output=False, dot=False):
    if need_input:
        p.add_argument("-i", "--input", required=True, help="hypergraph file, '-' for stdin")
    if output:
        p.add_argument("-o", "--output", help="write the resulting hypergraph here")
    if dot:
        p.add_argument("--dot", help="also write a DOT file (2-uniform results only)")


def _ints(p, *names):
    for name in names:
        p.add_argument(f"--{name}", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypersat", description="Exact checks on saturated uniform hypergraphs.")
    ap.add_argument("-v", "--verbose", action="store_true", help="progress messages on stderr")
    top = ap.add_subparsers(dest="group", required=True)

    def group(name, help):
        return top.add_parser(name, help=help).add_subparsers(dest="cmd", required=True)

    def leaf(sub, name, fn, help=None):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        return p

    g = group("gen", "generate named constructions")
    p = leaf(g, "turan", gen_turan, "Turan hypergraph T_r(n, l)")
    _ints(p, "n", "l", "r")
    _io(p, False, True, True)
    p = leaf(g, "wheel", gen_wheel, "5-wheel-like graph W_{l,k}")
    _ints(p, "l", "k")
    _io(p, False, True, True)
    p = leaf(g, "wheel-blowup", gen_wheel_blowup, "co-degree extremal 3-graph")
    _ints(p, "l", "n")
    _io(p, False, True, False)
    p = leaf(g, "pss", gen_pss, "non-partite saturated graph H_{l,s}(n)")
    _ints(p, "l", "s", "n")
    p.add_argument("--top", choices=["none", "complete", "empty"], default="none")
    p.add_argument("--lift", type=int, default=0, help="emit the r-graph of r-cliques instead")
    _io(p, False, True, True)

    c = group("compute", "compute derived objects and statistics")
    p = leaf(c, "shadow", compute_shadow)
    p.add_argument("--level", type=int, default=1)
    _io(p, True, True, True)
    p = leaf(c, "link", compute_link)
    _ints(p, "v")
    _io(p, True, True, True)
    p = leaf(c, "codegree", compute_codegree)
    _io(p)
    p = leaf(c, "cliques", compute_cliques)
    _ints(p, "t")
    _io(p)
    p = leaf(c, "tplus", compute_tplus)
    _io(p)

    k = group("check", "decide a property")
    p = leaf(k, "free", check_free)
    _ints(p, "l")
    _io(p)
    p = leaf(k, "saturated", check_saturated)
    _ints(p, "l")
    p.add_argument("--method", choices=["direct", "shadow", "both"], default="direct")
    _io(p)
    p = leaf(k, "kr-maximal", check_kr_maximal)
    _ints(p, "r", "l")
    _io(p)
    for name, fn in [
        ("partite", check_partite),
        ("codegree", check_codegree),
        ("fisher-ryan", check_fisher_ryan),
        ("aes", check_aes),
    ]:
        p = leaf(k, name, fn)
        _ints(p, "l")
        _io(p)

    s = group("search", "exhaustive and branch-and-bound searches")
    p = leaf(s, "turan", search_turan)
    _ints(p, "n", "l", "r")
    p.add_argument("--unique", action="store_true", help="deduplicate extremal graphs up to isomorphism")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--guard", type=int, default=None, help="largest C(n, r) allowed")
    p = leaf(s, "wheel", search_wheel)
    _ints(p, "l")
    _io(p)
    p = leaf(s, "max-multipartite", search_max_multipartite)
    _ints(p, "l")
    p.add_argument("--max-nodes", type=int, default=None)
    _io(p)

    p = top.add_parser("peel", help="delete small vertices")
    p.set_defaults(fn=run_peel)
    _ints(p, "l")
    p.add_argument("--eta", required=True, help="rational, e.g. 1/100")
    _io(p)

    b = group("bounds", "exact thresholds and formulas")
    for name, params, fn in [
        ("f", ["l"], lambda a: bounds.f_threshold(a.l)),
        ("aes", ["l"], lambda a: bounds.aes_threshold(a.l)),
        ("epsilon", ["l", "r"], lambda a: bounds.degree_stability_epsilon(a.l, a.r)),
        ("e1", ["l", "k"], lambda a: bounds.e1_size(a.l, a.k)),
        ("e2", ["l", "k"], lambda a: bounds.e2_size(a.l, a.k)),
        ("turan-count", ["n", "l", "r"], lambda a: constructions.turan_count(a.n, a.l, a.r)),
    ]:
        p = leaf(b, name, bounds_cmd(fn))
        _ints(p, *params)
    p = leaf(b, "turan-gap", bounds_turan_gap)
    _ints(p, "n", "l", "r")
    return ap


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(name)s: %(message)s",
    )
    name = args.group if args.group == "peel" else f"{args.group} {args.cmd}"
    rep = Report(name)
    t0 = time.perf_counter()
    try:
        args.fn(args, rep)
    except search.GuardExceeded as exc:
        rep.verdict = "inconclusive"
        rep.extra["guard"] = {"what": exc.what, "value": exc.value, "limit": exc.limit}
    except PreconditionError as exc:
        print(f"hypersat: {exc} (witness {one_based(exc.witness or ())})", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, HypergraphError, ValueError) as exc:
        print(f"hypersat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = (time.perf_counter() - t0) * 1000
    sys.stdout.write(rep.to_json(elapsed) + "\n")
    sys.stdout.flush()
    return rep.exit_code()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
