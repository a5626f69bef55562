"""Closed-form thresholds and instance-level checks of the stability inequalities.

Every threshold is an exact :class:`~fractions.Fraction`; comparisons such
as ``delta > f(l) * n`` are made on rationals, never on floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cliques import find_clique
from .constructions import turan_count
from .hypercore import Graph, Hypergraph, HypergraphError, is_l_partite, min_degree


@dataclass(frozen=True)
class Threshold:
    name: str
    params: dict[str, int] = field(default_factory=dict)
    value: Fraction = Fraction(0)

    def times(self, n: int) -> Fraction:
        return self.value * n


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise HypergraphError(msg)


def f_threshold(l: int) -> Fraction:
    """Positive co-degree threshold: 2/7 for l = 3, (3l-7)/(3l-1) for l >= 4."""
    _need(l >= 3, f"f is defined for l >= 3 (l={l})")
    return Fraction(2, 7) if l == 3 else Fraction(3 * l - 7, 3 * l - 1)


def aes_threshold(l: int) -> Fraction:
    """Minimum-degree ratio (3l-4)/(3l-1) above which K_{l+1}-free graphs are l-partite."""
    _need(l >= 2, f"threshold is defined for l >= 2 (l={l})")
    return Fraction(3 * l - 4, 3 * l - 1)


def degree_stability_epsilon(l: int, r: int) -> Fraction:
    """C(l-1, r-1) * (1/l^(r-1) - ((3l-4)/(3l^2-4l+1))^(r-1))."""
    _need(l >= r >= 3, f"need l >= r >= 3 (l={l}, r={r})")
    ratio = Fraction(3 * l - 4, 3 * l * l - 4 * l + 1)
    return comb(l - 1, r - 1) * (Fraction(1, l ** (r - 1)) - ratio ** (r - 1))


def degree_stability_bound(l: int, r: int, n: int) -> Fraction:
    """(C(l-1, r-1)/l^(r-1) - eps) * n^(r-1): minimum degrees above this force l-partiteness."""
    eps = degree_stability_epsilon(l, r)
    return (Fraction(comb(l - 1, r - 1), l ** (r - 1)) - eps) * n ** (r - 1)


def eta(l: int, r: int) -> Fraction:
    """Small-vertex slack 1/(10^5 l^3 (3r-4)^3)."""
    return Fraction(1, 10**5 * l**3 * (3 * r - 4) ** 3)


def deleted_vertex_bound(l: int, r: int, eps: Fraction, n: int) -> Fraction:
    """Cap 10^6 l^3 (3r-4)^3 eps n on the number of peeled vertices."""
    return 10**6 * l**3 * (3 * r - 4) ** 3 * Fraction(eps) * n


def threshold(name: str, **params: int) -> Threshold:
    fn = {"f": f_threshold, "aes": aes_threshold, "epsilon": degree_stability_epsilon, "eta": eta}[name]
    return Threshold(name, dict(params), fn(**params))


def e1_size(l: int, k: int) -> int:
    """Edge count of W_{l,k}: l^2 + l - k^2/2 - k/2 - 1."""
    _need(0 <= k <= l - 2, f"need 0 <= k <= l-2 (l={l}, k={k})")
    return l * l + l - (k * k + k) // 2 - 1


def e2_size(l: int, k: int) -> int:
    """Edges of W_{l,k} with exactly one end in the shared clique: 2lk - 2k^2 + k."""
    _need(0 <= k <= l - 2, f"need 0 <= k <= l-2 (l={l}, k={k})")
    return 2 * l * k - 2 * k * k + k


def verify_aes_instance(G: Graph, l: int) -> bool:
    """The minimum-degree implication on one graph.

    ``False`` means ``G`` is K_{l+1}-free with delta(G) > (3l-4)/(3l-1) n
    but not l-partite, a counterexample to the implication.
    """
    n = G.n
    if (3 * l - 1) * G.min_degree() <= (3 * l - 4) * n:
        return True
    if find_clique(G, l + 1) is not None:
        return True
    return is_l_partite(G, l) is not None


def verify_codegree_instance(H: Hypergraph, l: int, saturated: bool | None = None) -> bool:
    """The positive co-degree implication on one 3-graph.

    ``saturated`` may be passed when already known; otherwise it is computed.
    """
    from .hypercore import min_positive_codegree
    from .saturation import is_saturated_via_shadow

    dplus = min_positive_codegree(H)
    if dplus is None or dplus <= f_threshold(l) * H.n:
        return True
    if saturated is None:
        saturated = is_saturated_via_shadow(H, l).is_saturated
    if not saturated:
        return True
    return is_l_partite(H, l) is not None


def turan_gap(n: int, l: int, r: int) -> Fraction:
    """t_r(n, l) - C(l, r) (n/l)^r."""
    return turan_count(n, l, r) - comb(l, r) * Fraction(n, l) ** r


def turan_lower_bound_check(n: int, l: int, r: int) -> bool:
    """t_r(n, l) - C(l, r)(n/l)^r >= -l^2 r^(r+1) n^(r-2)."""
    _need(l >= r >= 2, f"need l >= r >= 2 (l={l}, r={r})")
    return turan_gap(n, l, r) >= -Fraction(l * l * r ** (r + 1)) * Fraction(n) ** (r - 2)


def degree_stability_contrapositive(H: Hypergraph, l: int) -> bool:
    """True when the instance is consistent with the explicit-epsilon degree stability bound.

    A K_{l+1}-free r-graph that is not l-partite must have
    delta(H) <= (C(l-1, r-1)/l^(r-1) - eps) n^(r-1).
    """
    from .saturation import is_free

    if not is_free(H, l) or is_l_partite(H, l) is not None:
        return True
    return min_degree(H) <= degree_stability_bound(l, H.r, H.n)


@dataclass(frozen=True)
class DeficitCheck:
    """Edge count versus t_r(n, l) - C n^(r-1+1/l), with C split into its three terms."""

    edges: int
    turan: int
    linear_term: Fraction  # C(l,r) r s n^(r-1) / l^r
    gadget_term: Fraction  # 4 s^(l+1) C(l+1,2) C(l-1,r-1) n^(r-2) / l^(r-2)
    holds: bool


def pss_deficit_check(edges: int, n: int, l: int, r: int, s: int) -> DeficitCheck:
    """Check ``edges >= t_r(n,l) - C n^(r-1+1/l)`` with ``c = s / n^(1/l)``.

    The constant is ``C = C(l,r) c r / l^r + 4 c^(l+1) C(l+1,2) C(l-1,r-1) / l^(r-2) + 1``.
    Substituting ``c n^(1/l) = s`` turns the first two terms of
    ``C n^(r-1+1/l)`` rational; the last term ``n^(r-1+1/l)`` is compared by
    raising to the l-th power, so the verdict is exact.
    """
    t = turan_count(n, l, r)
    lin = Fraction(comb(l, r) * r * s * n ** (r - 1), l**r)
    gad = Fraction(4 * s ** (l + 1) * comb(l + 1, 2) * comb(l - 1, r - 1) * n ** (r - 2), l ** (r - 2))
    # need: edges - t + lin + gad >= -n^(r-1+1/l)
    slack = edges - t + lin + gad
    holds = slack >= 0 or (-slack) ** l <= Fraction(n) ** ((r - 1) * l + 1)
    return DeficitCheck(edges, t, lin, gad, holds)
