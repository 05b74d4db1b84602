"""Catalog of color-degree theorems as hypothesis/conclusion pairs.

Every threshold is compared with exact rational arithmetic (``Fraction``), and
strict or non-strict exactly as the theorem states it.  Conclusions dispatch
to :mod:`rainbow.detectors`; a conclusion is only ever reported *violated*
when the search that looked for a witness was exhaustive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as F
from typing import Callable

from .colordeg import color_degree_table
from .detectors import (
    Indeterminate,
    find_rainbow_c4,
    find_rainbow_triangle,
    has_triangle,
    rainbow_c4_through,
    rainbow_triangle_through,
    search_longest_rainbow_path,
    search_rainbow_cycle,
)
from .errors import MissingParam
from .graph import EdgeColoredGraph

__all__ = [
    "TheoremId",
    "Outcome",
    "Conclusion",
    "Theorem",
    "CATALOG",
    "get_theorem",
    "check_hypothesis",
    "check_conclusion",
    "min_delta",
]


class TheoremId(str, Enum):
    RT_HALF = "RT_HALF"
    RT_EXCEPT = "RT_EXCEPT"
    RT_COMPLETE_VERTEX = "RT_COMPLETE_VERTEX"
    RT_VERTEX = "RT_VERTEX"
    C4_TRIFREE = "C4_TRIFREE"
    C4_VERTEX = "C4_VERTEX"
    LONGCYC_LW = "LONGCYC_LW"
    LONGCYC_CKRY_ORIG = "LONGCYC_CKRY_ORIG"
    LONGCYC_CKRY_FIXED = "LONGCYC_CKRY_FIXED"
    LONGCYC_TANGJAI_FIXED = "LONGCYC_TANGJAI_FIXED"
    MAIN_COMPLETE = "MAIN_COMPLETE"
    PATH_LB = "PATH_LB"
    CONJ_CKRY = "CONJ_CKRY"


class Outcome(str, Enum):
    VERIFIED = "verified"
    VIOLATED = "violated"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Conclusion:
    status: Outcome
    note: str = ""
    witness: object = None
    nodes: int = 0


@dataclass(frozen=True)
class Theorem:
    id: TheoremId
    statement: str
    required: tuple
    # False for targets that are mined but never asserted
    asserted: bool
    threshold: Callable  # (n, delta, params) -> bool
    side: Callable  # (G, params) -> bool
    conclusion: Callable  # (G, params, budget) -> Conclusion
    min_order: int = 1


# ------------------------------------------------------------- conclusions

def _certified_none(what: str) -> str:
    return f"certified absent: exhaustive {what} scan found no witness"


def _has_triangle(G, params, budget):
    w = find_rainbow_triangle(G)
    if w is None:
        return Conclusion(Outcome.VIOLATED, _certified_none("triangle"))
    return Conclusion(Outcome.VERIFIED, witness=w)


def _every_vertex_triangle(G, params, budget):
    for v in G.vertices():
        if rainbow_triangle_through(G, v) is None:
            return Conclusion(Outcome.VIOLATED, f"vertex {v}: " + _certified_none("triangle"))
    return Conclusion(Outcome.VERIFIED)


def _has_c4(G, params, budget):
    w = find_rainbow_c4(G)
    if w is None:
        return Conclusion(Outcome.VIOLATED, _certified_none("4-cycle"))
    return Conclusion(Outcome.VERIFIED, witness=w)


def _every_vertex_c4(G, params, budget):
    for v in G.vertices():
        if rainbow_c4_through(G, v) is None:
            return Conclusion(Outcome.VIOLATED, f"vertex {v}: " + _certified_none("4-cycle"))
    return Conclusion(Outcome.VERIFIED)


def _cycle_at_least(length_of):
    def conclude(G, params, budget):
        k = max(3, length_of(G.n, params))
        if k > G.n:
            return Conclusion(Outcome.VIOLATED, f"certified absent: no cycle of length >= {k} fits in n={G.n}")
        res, nodes = search_rainbow_cycle(G, k, budget)
        if isinstance(res, Indeterminate):
            return Conclusion(Outcome.INDETERMINATE, f"cycle >= {k}: budget exhausted after {nodes} nodes", nodes=nodes)
        if res is None:
            return Conclusion(
                Outcome.VIOLATED,
                f"certified absent: no rainbow cycle of length >= {k} (search closed after {nodes} nodes)",
                nodes=nodes,
            )
        return Conclusion(Outcome.VERIFIED, witness=res, nodes=nodes)
    return conclude


def path_target(t: int) -> int:
    return math.ceil(F(2 * t, 3)) + 1


def _long_path(G, params, budget):
    target = path_target(params["t"])
    if G.m == 0:
        return Conclusion(Outcome.VIOLATED, "certified absent: graph has no edges")
    res, nodes = search_longest_rainbow_path(G, budget, stop_at=target)
    if isinstance(res, Indeterminate):
        if res.best is not None and res.best.length >= target:
            return Conclusion(Outcome.VERIFIED, witness=res.best, nodes=nodes)
        return Conclusion(Outcome.INDETERMINATE, f"path >= {target}: budget exhausted after {nodes} nodes", nodes=nodes)
    if res.length >= target:
        return Conclusion(Outcome.VERIFIED, witness=res, nodes=nodes)
    return Conclusion(
        Outcome.VIOLATED,
        f"certified: longest rainbow path has length {res.length} < {target} ({nodes} nodes)",
        nodes=nodes,
    )


# --------------------------------------------------------- side conditions

def _always(G, params):
    return True


def _complete(G, params):
    return G.is_complete()


def _triangle_free(G, params):
    return not has_triangle(G)


def _no_rainbow_c4(G, params):
    # exhaustive and polynomial, so this side condition is always decided
    return find_rainbow_c4(G) is None


def _is_balanced_complete_bipartite(G: EdgeColoredGraph) -> bool:
    n = G.n
    if n % 2 or G.m != n * n // 4:
        return False
    side = [-1] * n
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.neighbors(x):
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    return side.count(0) == n // 2


def is_named_exception(G: EdgeColoredGraph) -> bool:
    """Underlying graph is K_{n/2,n/2}, K4 or K4-e."""
    if G.n == 4 and G.m in (5, 6):
        return True
    return _is_balanced_complete_bipartite(G)


# --------------------------------------------------------------- catalog

def _p(name):
    return lambda params: params[name]


CATALOG: dict[TheoremId, Theorem] = {}


def _add(t: Theorem) -> None:
    CATALOG[t.id] = t


_add(Theorem(
    TheoremId.RT_HALF, "n >= 3, delta^c > n/2 => rainbow triangle", (), True,
    lambda n, d, P: d > F(n, 2), _always, _has_triangle, min_order=3,
))
_add(Theorem(
    TheoremId.RT_EXCEPT,
    "n >= 3 and (sum d^c >= n(n+1)/2, or delta^c >= n/2 and G not K_{n/2,n/2}, K4, K4-e) => rainbow triangle",
    (), True,
    lambda n, d, P: True, _always, _has_triangle, min_order=3,
))
_add(Theorem(
    TheoremId.RT_COMPLETE_VERTEX, "K_n, n >= 3, delta^c >= (n+1)/2 => every vertex in a rainbow triangle",
    (), True, lambda n, d, P: d >= F(n + 1, 2), _complete, _every_vertex_triangle, min_order=3,
))
_add(Theorem(
    TheoremId.RT_VERTEX, "n >= 3, delta^c > (3n-3)/4 => every vertex in a rainbow triangle",
    (), True, lambda n, d, P: d > F(3 * n - 3, 4), _always, _every_vertex_triangle, min_order=3,
))
_add(Theorem(
    TheoremId.C4_TRIFREE, "triangle-free, delta^c > n/3 + 1 => rainbow C4",
    (), True, lambda n, d, P: d > F(n, 3) + 1, _triangle_free, _has_c4,
))
_add(Theorem(
    TheoremId.C4_VERTEX, "n >= 3, d^c(v) > 3n/4 for all v => every vertex in a rainbow C4",
    (), True, lambda n, d, P: d > F(3 * n, 4), _always, _every_vertex_c4, min_order=3,
))


def _lw_length(n, params):
    return math.ceil(F(params["d"]) - F(3 * n, 4) + 2)


_add(Theorem(
    TheoremId.LONGCYC_LW, "n >= 8, d^c(v) >= d >= 3n/4 + 1 => rainbow cycle of length >= d - 3n/4 + 2",
    ("d",), True,
    lambda n, d, P: d >= P["d"] and F(P["d"]) >= F(3 * n, 4) + 1,
    _always, _cycle_at_least(_lw_length), min_order=8,
))
_add(Theorem(
    TheoremId.LONGCYC_CKRY_ORIG, "d^c(v) > n/2 + 2 => rainbow cycle of length >= 4 (original bound; mined only)",
    (), False, lambda n, d, P: d > F(n, 2) + 2, _always, _cycle_at_least(lambda n, P: 4),
))
_add(Theorem(
    TheoremId.LONGCYC_CKRY_FIXED, "d^c(v) > (n+5)/2 => rainbow cycle of length >= 4",
    (), True, lambda n, d, P: d > F(n + 5, 2), _always, _cycle_at_least(lambda n, P: 4),
))
_add(Theorem(
    TheoremId.LONGCYC_TANGJAI_FIXED,
    "k >= 5, no rainbow C4, delta^c > (n+3k-3)/2 => rainbow cycle of length >= k",
    ("k",), True,
    lambda n, d, P: P["k"] >= 5 and d > F(n + 3 * P["k"] - 3, 2),
    _no_rainbow_c4, _cycle_at_least(lambda n, P: P["k"]),
))
_add(Theorem(
    TheoremId.MAIN_COMPLETE, "K_n, k > 5, n >= 8k-18, delta^c > (n-1)/2 + k => rainbow cycle of length >= k",
    ("k",), True,
    lambda n, d, P: P["k"] > 5 and n >= 8 * P["k"] - 18 and d > F(n - 1, 2) + P["k"],
    _complete, _cycle_at_least(lambda n, P: P["k"]),
))
_add(Theorem(
    TheoremId.PATH_LB, "delta^c >= t >= 7 => rainbow path of length >= ceil(2t/3) + 1",
    ("t",), True, lambda n, d, P: P["t"] >= 7 and d >= P["t"], _always, _long_path,
))
_add(Theorem(
    TheoremId.CONJ_CKRY, "d^c(v) > (n+k)/2 => rainbow cycle of length >= k (open conjecture; mined only)",
    ("k",), False,
    lambda n, d, P: P["k"] >= 1 and d > F(n + P["k"], 2), _always, _cycle_at_least(lambda n, P: P["k"]),
))


def get_theorem(theorem) -> Theorem:
    return CATALOG[TheoremId(theorem)]


def _params(th: Theorem, params) -> dict:
    params = dict(params or {})
    missing = [name for name in th.required if params.get(name) is None]
    if missing:
        raise MissingParam(f"{th.id.value} needs parameter(s) {', '.join(missing)}")
    return {name: int(params[name]) for name in th.required}


def check_hypothesis(G: EdgeColoredGraph, theorem, params=None) -> bool:
    """Whether ``G`` satisfies every condition of the theorem's hypothesis."""
    th = get_theorem(theorem)
    P = _params(th, params)
    n = G.n
    if n < th.min_order or n == 0:
        return False
    table = color_degree_table(G)
    delta = table.min_color_degree
    if th.id is TheoremId.RT_EXCEPT:
        dense = 2 * sum(table.degrees) >= n * (n + 1)
        half = F(delta) >= F(n, 2) and not is_named_exception(G)
        return dense or half
    return bool(th.threshold(n, delta, P)) and th.side(G, P)


def check_conclusion(G: EdgeColoredGraph, theorem, params=None, budget=None) -> Conclusion:
    """Evaluate the theorem's conclusion on ``G`` regardless of its hypothesis."""
    th = get_theorem(theorem)
    return th.conclusion(G, _params(th, params), budget)


def min_delta(theorem, n: int, params=None) -> int:
    """Smallest minimum color degree compatible with the hypothesis at order ``n``
    (``n`` when none is)."""
    th = get_theorem(theorem)
    P = _params(th, params)
    if th.id is TheoremId.RT_EXCEPT:
        return 0
    for d in range(n):
        if th.threshold(n, d, P):
            return d
    return n
