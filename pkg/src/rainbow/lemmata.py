"""Dependence sets, their orientation, and common fresh neighborhoods.

A vertex set ``A`` is *dependent on a pivot* ``v`` (``v`` outside ``A``) when
every edge ``aa'`` inside ``A`` repeats one of the pivot colors ``c(va)`` or
``c(va')``.  Orienting each such edge away from the endpoint whose pivot
color it does not repeat gives a digraph in which every vertex has its
"foreign" colors on out-arcs, so a vertex of minimum out-degree sees at most
``(|A|-1)/2`` colors other than its own pivot color.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .colordeg import min_color_degree, restricted_representatives
from .detectors import RainbowWitness
from .errors import BadTemplate, EmptySet, NotDependent, PivotInA, PivotNotAdjacent
from .graph import EdgeColoredGraph, vertex_set

__all__ = [
    "DependenceOrientation",
    "FreshNeighborhood",
    "has_dependence_property",
    "orient_dependence_set",
    "min_outdegree_witness",
    "foreign_color_count",
    "common_fresh_neighborhood",
]


def _check_pivot(G: EdgeColoredGraph, A: tuple, v: int) -> None:
    G._check(v)
    if v in A:
        raise PivotInA(f"pivot {v} lies in A")
    missing = [a for a in A if G.matrix[v][a] < 0]
    if missing:
        raise PivotNotAdjacent(f"pivot {v} is not adjacent to {missing}")


def _inner_edges(G: EdgeColoredGraph, A: tuple):
    cm = G.matrix
    for i, x in enumerate(A):
        for y in A[i + 1:]:
            if cm[x][y] >= 0:
                yield x, y, cm[x][y]


def has_dependence_property(G: EdgeColoredGraph, A: Iterable[int], v: int) -> bool:
    """True iff every edge ``aa'`` of G[A] has color ``c(va)`` or ``c(va')``."""
    A = vertex_set(G, A)
    _check_pivot(G, A, v)
    row = G.matrix[v]
    return all(c == row[x] or c == row[y] for x, y, c in _inner_edges(G, A))


@dataclass(frozen=True)
class DependenceOrientation:
    base: tuple
    pivot: int
    arcs: tuple
    outdeg: dict

    @property
    def size(self) -> int:
        return len(self.base)


def orient_dependence_set(G: EdgeColoredGraph, A: Iterable[int], v: int) -> DependenceOrientation:
    """Orient G[A]: with ``x < y``, an edge colored ``c(vx)`` points ``y -> x``,
    any other edge points ``x -> y``.

    When ``c(xy)`` equals both pivot colors the lower endpoint takes the arc,
    which keeps the orientation deterministic.
    """
    A = vertex_set(G, A)
    _check_pivot(G, A, v)
    row = G.matrix[v]
    arcs = []
    outdeg = {a: 0 for a in A}
    for x, y, c in _inner_edges(G, A):
        if c != row[x] and c != row[y]:
            raise NotDependent((x, y))
        tail, head = (y, x) if c == row[x] else (x, y)
        arcs.append((tail, head))
        outdeg[tail] += 1
    return DependenceOrientation(A, v, tuple(arcs), outdeg)


def min_outdegree_witness(D: DependenceOrientation) -> tuple[int, int]:
    """Lowest-indexed vertex of minimum out-degree, with that out-degree."""
    if not D.base:
        raise EmptySet("orientation has no vertices")
    x0 = min(D.base, key=lambda a: (D.outdeg[a], a))
    return x0, D.outdeg[x0]


def foreign_color_count(G: EdgeColoredGraph, A: Iterable[int], v: int, x: int) -> int:
    """Number of colors at ``x`` inside G[A] other than ``c(vx)``."""
    A = vertex_set(G, A)
    cm = G.matrix
    own = cm[v][x]
    return len({cm[x][y] for y in A if y != x and cm[x][y] >= 0 and cm[x][y] != own})


@dataclass(frozen=True)
class FreshNeighborhood:
    """S, the common neighbors of ``u`` and ``v`` reached through colors
    missing from the template, plus the counting lower bound on ``|S|``."""

    S: tuple
    bound: int
    bound_edge: int
    bound_triangle: int
    template: str
    fresh_colors: tuple
    delta: int
    # the bound forces S nonempty only when delta > n/2
    above_half: bool


def common_fresh_neighborhood(
    G: EdgeColoredGraph, T: RainbowWitness, u: int, v: int
) -> FreshNeighborhood:
    """Representatives of ``u`` and of ``v`` using colors absent from ``T``,
    intersected and taken outside ``V(T)``.

    ``T`` is a single edge (a two-vertex path witness) or a rainbow triangle
    containing ``uv``.  The bound is ``2*delta - n`` for an edge and
    ``2*delta - n - 3`` for a triangle.
    """
    if T.kind == "path" and len(T.vertices) == 2:
        template, drop = "K2", 0
    elif T.kind == "triangle":
        template, drop = "C3", 3
    else:
        raise BadTemplate(f"template must be an edge or a rainbow triangle, got {T.kind}")
    if T.problems(G):
        raise BadTemplate("; ".join(T.problems(G)))
    if {u, v} - set(T.vertices) or u == v:
        raise BadTemplate(f"{u}{v} is not an edge of the template")
    fresh = tuple(sorted(G.colors - set(T.colors)))
    outside = [x for x in G.vertices() if x not in T.vertices]
    S = sorted(
        set(restricted_representatives(G, u, fresh, outside))
        & set(restricted_representatives(G, v, fresh, outside))
    )
    delta = min_color_degree(G)
    return FreshNeighborhood(
        S=tuple(S),
        bound=2 * delta - G.n - drop,
        bound_edge=2 * delta - G.n,
        bound_triangle=2 * delta - G.n - 3,
        template=template,
        fresh_colors=fresh,
        delta=delta,
        above_half=Fraction(delta) > Fraction(G.n, 2),
    )
