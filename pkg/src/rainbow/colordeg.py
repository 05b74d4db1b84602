"""Color degrees, representative neighborhoods and color sets between vertex sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyGraph, OverlappingSets
from .graph import EdgeColoredGraph, vertex_set

__all__ = [
    "ColorDegreeTable",
    "color_degree",
    "color_degree_table",
    "min_color_degree",
    "representative_neighborhood",
    "restricted_representatives",
    "colors_between",
]


@dataclass(frozen=True)
class ColorDegreeTable:
    degrees: tuple[int, ...]
    min_color_degree: int


def color_degree(G: EdgeColoredGraph, v: int) -> int:
    """d^c(v): number of distinct colors on edges at ``v``."""
    return len(G.incident_colors(v))


def color_degree_table(G: EdgeColoredGraph) -> ColorDegreeTable:
    if G.n == 0:
        raise EmptyGraph("graph has no vertices")
    degrees = tuple(len(G.incident_colors(v)) for v in G.vertices())
    return ColorDegreeTable(degrees, min(degrees))


def min_color_degree(G: EdgeColoredGraph) -> int:
    """The minimum color degree of ``G``; 0 if some vertex is isolated."""
    if G.n == 0:
        raise EmptyGraph("graph has no vertices")
    return min(len(G.incident_colors(v)) for v in G.vertices())


def _representatives(G: EdgeColoredGraph, v: int) -> dict:
    # color -> lowest-indexed neighbor carrying it
    row = G.matrix[v]
    reps = {}
    for u in G.neighbors(v):
        reps.setdefault(row[u], u)
    return reps


def representative_neighborhood(G: EdgeColoredGraph, v: int) -> tuple[int, ...]:
    """N^c(v), taking for every incident color its lowest-indexed neighbor."""
    return tuple(sorted(_representatives(G, v).values()))


def restricted_representatives(
    G: EdgeColoredGraph, v: int, colors: Iterable[int], S: Iterable[int] | None = None
) -> tuple[int, ...]:
    """N_{C'}(v, S): representatives of ``v`` whose edge color lies in ``colors``,
    intersected with ``S`` (all vertices when ``S`` is None)."""
    colors = set(colors)
    keep = None if S is None else set(vertex_set(G, S))
    reps = _representatives(G, v)
    return tuple(
        sorted(u for c, u in reps.items() if c in colors and (keep is None or u in keep))
    )


def colors_between(G: EdgeColoredGraph, V1: Iterable[int], V2: Iterable[int]) -> tuple[int, ...]:
    """C(V1, V2) as a sorted tuple.  ``V1`` and ``V2`` must be disjoint."""
    V1 = vertex_set(G, V1)
    V2 = vertex_set(G, V2)
    if set(V1) & set(V2):
        raise OverlappingSets(f"vertex sets share {sorted(set(V1) & set(V2))}")
    cm = G.matrix
    found = {cm[x][y] for x in V1 for y in V2 if cm[x][y] >= 0}
    return tuple(sorted(found))
