"""Rainbow substructure search.

Triangle and C4 searches are exhaustive polynomial loops.  The longest
rainbow path and the long rainbow cycle searches are backtracking searches
over (vertex, used-color set) states and are metered in search-tree nodes: when
the node limit runs out they return :class:`Indeterminate` instead of guessing.
All loops visit vertices in ascending order so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import BadK, NoEdges
from .graph import EdgeColoredGraph

__all__ = [
    "RainbowWitness",
    "SearchBudget",
    "Indeterminate",
    "find_rainbow_triangle",
    "rainbow_triangle_through",
    "rainbow_c4_through",
    "find_rainbow_c4",
    "has_triangle",
    "longest_rainbow_path",
    "find_rainbow_cycle_at_least",
    "search_rainbow_cycle",
    "search_longest_rainbow_path",
]

KINDS = ("triangle", "c4", "path", "cycle")


@dataclass(frozen=True)
class RainbowWitness:
    """Vertex sequence plus edge colors certifying a rainbow structure.

    For closed kinds (triangle, c4, cycle) ``colors`` includes the closing
    edge, so ``len(colors) == len(vertices)``; for a path it is one shorter.
    """

    kind: str
    vertices: tuple
    colors: tuple

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.colors)

    @property
    def closed(self) -> bool:
        return self.kind != "path"

    def edge_list(self):
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.closed:
            pairs.append((vs[-1], vs[0]))
        return pairs

    def problems(self, G: EdgeColoredGraph) -> list[str]:
        """Everything wrong with this witness in ``G`` (empty when valid)."""
        out = []
        vs = self.vertices
        if self.kind not in KINDS:
            return [f"unknown kind {self.kind!r}"]
        need = {"triangle": 3, "c4": 4}.get(self.kind)
        if need is not None and len(vs) != need:
            out.append(f"{self.kind} needs {need} vertices, has {len(vs)}")
        if self.kind == "cycle" and len(vs) < 3:
            out.append("cycle needs at least 3 vertices")
        if self.kind == "path" and len(vs) < 2:
            out.append("path needs at least 2 vertices")
        if len(set(vs)) != len(vs):
            out.append("repeated vertex")
        if any(not (0 <= v < G.n) for v in vs):
            return out + ["vertex out of range"]
        pairs = self.edge_list()
        if len(pairs) != len(self.colors):
            out.append("color list length does not match edge count")
        for (x, y), c in zip(pairs, self.colors):
            actual = G.color(x, y)
            if actual is None:
                out.append(f"{x}-{y} is not an edge")
            elif actual != c:
                out.append(f"{x}-{y} has color {actual}, witness says {c}")
        if len(set(self.colors)) != len(self.colors):
            out.append("colors repeat")
        return out

    def is_valid(self, G: EdgeColoredGraph) -> bool:
        return not self.problems(G)


def witness_from_vertices(G: EdgeColoredGraph, kind: str, vertices) -> RainbowWitness:
    vs = tuple(vertices)
    cm = G.matrix
    colors = [cm[x][y] for x, y in zip(vs, vs[1:])]
    if kind != "path":
        colors.append(cm[vs[-1]][vs[0]])
    return RainbowWitness(kind, vs, tuple(colors))


@dataclass(frozen=True)
class SearchBudget:
    """Node limit for backtracking searches; ``None`` means unlimited."""

    node_limit: int | None = None

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")


UNLIMITED = SearchBudget(None)


@dataclass(frozen=True)
class Indeterminate:
    """The node budget ran out before the search tree was closed."""

    nodes: int
    best: RainbowWitness | None = None


SearchResult = Union[RainbowWitness, Indeterminate, None]


def _limit(budget) -> float:
    if budget is None:
        return float("inf")
    if isinstance(budget, SearchBudget):
        return float("inf") if budget.node_limit is None else budget.node_limit
    if budget <= 0:
        raise ValueError("node limit must be positive")
    return budget


class _Exhausted(Exception):
    pass


# ----------------------------------------------------------------- triangles

def find_rainbow_triangle(G: EdgeColoredGraph) -> RainbowWitness | None:
    """Lexicographically first rainbow triangle ``(a, b, c)``, ``a < b < c``."""
    cm = G.matrix
    for a in G.vertices():
        row_a = cm[a]
        for b in G.neighbors(a):
            if b <= a:
                continue
            cab = row_a[b]
            row_b = cm[b]
            for c in G.neighbors(b):
                if c <= b:
                    continue
                cac = row_a[c]
                if cac < 0:
                    continue
                cbc = row_b[c]
                if cab != cac and cab != cbc and cac != cbc:
                    return RainbowWitness("triangle", (a, b, c), (cab, cbc, cac))
    return None


def has_triangle(G: EdgeColoredGraph) -> bool:
    """Whether ``G`` contains any triangle at all, colors ignored."""
    cm = G.matrix
    for a in G.vertices():
        for b in G.neighbors(a):
            if b > a and any(c > b and cm[a][c] >= 0 for c in G.neighbors(b)):
                return True
    return False


def rainbow_triangle_through(G: EdgeColoredGraph, v: int) -> RainbowWitness | None:
    """A rainbow triangle ``(v, u, w)`` with ``u < w``, or None."""
    G._check(v)
    nbrs = G.neighbors(v)
    cm = G.matrix
    row_v = cm[v]
    for i, u in enumerate(nbrs):
        cu = row_v[u]
        row_u = cm[u]
        for w in nbrs[i + 1:]:
            cw = row_v[w]
            if cw == cu:
                continue
            cuw = row_u[w]
            if cuw >= 0 and cuw != cu and cuw != cw:
                return RainbowWitness("triangle", (v, u, w), (cu, cuw, cw))
    return None


# ---------------------------------------------------------------------- C4s

def rainbow_c4_through(G: EdgeColoredGraph, v: int) -> RainbowWitness | None:
    """A rainbow 4-cycle ``v a b c`` (``a < c``) through ``v``, or None."""
    G._check(v)
    cm = G.matrix
    row_v = cm[v]
    for a in G.neighbors(v):
        c1 = row_v[a]
        row_a = cm[a]
        for b in G.neighbors(a):
            if b == v:
                continue
            c2 = row_a[b]
            if c2 == c1:
                continue
            row_b = cm[b]
            for c in G.neighbors(b):
                if c <= a or c == v:
                    continue
                c4 = row_v[c]
                if c4 < 0:
                    continue
                c3 = row_b[c]
                if len({c1, c2, c3, c4}) == 4:
                    return RainbowWitness("c4", (v, a, b, c), (c1, c2, c3, c4))
    return None


def find_rainbow_c4(G: EdgeColoredGraph) -> RainbowWitness | None:
    for v in G.vertices():
        w = rainbow_c4_through(G, v)
        if w is not None:
            return w
    return None


# ----------------------------------------------------------- backtracking

def _color_bits(G: EdgeColoredGraph):
    index = {c: i for i, c in enumerate(sorted(G.colors))}
    cm = G.matrix
    adj = [
        [(u, 1 << index[cm[v][u]]) for u in G.neighbors(v)]
        for v in G.vertices()
    ]
    return index, adj


def search_longest_rainbow_path(G: EdgeColoredGraph, budget=None, stop_at=None):
    """Exact longest rainbow path.  Returns ``(result, nodes)`` where ``result``
    is a path witness or :class:`Indeterminate` carrying the incumbent.

    With ``stop_at`` the search ends as soon as a path of that length is
    found, so the result is then only a lower bound on the maximum.
    """
    if G.m == 0:
        raise NoEdges("graph has no edges")
    limit = _limit(budget)
    n = G.n
    _, adj = _color_bits(G)
    ncolors = len(G.colors)
    ceiling = min(n - 1, ncolors)
    if stop_at is not None:
        ceiling = min(ceiling, max(stop_at, 1))
    best = [0, None]
    nodes = 0
    path = []

    class _Done(Exception):
        pass

    def extend(x, visited, used, length):
        nonlocal nodes
        for y, bit in adj[x]:
            if visited >> y & 1 or used & bit:
                continue
            nodes += 1
            if nodes > limit:
                raise _Exhausted
            path.append(y)
            L = length + 1
            if L > best[0]:
                best[0] = L
                best[1] = tuple(path)
                if L == ceiling:
                    raise _Done
            nused = used | bit
            room = min(n - len(path), ncolors - L)
            if L + room > best[0]:
                extend(y, visited | (1 << y), nused, L)
            path.pop()

    try:
        for s in range(n):
            if not adj[s]:
                continue
            nodes += 1
            if nodes > limit:
                raise _Exhausted
            path[:] = [s]
            if min(n - 1, ncolors) > best[0]:
                extend(s, 1 << s, 0, 0)
    except _Done:
        pass
    except _Exhausted:
        w = witness_from_vertices(G, "path", best[1]) if best[1] else None
        return Indeterminate(nodes - 1, w), nodes - 1
    return witness_from_vertices(G, "path", best[1]), nodes


def longest_rainbow_path(G: EdgeColoredGraph, budget=None) -> RainbowWitness | Indeterminate:
    """A maximum-length rainbow path, or Indeterminate with the best path found.

    ``budget`` is a :class:`SearchBudget`, a positive node count, or None for
    an unlimited search.
    """
    return search_longest_rainbow_path(G, budget)[0]


def search_rainbow_cycle(G: EdgeColoredGraph, k: int, budget=None):
    """Rainbow cycle of length >= k.  Returns ``(result, nodes)``; ``result`` is
    a witness, None (certified absence) or :class:`Indeterminate`."""
    if k < 3:
        raise BadK(f"k must be at least 3, got {k}")
    limit = _limit(budget)
    n = G.n
    index, adj = _color_bits(G)
    closing = {c: 1 << i for c, i in index.items()}
    cm = G.matrix
    nodes = 0
    path = []
    found = []

    def extend(r, x, visited, used, length, first):
        # path r .. x with `length` edges; every vertex on it is > r except r
        nonlocal nodes
        for y, bit in adj[x]:
            if y <= r or visited >> y & 1 or used & bit:
                continue
            nodes += 1
            if nodes > limit:
                raise _Exhausted
            L = length + 1
            nused = used | bit
            f = y if first < 0 else first
            path.append(y)
            if L + 1 >= k and y > f:
                cy = cm[y][r]
                if cy >= 0 and not nused & closing[cy]:
                    found.append(tuple(path))
                    return True
            nvisited = visited | (1 << y)
            spare = 0
            closable = False
            for w, wbit in r_adj:
                if not nvisited >> w & 1 or w == y:
                    if not nused & wbit:
                        closable = True
                        break
            if closable:
                for w in range(r + 1, n):
                    if not nvisited >> w & 1:
                        spare += 1
                if L + spare + 1 >= k and extend(r, y, nvisited, nused, L, f):
                    return True
            path.pop()
        return False

    try:
        for r in range(n):
            if n - r < k:
                break
            r_adj = [(w, bit) for w, bit in adj[r] if w > r]
            if len(r_adj) < 2:
                continue
            nodes += 1
            if nodes > limit:
                raise _Exhausted
            path[:] = [r]
            if extend(r, r, 1 << r, 0, 0, -1):
                return witness_from_vertices(G, "cycle", found[0]), nodes
    except _Exhausted:
        return Indeterminate(nodes - 1), nodes - 1
    return None, nodes


def find_rainbow_cycle_at_least(G: EdgeColoredGraph, k: int, budget=None) -> SearchResult:
    """A rainbow cycle with at least ``k`` edges.

    None certifies that no such cycle exists (the search tree was closed);
    :class:`Indeterminate` means the node budget ran out first.
    """
    return search_rainbow_cycle(G, k, budget)[0]
