"""Immutable edge-colored simple graphs and the ``.ecg`` text format.

Vertices are the integers ``0..n-1``.  Every edge carries exactly one color,
a non-negative integer; colors need not be contiguous.  A graph never changes
after construction, so it can be shared freely between worker processes.

The ``.ecg`` format::

    # optional comment lines
    ecg 1 <n> <m>
    <u> <v> <c>        (exactly m lines)

Serialization writes edges sorted by ``(min endpoint, max endpoint)`` with the
smaller endpoint first, single spaces and a trailing newline.
"""

from __future__ import annotations

from typing import Iterable

from .errors import (
    DuplicateEdge,
    EcgSyntaxError,
    SelfLoop,
    VertexOutOfRange,
)

__all__ = [
    "EdgeColoredGraph",
    "build_graph",
    "parse_ecg",
    "serialize_ecg",
    "canonicalize_ecg",
    "read_ecg",
    "write_ecg",
    "induced_subgraph",
    "complement_vertices",
    "vertex_set",
]

ECG_VERSION = 1


class EdgeColoredGraph:
    """A simple undirected graph with a color on every edge.

    Build instances with :func:`build_graph` (or :func:`parse_ecg`).  Equality
    is label-sensitive: two graphs are equal when they have the same vertex
    count and the same colored edge set.
    """

    __slots__ = ("_n", "_edges", "_cm", "_nbrs", "_incident", "_colors")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        # trusted constructor; build_graph does the validation
        cm = [[-1] * n for _ in range(n)]
        canon = []
        for u, v, c in edges:
            if u > v:
                u, v = v, u
            cm[u][v] = cm[v][u] = c
            canon.append((u, v, c))
        canon.sort()
        self._n = n
        self._edges = tuple(canon)
        self._cm = tuple(tuple(row) for row in cm)
        self._nbrs = tuple(
            tuple(u for u in range(n) if cm[v][u] >= 0) for v in range(n)
        )
        self._incident = tuple(
            frozenset(cm[v][u] for u in self._nbrs[v]) for v in range(n)
        )
        self._colors = frozenset(c for _, _, c in canon)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """Colored edges ``(u, v, c)`` with ``u < v``, sorted."""
        return self._edges

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Color matrix; ``-1`` marks a non-edge (including the diagonal)."""
        return self._cm

    @property
    def colors(self) -> frozenset:
        """The set C(G) of colors used on the graph."""
        return self._colors

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._nbrs[v])

    def incident_colors(self, v: int) -> frozenset:
        self._check(v)
        return self._incident[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return self._cm[u][v] >= 0

    def color(self, u: int, v: int) -> int | None:
        """Color of edge ``uv``, or ``None`` when ``u`` and ``v`` are not adjacent."""
        self._check(u)
        self._check(v)
        c = self._cm[u][v]
        return None if c < 0 else c

    def is_complete(self) -> bool:
        return self.m == self._n * (self._n - 1) // 2

    def _check(self, v) -> None:
        if not (0 <= v < self._n):
            raise VertexOutOfRange(f"vertex {v} not in 0..{self._n - 1}")

    def __eq__(self, other):
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"EdgeColoredGraph(n={self._n}, m={self.m}, colors={len(self._colors)})"

    def __reduce__(self):
        return (EdgeColoredGraph, (self._n, self._edges))


def build_graph(n: int, colored_edges: Iterable[tuple[int, int, int]]) -> EdgeColoredGraph:
    """Validate ``colored_edges`` and build the graph on vertices ``0..n-1``.

    Raises SelfLoop, DuplicateEdge (the same pair twice, whatever the colors)
    or VertexOutOfRange.  Negative colors are rejected with ValueError.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    seen = set()
    edges = []
    for u, v, c in colored_edges:
        for x in (u, v):
            if not (0 <= x < n):
                raise VertexOutOfRange(f"vertex {x} not in 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if c < 0:
            raise ValueError(f"negative color {c} on edge ({u}, {v})")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} given more than once")
        seen.add(key)
        edges.append((key[0], key[1], int(c)))
    return EdgeColoredGraph(n, edges)


def _parse_int(token: str, lineno: int) -> int:
    if not token.isdigit() or not token.isascii():
        raise EcgSyntaxError(f"expected a non-negative integer, got {token!r}", lineno)
    return int(token)


def parse_ecg(text: str) -> EdgeColoredGraph:
    """Parse ``.ecg`` text.  Comment (``#``) and blank lines are ignored."""
    header = None
    n = m = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 4 or tokens[0] != "ecg":
                raise EcgSyntaxError("expected header 'ecg 1 <n> <m>'", lineno)
            version, n, m = (_parse_int(t, lineno) for t in tokens[1:])
            if version != ECG_VERSION:
                raise EcgSyntaxError(f"unsupported format version {version}", lineno)
            header = lineno
            continue
        if len(tokens) != 3:
            raise EcgSyntaxError("expected '<u> <v> <c>'", lineno)
        if len(edges) == m:
            raise EcgSyntaxError(f"more than the declared {m} edges", lineno)
        u, v, c = (_parse_int(t, lineno) for t in tokens)
        edges.append((u, v, c, lineno))
    if header is None:
        raise EcgSyntaxError("missing header")
    if len(edges) != m:
        raise EcgSyntaxError(f"declared m={m}, found {len(edges)} edges")
    seen = {}
    for u, v, c, lineno in edges:
        if u >= n or v >= n:
            raise VertexOutOfRange(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: edge {key} already given on line {seen[key]}")
        seen[key] = lineno
    return build_graph(n, [(u, v, c) for u, v, c, _ in edges])


def serialize_ecg(G: EdgeColoredGraph) -> str:
    lines = [f"ecg {ECG_VERSION} {G.n} {G.m}"]
    lines.extend(f"{u} {v} {c}" for u, v, c in G.edges)
    return "\n".join(lines) + "\n"


def canonicalize_ecg(text: str) -> str:
    return serialize_ecg(parse_ecg(text))


def read_ecg(path) -> EdgeColoredGraph:
    with open(path, encoding="ascii") as fh:
        return parse_ecg(fh.read())


def write_ecg(G: EdgeColoredGraph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize_ecg(G))


def vertex_set(G: EdgeColoredGraph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Sorted, duplicate-free tuple of vertices, range-checked against ``G``."""
    out = tuple(sorted(set(vertices)))
    for v in out:
        if not (0 <= v < G.n):
            raise VertexOutOfRange(f"vertex {v} not in 0..{G.n - 1}")
    return out


def induced_subgraph(G: EdgeColoredGraph, S: Iterable[int]) -> EdgeColoredGraph:
    """G[S], relabeled to ``0..|S|-1`` in the sorted order of ``S``."""
    S = vertex_set(G, S)
    index = {v: i for i, v in enumerate(S)}
    edges = [(index[u], index[v], c) for u, v, c in G.edges if u in index and v in index]
    return EdgeColoredGraph(len(S), edges)


def complement_vertices(G: EdgeColoredGraph, T: Iterable[int]) -> tuple[int, ...]:
    """V(G) minus ``T``."""
    T = set(vertex_set(G, T))
    return tuple(v for v in range(G.n) if v not in T)
