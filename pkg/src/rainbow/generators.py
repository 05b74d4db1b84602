"""Instance factories and exhaustive coloring enumeration.

Randomness comes from :class:`random.Random` (MT19937) and only its
``random()`` method is used; that stream is the one the standard library
promises to keep stable across Python versions for a given integer seed, so
any instance can be rebuilt from ``(GenSpec, seed)`` alone.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from typing import Callable, Iterator

from .colordeg import min_color_degree
from .detectors import find_rainbow_triangle
from .errors import BadParams, RepairFailed
from .graph import EdgeColoredGraph, build_graph

__all__ = [
    "FAMILIES",
    "GenSpec",
    "generate",
    "random_coloring_complete",
    "random_gnp",
    "proper_bipartite_coloring",
    "matching_k4",
    "targeted_min_color_degree",
    "lexical_coloring",
    "canonical_colors",
    "enumerate_colorings",
    "mine_k4_exceptions",
]

FAMILIES = ("complete_random", "gnp_random", "proper_bipartite", "matching_k4", "targeted_delta")


class Rng:
    """Seeded source of small uniform integers built on ``Random.random``."""

    def __init__(self, seed: int):
        self._r = random.Random(int(seed))

    def below(self, m: int) -> int:
        return min(int(self._r.random() * m), m - 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def chance(self, p: float) -> bool:
        return self._r.random() < p

    def shuffle(self, items: list) -> None:
        # Fisher-Yates over below(), not random.shuffle
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    p: float = 0.5
    palette: int = 1
    target_delta: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadParams(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if not 0.0 <= self.p <= 1.0:
            raise BadParams("p must lie in [0, 1]")
        if self.palette < 1:
            raise BadParams("palette must be at least 1")
        if self.family == "targeted_delta" and not 1 <= self.target_delta <= self.n - 1:
            raise BadParams("target_delta must satisfy 1 <= t <= n-1")

    def with_seed(self, seed: int) -> "GenSpec":
        return replace(self, seed=seed)

    def as_dict(self) -> dict:
        d = {"family": self.family, "n": self.n}
        if self.family == "gnp_random":
            d["p"] = self.p
        if self.family in ("complete_random", "gnp_random"):
            d["palette"] = self.palette
        if self.family == "targeted_delta":
            d["target_delta"] = self.target_delta
        d["seed"] = self.seed
        return d


def generate(spec: GenSpec) -> EdgeColoredGraph:
    if spec.family == "complete_random":
        return random_coloring_complete(spec.n, spec.palette, spec.seed)
    if spec.family == "gnp_random":
        return random_gnp(spec.n, spec.p, spec.palette, spec.seed)
    if spec.family == "proper_bipartite":
        if spec.n % 2:
            raise BadParams("proper_bipartite needs an even vertex count")
        return proper_bipartite_coloring(spec.n // 2)
    if spec.family == "matching_k4":
        if spec.n != 4:
            raise BadParams("matching_k4 has exactly 4 vertices")
        return matching_k4()
    return targeted_min_color_degree(spec.n, spec.target_delta, spec.seed)


def random_coloring_complete(n: int, palette: int, seed: int) -> EdgeColoredGraph:
    """K_n with every edge colored independently and uniformly from ``0..palette-1``."""
    if n < 2 or palette < 1:
        raise BadParams("need n >= 2 and palette >= 1")
    rng = Rng(seed)
    return build_graph(n, [(u, v, rng.below(palette)) for u, v in itertools.combinations(range(n), 2)])


def random_gnp(n: int, p: float, palette: int, seed: int) -> EdgeColoredGraph:
    if n < 1 or palette < 1 or not 0.0 <= p <= 1.0:
        raise BadParams("need n >= 1, palette >= 1, 0 <= p <= 1")
    rng = Rng(seed)
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.chance(p):
            edges.append((u, v, rng.below(palette)))
    return build_graph(n, edges)


def proper_bipartite_coloring(m: int) -> EdgeColoredGraph:
    """K_{m,m} with the Latin-square coloring c(i, m+j) = (i+j) mod m."""
    if m < 1:
        raise BadParams("m must be at least 1")
    return build_graph(2 * m, [(i, m + j, (i + j) % m) for i in range(m) for j in range(m)])


def matching_k4() -> EdgeColoredGraph:
    """K4 whose three perfect matchings get colors 0, 1, 2."""
    return build_graph(4, [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2)])


def targeted_min_color_degree(n: int, t: int, seed: int) -> EdgeColoredGraph:
    """K_n colored so that every vertex sees at least ``t`` colors.

    Vertex ``v`` owns the private colors ``v*t .. v*t+t-1``; edge ``uv`` takes
    a random color owned by ``u`` or ``v``.  Colors owned by other vertices are
    automatically distinct at ``v``, so a deficit at ``v`` always comes with a
    repeated private color, which the repair pass replaces by an unused one.
    The other endpoint still sees exactly one color from ``v`` afterwards, so
    repairs never lower anyone's color degree.
    """
    if not 1 <= t <= n - 1:
        raise BadParams(f"need 1 <= t <= n-1, got n={n}, t={t}")
    rng = Rng(seed)
    cm = [[-1] * n for _ in range(n)]
    for u, v in itertools.combinations(range(n), 2):
        c = rng.below(2 * t)
        cm[u][v] = cm[v][u] = u * t + c if c < t else v * t + (c - t)

    def deficit():
        for v in range(n):
            if len({cm[v][u] for u in range(n) if u != v}) < t:
                return v
        return None

    cap = 10 * n * t
    for _ in range(cap + 1):
        v = deficit()
        if v is None:
            break
        own = range(v * t, v * t + t)
        counts = {}
        for u in range(n):
            if u != v and cm[v][u] in own:
                counts[cm[v][u]] = counts.get(cm[v][u], 0) + 1
        spare = next(c for c in own if c not in counts)
        u = next(u for u in range(n) if u != v and counts.get(cm[v][u], 0) > 1)
        cm[u][v] = cm[v][u] = spare
    else:
        raise RepairFailed(f"repair did not converge within {cap} steps")
    G = build_graph(n, [(u, v, cm[u][v]) for u, v in itertools.combinations(range(n), 2)])
    if min_color_degree(G) < t:
        raise RepairFailed("generated graph misses the color-degree target")
    return G


def lexical_coloring(n: int, palette: int, seed: int) -> EdgeColoredGraph:
    """K_n with no rainbow cycle at all.

    Vertices are put in a random order and given random colors; an edge takes
    the color of its earlier endpoint, so the earliest vertex of any cycle sees
    its two cycle edges in the same color.
    """
    if n < 2 or palette < 1:
        raise BadParams("need n >= 2 and palette >= 1")
    rng = Rng(seed)
    order = list(range(n))
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    vcolor = [rng.below(palette) for _ in range(n)]
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        first = u if rank[u] < rank[v] else v
        edges.append((u, v, vcolor[first]))
    return build_graph(n, edges)


def canonical_colors(colors) -> tuple:
    """Rename colors by first occurrence: ``(5, 2, 5, 9) -> (0, 1, 0, 2)``."""
    names = {}
    return tuple(names.setdefault(c, len(names)) for c in colors)


def enumerate_colorings(
    n: int,
    palette: int,
    *,
    complete: bool = False,
    pairs=None,
    min_color_degree: int = 0,
    prune: Callable[[list], bool] | None = None,
) -> Iterator[EdgeColoredGraph]:
    """Every coloring of every labeled graph on ``n`` vertices using at most
    ``palette`` colors, one representative per color renaming.

    Each vertex pair is either absent or colored (``complete`` forbids absent
    pairs; ``pairs`` restricts the candidate pairs).  Colors are restricted
    growth strings, so the output is canonical under color renaming.
    ``min_color_degree`` cuts branches where some vertex can no longer reach
    that many colors.  ``prune(assigned)`` is called whenever a vertex has all
    its pairs decided, with the ``(u, v, c)`` edges decided so far; returning
    True discards the branch.
    """
    if pairs is None:
        pairs = list(itertools.combinations(range(n), 2))
    else:
        pairs = sorted(tuple(sorted(p)) for p in pairs)
    remaining = [0] * n
    for u, v in pairs:
        remaining[u] += 1
        remaining[v] += 1
    last_pair_of = {}
    for i, (u, v) in enumerate(pairs):
        last_pair_of[u] = i
        last_pair_of[v] = i
    finishing = [[] for _ in pairs]
    for v, i in last_pair_of.items():
        finishing[i].append(v)
    t = min_color_degree
    if t > 0 and any(remaining[v] < t for v in range(n)):
        return
    counts = [dict() for _ in range(n)]
    assigned = []
    total = len(pairs)

    def add(v, c):
        d = counts[v]
        d[c] = d.get(c, 0) + 1

    def drop(v, c):
        d = counts[v]
        if d[c] == 1:
            del d[c]
        else:
            d[c] -= 1

    def rec(i, used):
        if i == total:
            yield EdgeColoredGraph(n, assigned)
            return
        u, v = pairs[i]
        remaining[u] -= 1
        remaining[v] -= 1
        choices = range(min(used + 1, palette))
        options = choices if complete else itertools.chain((None,), choices)
        for c in options:
            if c is None:
                ok = t == 0 or (
                    len(counts[u]) + remaining[u] >= t and len(counts[v]) + remaining[v] >= t
                )
                if ok and not (prune and finishing[i] and prune(assigned)):
                    yield from rec(i + 1, used)
                continue
            add(u, c)
            add(v, c)
            assigned.append((u, v, c))
            ok = t == 0 or (
                len(counts[u]) + remaining[u] >= t and len(counts[v]) + remaining[v] >= t
            )
            if ok and not (prune and finishing[i] and prune(assigned)):
                yield from rec(i + 1, max(used, c + 1))
            assigned.pop()
            drop(u, c)
            drop(v, c)
        remaining[u] += 1
        remaining[v] += 1

    yield from rec(0, 0)


def mine_k4_exceptions(palette: int = 6) -> list[EdgeColoredGraph]:
    """Colorings of K4 and of K4-e (missing pair {2,3}) with color degree at
    least 2 everywhere and no rainbow triangle, one per color renaming."""
    k4 = list(itertools.combinations(range(4), 2))
    k4e = [p for p in k4 if p != (2, 3)]
    found = []
    for pairs in (k4, k4e):
        for G in enumerate_colorings(4, palette, complete=True, pairs=pairs, min_color_degree=2):
            if find_rainbow_triangle(G) is None:
                found.append(G)
    return found
