"""Naive reference implementations used as test oracles.

Everything here works from the raw edge list with plain enumeration and
shares no code with the package beyond reading ``G.n`` and ``G.edges``.
"""

import itertools


def color_map(G):
    return {frozenset((u, v)): c for u, v, c in G.edges}


def naive_color_degree(G, v):
    return len({c for a, b, c in G.edges if v in (a, b)})


def _cycle_colors(cm, cyc):
    out = []
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        key = frozenset((a, b))
        if key not in cm:
            return None
        out.append(cm[key])
    return out


def rainbow_cycles(G, length):
    """All rainbow cycles of the given length, as vertex tuples (all rotations/directions)."""
    cm = color_map(G)
    for cyc in itertools.permutations(range(G.n), length):
        cols = _cycle_colors(cm, list(cyc))
        if cols is not None and len(set(cols)) == length:
            yield cyc


def has_rainbow_cycle_at_least(G, k):
    return any(next(rainbow_cycles(G, L), None) is not None for L in range(max(3, k), G.n + 1))


def vertex_in_rainbow_cycle(G, v, length):
    return any(v in cyc for cyc in rainbow_cycles(G, length))


def has_rainbow_triangle(G):
    cm = color_map(G)
    for a, b, c in itertools.combinations(range(G.n), 3):
        cols = _cycle_colors(cm, [a, b, c])
        if cols is not None and len(set(cols)) == 3:
            return True
    return False


def longest_rainbow_path_length(G):
    """Length (edges) of a longest rainbow path, by unpruned DFS; 0 without edges."""
    cm = color_map(G)
    adj = {v: [u for u in range(G.n) if frozenset((u, v)) in cm] for v in range(G.n)}
    best = 0

    def dfs(v, seen, used):
        nonlocal best
        best = max(best, len(used))
        for u in adj[v]:
            c = cm[frozenset((u, v))]
            if u not in seen and c not in used:
                seen.add(u)
                used.add(c)
                dfs(u, seen, used)
                seen.discard(u)
                used.discard(c)

    for v in range(G.n):
        dfs(v, {v}, set())
    return best


def is_rainbow_path(G, vs):
    cm = color_map(G)
    if len(set(vs)) != len(vs):
        return False
    cols = []
    for a, b in zip(vs, vs[1:]):
        key = frozenset((a, b))
        if key not in cm:
            return False
        cols.append(cm[key])
    return len(set(cols)) == len(cols)


def _distinct_cycles(vs):
    """Each undirected cycle on the vertex set ``vs`` once (first vertex fixed)."""
    first, rest = vs[0], vs[1:]
    for perm in itertools.permutations(rest):
        if perm[0] < perm[-1]:
            yield (first,) + perm


def rainbow_cycle_vertex_sets(G, length):
    """Vertex sets of rainbow cycles of the given length (no shared code with the package)."""
    cm = color_map(G)
    out = set()
    for vs in itertools.combinations(range(G.n), length):
        for cyc in _distinct_cycles(vs):
            cols = _cycle_colors(cm, list(cyc))
            if cols is not None and len(set(cols)) == length:
                out.add(vs)
                break
    return out


def vertices_on_rainbow(G, length):
    return {v for vs in rainbow_cycle_vertex_sets(G, length) for v in vs}


def has_rainbow_cycle_of_length_at_least(G, k):
    """Early-exit variant of :func:`has_rainbow_cycle_at_least` over vertex sets."""
    cm = color_map(G)
    for length in range(max(3, k), G.n + 1):
        for vs in itertools.combinations(range(G.n), length):
            for cyc in _distinct_cycles(vs):
                cols = _cycle_colors(cm, list(cyc))
                if cols is not None and len(set(cols)) == length:
                    return True
    return False
