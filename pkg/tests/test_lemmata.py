import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rainbow.detectors import RainbowWitness, find_rainbow_triangle, witness_from_vertices
from rainbow.errors import (
    BadTemplate,
    EmptySet,
    NotDependent,
    PivotInA,
    PivotNotAdjacent,
)
from rainbow.graph import build_graph
from rainbow.lemmata import (
    DependenceOrientation,
    common_fresh_neighborhood,
    foreign_color_count,
    has_dependence_property,
    min_outdegree_witness,
    orient_dependence_set,
)
from strategies import colored_graphs


def complete(n, color):
    return build_graph(n, [(u, v, color(u, v, i)) for i, (u, v) in enumerate(itertools.combinations(range(n), 2))])


RAINBOW_K5 = complete(5, lambda u, v, i: i)
MONO_K4 = complete(4, lambda u, v, i: 0)

# pivot 0, a = 1, b = 2, c = 3
TRI_DEP = build_graph(3, [(0, 1, 1), (0, 2, 2), (1, 2, 1)])
TRI_FRESH = build_graph(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])


def test_dependence_examples():
    assert has_dependence_property(TRI_DEP, {1, 2}, 0)
    assert not has_dependence_property(TRI_FRESH, {1, 2}, 0)
    star = build_graph(4, [(0, 1, 1), (0, 2, 2), (0, 3, 3)])
    assert has_dependence_property(star, {1, 2, 3}, 0)


def test_dependence_errors():
    with pytest.raises(PivotInA):
        has_dependence_property(TRI_DEP, {0, 1}, 0)
    with pytest.raises(PivotNotAdjacent):
        has_dependence_property(build_graph(3, [(0, 1, 1)]), {1, 2}, 0)


def test_orientation_examples():
    D = orient_dependence_set(TRI_DEP, {1, 2}, 0)
    assert D.arcs == ((2, 1),)
    assert D.outdeg == {1: 0, 2: 1}
    star = build_graph(4, [(0, 1, 1), (0, 2, 2), (0, 3, 3)])
    D = orient_dependence_set(star, {1, 2, 3}, 0)
    assert D.arcs == () and set(D.outdeg.values()) == {0}
    # path a-b-c with c(ab) = c(va), c(bc) = c(vb)
    G = build_graph(4, [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 1), (2, 3, 2)])
    D = orient_dependence_set(G, {1, 2, 3}, 0)
    assert set(D.arcs) == {(2, 1), (3, 2)}
    assert D.outdeg == {1: 0, 2: 1, 3: 1}
    assert min_outdegree_witness(D) == (1, 0)


def test_orientation_rejects_fresh_edge():
    with pytest.raises(NotDependent) as exc:
        orient_dependence_set(TRI_FRESH, {1, 2}, 0)
    assert exc.value.edge == (1, 2)


def test_min_outdegree_edge_cases():
    G = build_graph(2, [(0, 1, 4)])
    assert min_outdegree_witness(orient_dependence_set(G, {1}, 0)) == (1, 0)
    with pytest.raises(EmptySet):
        min_outdegree_witness(DependenceOrientation((), 0, (), {}))


def test_full_orientation_of_k5_inside_a():
    # pivot 0 with distinct colors to 1..5; G[A] = K5 colored by the lower endpoint's pivot color
    edges = [(0, a, a) for a in range(1, 6)]
    edges += [(x, y, x) for x, y in itertools.combinations(range(1, 6), 2)]
    G = build_graph(6, edges)
    D = orient_dependence_set(G, range(1, 6), 0)
    assert len(D.arcs) == 10 and sum(D.outdeg.values()) == 10
    assert min_outdegree_witness(D)[1] <= 2


@st.composite
def dependent_instances(draw):
    """(G, A, v) with DP_v by construction: each edge of G[A] takes one pivot color."""
    size = draw(st.integers(1, 7))
    v = 0
    A = list(range(1, size + 1))
    pivot_colors = {a: draw(st.integers(0, 4)) for a in A}
    edges = [(v, a, pivot_colors[a]) for a in A]
    for x, y in itertools.combinations(A, 2):
        choice = draw(st.integers(0, 2))
        if choice == 1:
            edges.append((x, y, pivot_colors[x]))
        elif choice == 2:
            edges.append((x, y, pivot_colors[y]))
    return build_graph(size + 1, edges), A, v


@given(dependent_instances())
def test_orientation_lemma_properties(inst):
    G, A, v = inst
    assert has_dependence_property(G, A, v)
    D = orient_dependence_set(G, A, v)
    inner = [(x, y) for x, y in itertools.combinations(A, 2) if G.has_edge(x, y)]
    assert sum(D.outdeg.values()) == len(inner) == len(D.arcs)
    assert {frozenset(a) for a in D.arcs} == {frozenset(e) for e in inner}
    for tail, head in D.arcs:
        # an out-arc never carries the tail's pivot color unless both pivot colors agree
        if G.color(v, tail) != G.color(v, head):
            assert G.color(tail, head) != G.color(v, tail)
    x0, d0 = min_outdegree_witness(D)
    assert Fraction(d0) <= Fraction(len(A) - 1, 2)
    assert foreign_color_count(G, A, v, x0) <= d0


def test_fresh_neighborhood_examples():
    T = witness_from_vertices(RAINBOW_K5, "path", (0, 1))
    F = common_fresh_neighborhood(RAINBOW_K5, T, 0, 1)
    assert F.S == (2, 3, 4)
    assert F.delta == 4 and F.bound == 3 == len(F.S)
    T = witness_from_vertices(MONO_K4, "path", (0, 1))
    assert common_fresh_neighborhood(MONO_K4, T, 0, 1).S == ()


def test_fresh_neighborhood_triangle_bound():
    T = find_rainbow_triangle(RAINBOW_K5)
    F = common_fresh_neighborhood(RAINBOW_K5, T, 0, 1)
    assert F.template == "C3" and F.bound == 2 * 4 - 5 - 3
    assert set(F.S) == {3, 4}


def test_fresh_neighborhood_bad_templates():
    T = witness_from_vertices(RAINBOW_K5, "path", (0, 1, 2))
    with pytest.raises(BadTemplate):
        common_fresh_neighborhood(RAINBOW_K5, T, 0, 1)
    T = witness_from_vertices(RAINBOW_K5, "path", (0, 1))
    with pytest.raises(BadTemplate):
        common_fresh_neighborhood(RAINBOW_K5, T, 0, 2)
    with pytest.raises(BadTemplate):
        common_fresh_neighborhood(MONO_K4, RainbowWitness("triangle", (0, 1, 2), (0, 0, 0)), 0, 1)


@given(colored_graphs(min_n=3, max_n=8, max_colors=8), st.data())
def test_fresh_neighborhood_bound(G, data):
    if G.m == 0:
        return
    u, v, _ = data.draw(st.sampled_from(G.edges))
    T = witness_from_vertices(G, "path", (u, v))
    F = common_fresh_neighborhood(G, T, u, v)
    assert len(F.S) >= F.bound
    if F.above_half:
        assert F.S
    for x in F.S:
        assert G.color(u, x) not in T.colors and G.color(v, x) not in T.colors
    tri = find_rainbow_triangle(G)
    if tri is not None:
        a, b = tri.vertices[0], tri.vertices[1]
        F = common_fresh_neighborhood(G, tri, a, b)
        assert len(F.S) >= F.bound == 2 * F.delta - G.n - 3
        assert not set(F.S) & set(tri.vertices)
