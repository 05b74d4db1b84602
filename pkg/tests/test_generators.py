import itertools
import json
import math
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from rainbow.colordeg import color_degree, min_color_degree
from rainbow.detectors import find_rainbow_cycle_at_least, find_rainbow_triangle, has_triangle
from rainbow.errors import BadParams
from rainbow.generators import (
    GenSpec,
    Rng,
    canonical_colors,
    enumerate_colorings,
    generate,
    lexical_coloring,
    matching_k4,
    mine_k4_exceptions,
    proper_bipartite_coloring,
    random_coloring_complete,
    random_gnp,
    targeted_min_color_degree,
)
from rainbow.graph import read_ecg
import oracles

DATA = Path(__file__).parent / "data"


def test_rng_is_pinned():
    # Mersenne Twister random() stream, stable across Python versions
    r = Rng(12345)
    assert [r.below(100) for _ in range(5)] == [41, 1, 82, 29, 36]


def test_complete_random_shape():
    for s in range(5):
        G = random_coloring_complete(5, 10, s)
        assert G.is_complete() and G.m == 10
        assert all(0 <= c < 10 for _, _, c in G.edges)
    assert min_color_degree(random_coloring_complete(6, 1, 3)) == 1
    with pytest.raises(BadParams):
        random_coloring_complete(1, 3, 0)
    with pytest.raises(BadParams):
        random_coloring_complete(4, 0, 0)


def test_complete_random_frequency_golden():
    golden = json.loads((DATA / "complete_random_30_500.json").read_text())
    got = [min_color_degree(random_coloring_complete(30, 500, s)) for s in golden["seeds"]]
    assert got == golden["min_color_degree"]
    assert sum(d >= 21 for d in got) / len(got) >= 0.99


def test_gnp():
    G = random_gnp(8, 0.0, 3, 1)
    assert G.m == 0
    G = random_gnp(8, 1.0, 3, 1)
    assert G.is_complete()
    assert random_gnp(8, 0.4, 3, 9) == random_gnp(8, 0.4, 3, 9)


def test_proper_bipartite_examples():
    G = proper_bipartite_coloring(3)
    assert G.n == 6 and min_color_degree(G) == 3
    assert find_rainbow_triangle(G) is None
    G = proper_bipartite_coloring(1)
    assert G.n == 2 and G.m == 1
    G = proper_bipartite_coloring(4)
    assert min_color_degree(G) == 4 and not has_triangle(G)
    with pytest.raises(BadParams):
        proper_bipartite_coloring(0)


@given(st.integers(1, 9))
def test_proper_bipartite_invariants(m):
    G = proper_bipartite_coloring(m)
    assert all(color_degree(G, v) == m for v in range(2 * m))
    assert find_rainbow_triangle(G) is None


def test_matching_k4():
    G = matching_k4()
    assert G.is_complete() and len(G.colors) == 3
    assert all(color_degree(G, v) == 3 for v in range(4))


def test_targeted_examples():
    G = targeted_min_color_degree(9, 7, 1)
    assert G.is_complete() and min_color_degree(G) >= 7
    assert G == read_ecg(DATA / "targeted_9_7_seed1.ecg")
    assert min_color_degree(targeted_min_color_degree(5, 1, 0)) >= 1
    G = targeted_min_color_degree(30, 21, 4)
    assert min_color_degree(G) >= 21
    for bad in [(5, 0), (5, 5)]:
        with pytest.raises(BadParams):
            targeted_min_color_degree(*bad, 0)


@given(st.integers(2, 16), st.data(), st.integers(0, 2**32))
@settings(max_examples=60)
def test_targeted_meets_target(n, data, seed):
    t = data.draw(st.integers(1, n - 1))
    G = targeted_min_color_degree(n, t, seed)
    assert G.is_complete() and min_color_degree(G) >= t
    assert G == targeted_min_color_degree(n, t, seed)


def test_genspec_validation_and_dispatch():
    with pytest.raises(BadParams):
        GenSpec("nope", n=4)
    with pytest.raises(BadParams):
        GenSpec("gnp_random", n=4, p=1.5)
    with pytest.raises(BadParams):
        GenSpec("targeted_delta", n=4, target_delta=4)
    with pytest.raises(BadParams):
        generate(GenSpec("proper_bipartite", n=5))
    with pytest.raises(BadParams):
        generate(GenSpec("matching_k4", n=5))
    assert generate(GenSpec("proper_bipartite", n=6)) == proper_bipartite_coloring(3)
    spec = GenSpec("targeted_delta", n=9, target_delta=7, seed=1)
    assert generate(spec) == targeted_min_color_degree(9, 7, 1)
    assert spec.with_seed(2).seed == 2
    assert spec.as_dict() == {"family": "targeted_delta", "n": 9, "target_delta": 7, "seed": 1}


@given(
    st.sampled_from(["complete_random", "gnp_random", "targeted_delta"]),
    st.integers(3, 10),
    st.integers(0, 10**6),
)
@settings(max_examples=40)
def test_generate_deterministic(family, n, seed):
    spec = GenSpec(family, n=n, palette=4, target_delta=n - 1, seed=seed)
    assert generate(spec) == generate(GenSpec(family, n=n, palette=4, target_delta=n - 1, seed=seed))


@given(st.integers(3, 9), st.integers(1, 12), st.integers(0, 10**6))
@settings(max_examples=40)
def test_lexical_coloring_has_no_rainbow_cycle(n, palette, seed):
    G = lexical_coloring(n, palette, seed)
    assert G.is_complete()
    assert find_rainbow_cycle_at_least(G, 3) is None


def test_canonical_colors():
    assert canonical_colors((5, 2, 5, 9)) == (0, 1, 0, 2)
    assert canonical_colors(()) == ()


def _stirling2(m, j):
    return sum((-1) ** i * math.comb(j, i) * (j - i) ** m for i in range(j + 1)) // math.factorial(j)


def _expected_count(n, q, complete):
    M = n * (n - 1) // 2
    colorings = lambda e: sum(_stirling2(e, j) for j in range(0, min(e, q) + 1)) if e else 1
    if complete:
        return colorings(M)
    return sum(math.comb(M, e) * colorings(e) for e in range(M + 1))


@pytest.mark.parametrize("n,q", [(3, 2), (4, 3), (4, 6), (5, 2), (5, 3)])
def test_enumeration_counts_match_stirling(n, q):
    assert sum(1 for _ in enumerate_colorings(n, q)) == _expected_count(n, q, False)
    assert sum(1 for _ in enumerate_colorings(n, q, complete=True)) == _expected_count(n, q, True)


def test_enumeration_is_canonical_and_distinct():
    seen = set()
    for G in enumerate_colorings(4, 3):
        cols = tuple(c for _, _, c in G.edges)
        assert canonical_colors(cols) == cols
        seen.add(G)
    assert len(seen) == _expected_count(4, 3, False)


def test_min_color_degree_cut_is_exact():
    full = [G for G in enumerate_colorings(4, 3) if min_color_degree(G) >= 2]
    cut = list(enumerate_colorings(4, 3, min_color_degree=2))
    assert set(full) == set(cut)


def test_k4_exceptions():
    out = mine_k4_exceptions()
    assert out
    assert any(G.m == 6 for G in out) and any(G.m == 5 for G in out)
    for G in out:
        assert min_color_degree(G) >= 2
        assert find_rainbow_triangle(G) is None
        assert not oracles.has_rainbow_triangle(G)


def test_k4_exceptions_complete_against_brute_force():
    # every coloring of K4 with <= 6 colors, no renaming dedup
    pairs = list(itertools.combinations(range(4), 2))
    found = set()
    from rainbow.graph import build_graph

    for cols in itertools.product(range(6), repeat=6):
        if canonical_colors(cols) != cols:
            continue
        G = build_graph(4, [(u, v, c) for (u, v), c in zip(pairs, cols)])
        if min_color_degree(G) >= 2 and not oracles.has_rainbow_triangle(G):
            found.add(G)
    assert found == {G for G in mine_k4_exceptions() if G.m == 6}
