from fractions import Fraction
from itertools import combinations

import pytest

from mmmkit.graphs import (
    Bipartite,
    Graph,
    random_graph,
    verify_matching,
    verify_maximal_matching,
    verify_vertex_cover,
)
from mmmkit.solvers import (
    enumerate_maximal_matchings,
    exact_mbb,
    exact_min_total_vertex_cover,
    exact_min_vertex_cover,
    exact_mmm,
    greedy_maximal_matching,
)

F = Fraction


def path(n):
    g = Graph(vertices=range(n))
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def cycle(n):
    g = path(n)
    g.add_edge(n - 1, 0)
    return g


def star(leaves):
    g = Graph(vertices=range(leaves + 1))
    for i in range(1, leaves + 1):
        g.add_edge(0, i)
    return g


def complete(n):
    g = Graph(vertices=range(n))
    for i in range(n):
        for j in range(i + 1, n):
            g.add_edge(i, j)
    return g


def brute_maximal_matchings(g):
    """Independent oracle: filter all edge subsets."""
    edges = list(g.edges())
    out = set()
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            if verify_matching(g, sub) and verify_maximal_matching(g, sub):
                out.add(frozenset(sub))
    return out


def test_greedy_is_maximal_and_seeded():
    g = random_graph(10, 0.4, seed=0)
    m1 = greedy_maximal_matching(g, seed=7)
    m2 = greedy_maximal_matching(g, seed=7)
    assert m1 == m2
    assert verify_maximal_matching(g, m1)
    plain = greedy_maximal_matching(g)
    assert verify_maximal_matching(g, plain)


@pytest.mark.parametrize(
    "g,expected",
    [
        (path(3), 1),
        (path(4), 1),
        (cycle(4), 2),
        (star(4), 1),
        (complete(4), 2),
        (Graph(vertices=range(3)), 0),
    ],
)
def test_exact_mmm_named_graphs(g, expected):
    result = exact_mmm(g)
    assert result.optimal
    assert result.value == expected
    assert isinstance(result.value, int)
    assert verify_maximal_matching(g, result.witness)
    assert len(result.witness) == expected


def test_exact_mmm_weighted_prefers_light_edges():
    # triangle with one light edge: the lone light edge is already maximal
    g = complete(3)
    weights = {(0, 1): F(5), (0, 2): F(5), (1, 2): F(1, 3)}
    result = exact_mmm(g, weight=lambda u, v: weights[(u, v)])
    assert result.value == F(1, 3)
    assert result.witness == ((1, 2),)
    assert isinstance(result.value, Fraction)


def test_exact_mmm_weighted_can_beat_smallest_cardinality():
    # a maximal matching of two cheap edges beats the single expensive one
    g = path(4)
    weights = {(0, 1): F(1), (1, 2): F(10), (2, 3): F(1)}
    result = exact_mmm(g, weight=lambda u, v: weights[(u, v)])
    assert result.value == 2
    assert set(result.witness) == {(0, 1), (2, 3)}


def test_exact_mmm_rejects_bad_inputs():
    with pytest.raises(ValueError):
        exact_mmm(random_graph(61, 0.1, seed=0))
    with pytest.raises(ValueError):
        exact_mmm(path(3), weight=lambda u, v: 0)


def test_exact_mmm_node_limit():
    g = random_graph(12, 0.5, seed=1)
    result = exact_mmm(g, node_limit=1)
    assert result.status == "limit_reached"
    assert not result.optimal
    # the incumbent is still a genuine maximal matching
    assert verify_maximal_matching(g, result.witness)


@pytest.mark.parametrize(
    "g,count",
    [
        (path(3), 2),
        (cycle(4), 2),
        (star(4), 4),
        (complete(4), 3),
        (Graph(vertices=range(2)), 1),
    ],
)
def test_enumerate_counts_on_named_graphs(g, count):
    found = list(enumerate_maximal_matchings(g))
    assert len(found) == count
    as_sets = {frozenset(m) for m in found}
    assert len(as_sets) == count  # no duplicates
    for m in found:
        assert verify_maximal_matching(g, m)


@pytest.mark.parametrize("seed", range(30))
def test_enumerate_agrees_with_subset_filter(seed):
    g = random_graph(6, 0.45, seed=seed)
    if g.n_edges > 12:
        pytest.skip("edge subset oracle too large")
    assert {frozenset(m) for m in enumerate_maximal_matchings(g)} == brute_maximal_matchings(g)


@pytest.mark.parametrize("seed", range(40))
def test_exact_mmm_agrees_with_enumeration(seed):
    g = random_graph(7, 0.4, seed=seed)
    enum_min = min(
        (len(m) for m in enumerate_maximal_matchings(g)),
        default=0,
    )
    assert exact_mmm(g).value == enum_min


@pytest.mark.parametrize("seed", range(20))
def test_greedy_within_twice_exact(seed):
    g = random_graph(8, 0.35, seed=seed)
    exact = exact_mmm(g).value
    assert len(greedy_maximal_matching(g, seed=seed)) <= 2 * max(exact, 1)


@pytest.mark.parametrize(
    "g,expected",
    [
        (path(3), 1),
        (cycle(4), 2),
        (cycle(5), 3),
        (star(4), 1),
        (complete(4), 3),
        (Graph(vertices=range(3)), 0),
    ],
)
def test_exact_min_vertex_cover_named_graphs(g, expected):
    result = exact_min_vertex_cover(g)
    assert result.optimal
    assert result.value == expected
    assert verify_vertex_cover(g, result.witness)
    assert len(result.witness) == expected


def test_exact_min_vertex_cover_weighted():
    # heavy center: covering with the four unit leaves is cheaper
    g = star(4)
    result = exact_min_vertex_cover(g, weight=lambda v: F(10) if v == 0 else F(1))
    assert result.value == 4
    assert set(result.witness) == {1, 2, 3, 4}
    with pytest.raises(ValueError):
        exact_min_vertex_cover(g, weight=lambda v: 0)


@pytest.mark.parametrize("seed", range(20))
def test_exact_min_vertex_cover_agrees_with_subset_filter(seed):
    g = random_graph(8, 0.4, seed=seed)
    verts = g.vertices()
    brute = min(
        (k for k in range(len(verts) + 1)
         for sub in combinations(verts, k)
         if verify_vertex_cover(g, sub)),
    )
    assert exact_min_vertex_cover(g).value == brute


def test_exact_mbb_known_values():
    full = Bipartite(left=range(3), right=["a", "b", "c"])
    for u in range(3):
        for v in ["a", "b", "c"]:
            full.add_edge(u, v)
    result = exact_mbb(full)
    assert result.value == 3
    empty = Bipartite(left=range(3), right=["a", "b"])
    assert exact_mbb(empty).value == 0


def test_exact_mbb_witness_is_balanced_biclique():
    g = Bipartite(left=range(5), right=range(5, 10))
    edges = [(0, 5), (0, 6), (1, 5), (1, 6), (2, 7), (3, 8), (0, 9), (1, 9)]
    for u, v in edges:
        g.add_edge(u, v)
    result = exact_mbb(g)
    assert result.value == 2
    left_part, right_part = result.witness
    assert len(left_part) == len(right_part) == 2
    for u in left_part:
        for v in right_part:
            assert g.has_edge(u, v)


def test_exact_mbb_caps_and_limits():
    wide = Bipartite(left=range(21), right=range(21, 42))
    with pytest.raises(ValueError):
        exact_mbb(wide)
    g = Bipartite(left=range(6), right=range(6, 12))
    for u in range(6):
        for v in range(6, 12):
            g.add_edge(u, v)
    limited = exact_mbb(g, node_limit=2)
    assert limited.status == "limit_reached"


@pytest.mark.parametrize(
    "g,expected",
    [
        (path(3), 2),
        (path(4), 2),
        (cycle(4), 3),
        (star(4), 2),
        (Graph(vertices=range(2)), 0),
    ],
)
def test_exact_min_total_vertex_cover_named_graphs(g, expected):
    result = exact_min_total_vertex_cover(g)
    assert result.value == expected
    assert result.optimal


def test_total_cover_at_least_plain_cover():
    for seed in range(10):
        g = random_graph(9, 0.4, seed=seed)
        assert exact_min_total_vertex_cover(g).value >= exact_min_vertex_cover(g).value


def test_total_cover_cap():
    with pytest.raises(ValueError):
        exact_min_total_vertex_cover(random_graph(17, 0.2, seed=0))
