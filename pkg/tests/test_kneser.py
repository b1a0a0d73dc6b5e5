from math import comb

import pytest

from mmmkit.kneser import (
    KneserVertex,
    build_bipartite_kneser,
    cycle_edges,
    cycle_in_subgraph,
    hamiltonian_cycle,
    validate_hamiltonian_cycle,
)


def test_build_validates_range():
    with pytest.raises(ValueError):
        build_bipartite_kneser(4, 2)
    with pytest.raises(ValueError):
        build_bipartite_kneser(5, 0)
    assert build_bipartite_kneser(5, 2).n_vertices == 20


def test_structure_counts_and_adjacency():
    bk = build_bipartite_kneser(5, 2)
    verts = bk.vertices()
    assert len(verts) == 20
    assert sum(1 for v in verts if v.side == "L") == 10
    assert bk.degree() == comb(3, 2)
    assert bk.adjacent(KneserVertex("L", 0b00011), KneserVertex("R", 0b01100))
    assert not bk.adjacent(KneserVertex("L", 0b00011), KneserVertex("R", 0b00110))
    assert not bk.adjacent(KneserVertex("L", 0b00011), KneserVertex("L", 0b01100))


def test_edges_match_degree():
    bk = build_bipartite_kneser(6, 2)
    edge_list = list(bk.edges())
    assert len(edge_list) == comb(6, 2) * bk.degree()
    assert all(u.side == "L" and v.side == "R" and u.subset & v.subset == 0 for u, v in edge_list)


@pytest.mark.parametrize("n,k", [(3, 1), (5, 1), (5, 2), (6, 2), (7, 3), (8, 2)])
def test_hamiltonian_cycle_found_and_valid(n, k):
    bk = build_bipartite_kneser(n, k)
    cycle = hamiltonian_cycle(bk)
    assert validate_hamiltonian_cycle(cycle, bk.vertices(), bk.adjacent)
    # bipartite, so the cycle must alternate sides
    for u, v in cycle_edges(cycle):
        assert u.side != v.side


def test_hamiltonian_cycle_cached():
    bk = build_bipartite_kneser(6, 2)
    assert hamiltonian_cycle(bk) is hamiltonian_cycle(build_bipartite_kneser(6, 2))


def test_validate_rejects_bad_cycles():
    bk = build_bipartite_kneser(5, 1)
    cycle = list(hamiltonian_cycle(bk))
    assert not validate_hamiltonian_cycle(cycle[:-1], bk.vertices(), bk.adjacent)
    assert not validate_hamiltonian_cycle(cycle[:-1] + [cycle[0]], bk.vertices(), bk.adjacent)
    ring = lambda u, v: abs(u - v) in (1, 5)
    verts = list(range(6))
    assert validate_hamiltonian_cycle([0, 1, 2, 3, 4, 5], verts, ring)
    assert not validate_hamiltonian_cycle([0, 2, 1, 3, 4, 5], verts, ring)


def test_cycle_in_subgraph_on_explicit_graph():
    verts = list(range(6))
    ring = lambda u, v: abs(u - v) in (1, 5)
    cycle = cycle_in_subgraph(verts, ring)
    assert validate_hamiltonian_cycle(cycle, verts, ring)


def test_cycle_in_subgraph_failures():
    with pytest.raises(ValueError):
        cycle_in_subgraph([0, 1], lambda u, v: True)
    # a star has no Hamiltonian cycle
    star = lambda u, v: 0 in (u, v)
    with pytest.raises(ValueError):
        cycle_in_subgraph(list(range(4)), star)


def test_cycle_edges_closes_the_loop():
    assert cycle_edges([1, 2, 3]) == [(1, 2), (2, 3), (3, 1)]
