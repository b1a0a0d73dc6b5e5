"""Double a graph, decompose a matching into paths, read off a cover.

The doubled graph keeps two copies of every vertex and joins copies across
sides exactly when the base vertices are adjacent.  Any maximal matching of
the double decomposes into arc paths and cycles on the base graph; the
vertices of that decomposition cover the base, and counting paths gives the
3/2 relation between matching size and cover size.
"""

import random

from mmmkit import (
    bipartise,
    cover_from_decomposition,
    decompose,
    exact_min_vertex_cover,
    exact_mmm,
    greedy_maximal_matching,
    random_graph,
    verify_vertex_cover,
)


def main() -> None:
    base = random_graph(12, 0.35, seed=9)
    bip = bipartise(base)
    print(f"base: {base.n_vertices} vertices, {len(list(base.edges()))} edges; "
          f"double: {bip.n_vertices} vertices")

    rng = random.Random(5)
    matching = greedy_maximal_matching(bip.to_graph(), seed=rng.randrange(2 ** 30))
    decomposition = decompose(bip, matching)
    print(f"maximal matching of the double: {len(matching)} edges")
    print(f"decomposition: {len(decomposition.paths)} paths, "
          f"{len(decomposition.cycles)} cycles")
    for path in decomposition.paths:
        assert len(path) >= 3  # maximality forces at least two arcs per path

    cover = cover_from_decomposition(base, decomposition)
    print(f"cover from decomposition: {len(cover)} vertices, "
          f"valid: {verify_vertex_cover(base, cover).ok}")
    assert 2 * len(cover) <= 3 * len(matching)
    print(f"2*{len(cover)} <= 3*{len(matching)} holds")

    mmm = exact_mmm(bip.to_graph())
    vc = exact_min_vertex_cover(base)
    print(f"exact: minimum maximal matching of the double {mmm.value}, "
          f"minimum cover of the base {vc.value}")
    assert 3 * mmm.value >= 2 * vc.value
    print(f"3*{mmm.value} >= 2*{vc.value} holds")


if __name__ == "__main__":
    main()
