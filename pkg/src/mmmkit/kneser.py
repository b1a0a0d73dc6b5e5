"""Bipartite Kneser graphs and Hamiltonian cycle search.

The bipartite Kneser graph on ground size n and subset size k has a left and
a right copy of every k-subset, with an edge exactly when the two subsets are
disjoint.  For 2k < n it is Hamiltonian; cycles are found by backtracking
with a fewest-options-first branch order and validated by an independent
checker, so the search method never has to be trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Callable, NamedTuple, Sequence

from .bitsets import k_subset_masks
from .graphs import CheckResult

DEFAULT_NODE_BUDGET = 10**8


class KneserVertex(NamedTuple):
    side: str  # "L" or "R"
    subset: int  # bit mask over the ground set


@dataclass(frozen=True)
class BipartiteKneser:
    """Left and right copies of all k-subsets of [n], joined by disjointness."""

    ground_size: int
    k: int

    @cached_property
    def subset_masks(self) -> tuple[int, ...]:
        return tuple(k_subset_masks(self.ground_size, self.k))

    @cached_property
    def _vertex_list(self) -> tuple[KneserVertex, ...]:
        left = tuple(KneserVertex("L", m) for m in self.subset_masks)
        right = tuple(KneserVertex("R", m) for m in self.subset_masks)
        return left + right

    def vertices(self) -> tuple[KneserVertex, ...]:
        return self._vertex_list

    @property
    def n_vertices(self) -> int:
        return 2 * comb(self.ground_size, self.k)

    def adjacent(self, u: KneserVertex, v: KneserVertex) -> bool:
        return u.side != v.side and (u.subset & v.subset) == 0

    has_edge = adjacent

    def edges(self):
        for m1 in self.subset_masks:
            for m2 in self.subset_masks:
                if m1 & m2 == 0:
                    yield (KneserVertex("L", m1), KneserVertex("R", m2))

    def degree(self) -> int:
        return comb(self.ground_size - self.k, self.k)


def build_bipartite_kneser(n: int, k: int) -> BipartiteKneser:
    if k < 1 or 2 * k >= n:
        raise ValueError(f"need 1 <= k and 2k < n, got n={n}, k={k}")
    return BipartiteKneser(n, k)


def _search_cycle(
    n_vertices: int,
    adjacency: Sequence[int],
    node_budget: int,
    what: str,
) -> list[int] | None:
    """Backtracking Hamiltonian cycle search over an index graph.

    ``adjacency[i]`` is a bit mask of neighbour indices.  Branches are
    ordered by how few onward options a candidate would have, ties broken by
    index, which keeps the search deterministic.  A candidate is pruned when
    taking it would leave some unvisited vertex with fewer than two usable
    neighbours (unvisited ones, the new path head, or the start vertex):
    visited interior vertices already carry both their cycle edges, so such
    a vertex could never be stitched into the cycle.  Returns vertex indices
    or None when no cycle exists; raises when the node budget runs out.
    """
    if n_vertices < 3:
        return None
    start = 0
    path = [start]
    visited = 1 << start
    choice_stack: list[list[int]] = []
    full = (1 << n_vertices) - 1
    nodes = 0

    def options(current: int) -> list[int]:
        cands = adjacency[current] & ~visited
        out = []
        m = cands
        while m:
            low = m & -m
            i = low.bit_length() - 1
            m ^= low
            remaining = full & ~(visited | low)
            allowed = remaining | low | 1
            stranded = False
            rm = remaining
            while rm:
                ul = rm & -rm
                rm ^= ul
                if (adjacency[ul.bit_length() - 1] & allowed).bit_count() < 2:
                    stranded = True
                    break
            if stranded:
                continue
            out.append(((adjacency[i] & remaining).bit_count(), i))
        out.sort()
        return [i for _, i in out]

    choice_stack.append(options(start))
    while choice_stack:
        nodes += 1
        if nodes > node_budget:
            raise RuntimeError(f"Hamiltonian cycle search budget exhausted for {what}")
        branch = choice_stack[-1]
        if not branch:
            choice_stack.pop()
            visited ^= 1 << path.pop()
            continue
        nxt = branch.pop(0)
        if visited | (1 << nxt) == full:
            if adjacency[nxt] & 1:  # closes back to the start vertex
                path.append(nxt)
                return path
            continue
        path.append(nxt)
        visited |= 1 << nxt
        choice_stack.append(options(nxt))
    return None


_CYCLE_CACHE: dict[tuple[int, int], tuple[KneserVertex, ...]] = {}


def hamiltonian_cycle(
    graph: BipartiteKneser, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[KneserVertex, ...]:
    """Hamiltonian cycle of a bipartite Kneser graph, cached per (n, k).

    Existence is guaranteed for 2k < n, so an exhausted search signals an
    implementation bug rather than a property of the input.
    """
    key = (graph.ground_size, graph.k)
    cached = _CYCLE_CACHE.get(key)
    if cached is not None:
        return cached
    verts = graph.vertices()
    index = {v: i for i, v in enumerate(verts)}
    adjacency = [0] * len(verts)
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            if i != j and graph.adjacent(u, v):
                adjacency[i] |= 1 << j
    path = _search_cycle(
        len(verts), adjacency, node_budget, f"bipartite Kneser (n={key[0]}, k={key[1]})"
    )
    if path is None:
        raise RuntimeError(
            f"no Hamiltonian cycle found in bipartite Kneser (n={key[0]}, k={key[1]}); "
            "this contradicts the guaranteed range and signals a bug"
        )
    cycle = tuple(verts[i] for i in path)
    check = validate_hamiltonian_cycle(cycle, verts, graph.adjacent)
    if not check:
        raise AssertionError(f"search produced an invalid cycle: {check.reason}")
    _CYCLE_CACHE[key] = cycle
    return cycle


def cycle_in_subgraph(
    vertices: Sequence,
    adjacency_oracle: Callable[[object, object], bool],
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple:
    """Hamiltonian cycle in the graph induced on ``vertices``.

    The caller handles vertex sets of size below 3.  Raises ValueError when
    the induced subgraph has no Hamiltonian cycle.
    """
    verts = list(vertices)
    if len(verts) < 3:
        raise ValueError("need at least 3 vertices for a cycle")
    adjacency = [0] * len(verts)
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            if i != j and adjacency_oracle(u, v):
                adjacency[i] |= 1 << j
    path = _search_cycle(len(verts), adjacency, node_budget, f"induced subgraph on {len(verts)} vertices")
    if path is None:
        raise ValueError("no Hamiltonian cycle in the induced subgraph")
    cycle = tuple(verts[i] for i in path)
    check = validate_hamiltonian_cycle(cycle, verts, adjacency_oracle)
    if not check:
        raise AssertionError(f"search produced an invalid cycle: {check.reason}")
    return cycle


def validate_hamiltonian_cycle(
    cycle: Sequence,
    vertices: Sequence,
    adjacency_oracle: Callable[[object, object], bool],
) -> CheckResult:
    """Independent validity check: a permutation of the vertices, consecutive
    pairs adjacent, and the closing pair adjacent too."""
    cycle = list(cycle)
    if len(cycle) != len(vertices):
        return CheckResult(False, len(cycle), "wrong length")
    if set(cycle) != set(vertices) or len(set(cycle)) != len(cycle):
        return CheckResult(False, None, "not a permutation of the vertex set")
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if not adjacency_oracle(u, v):
            return CheckResult(False, (u, v), "consecutive vertices not adjacent")
    return CheckResult(True)


def cycle_edges(cycle: Sequence) -> list[tuple]:
    """Consecutive pairs of a cyclic sequence, including the closing pair."""
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]
