"""Exact and greedy solvers used as oracles at desk scale.

Everything here is deliberately independent of the gadget constructions:
solvers see only a graph protocol (vertices, edges, neighbors, index) plus
an optional edge or vertex weight callable, and they refuse inputs beyond
the sizes they can settle exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator

from .graphs import Bipartite

MAX_EXACT_VERTICES = 60
MAX_BICLIQUE_SIDE = 20
MAX_TOTAL_COVER_VERTICES = 16


@dataclass(frozen=True)
class SolveResult:
    status: str  # "optimal" or "limit_reached"
    value: object
    witness: tuple
    nodes: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def greedy_maximal_matching(graph, seed: int | None = None) -> tuple:
    """Scan the edges once and keep every edge whose endpoints are free.

    With a seed the scan order is shuffled reproducibly; otherwise it is the
    graph's insertion order.
    """
    edges = list(graph.edges())
    if seed is not None:
        random.Random(seed).shuffle(edges)
    matched = set()
    out = []
    for u, v in edges:
        if u not in matched and v not in matched:
            out.append((u, v))
            matched.add(u)
            matched.add(v)
    return tuple(out)


def _indexed_edges(graph):
    verts = tuple(graph.vertices())
    pos = {v: i for i, v in enumerate(verts)}
    edges = []
    for u, v in graph.edges():
        i, j = pos[u], pos[v]
        edges.append((i, j) if i < j else (j, i))
    return verts, edges


def exact_mmm(
    graph,
    weight: Callable | None = None,
    node_limit: int | None = None,
) -> SolveResult:
    """Minimum (weight) maximal matching by branch and bound.

    Branches on the lowest-index edge whose endpoints are both free: any
    maximal matching must put some edge at one of those two endpoints, so
    the candidates are exactly the free edges touching them.  Later
    candidates ban the earlier ones to keep the search tree duplicate-free.
    Edge weights must be positive.
    """
    verts, edges = _indexed_edges(graph)
    if len(verts) > MAX_EXACT_VERTICES:
        raise ValueError(f"exact search capped at {MAX_EXACT_VERTICES} vertices, got {len(verts)}")
    wts = []
    for i, j in edges:
        w = Fraction(1) if weight is None else weight(verts[i], verts[j])
        if w <= 0:
            raise ValueError("edge weights must be positive")
        wts.append(w)
    touching = [[] for _ in verts]
    for eid, (i, j) in enumerate(edges):
        touching[i].append(eid)
        touching[j].append(eid)

    greedy = greedy_maximal_matching(graph)
    pos = {v: i for i, v in enumerate(verts)}
    wmap = {e: w for e, w in zip(edges, wts)}
    best_value = sum(
        (wmap[(min(pos[u], pos[v]), max(pos[u], pos[v]))] for u, v in greedy),
        Fraction(0),
    )
    best_chosen = tuple(
        (min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in greedy
    )

    def free_free(matched: int) -> list[int]:
        return [
            eid
            for eid, (i, j) in enumerate(edges)
            if not (matched >> i) & 1 and not (matched >> j) & 1
        ]

    nodes = 0
    status = "optimal"
    stack = [(0, 0, Fraction(0), ())]  # matched vertex mask, banned edge mask, value, chosen
    while stack:
        if node_limit is not None and nodes >= node_limit:
            status = "limit_reached"
            break
        nodes += 1
        matched, banned, value, chosen = stack.pop()
        ff = free_free(matched)
        if not ff:
            if value < best_value:
                best_value = value
                best_chosen = chosen
            continue
        # lower bound: a disjoint set of undominated edges, each needing a
        # matched endpoint, two per future matching edge at best
        taken = 0
        disjoint = 0
        for eid in ff:
            i, j = edges[eid]
            if not (taken >> i) & 1 and not (taken >> j) & 1:
                taken |= (1 << i) | (1 << j)
                disjoint += 1
        allowed = [eid for eid in ff if not (banned >> eid) & 1]
        if not allowed:
            continue
        min_w = min(wts[eid] for eid in allowed)
        if value + -(-disjoint // 2) * min_w >= best_value:
            continue
        bi, bj = edges[ff[0]]
        candidates = sorted(
            eid for eid in allowed if edges[eid][0] in (bi, bj) or edges[eid][1] in (bi, bj)
        )
        new_ban = banned
        children = []
        for eid in candidates:
            i, j = edges[eid]
            children.append(
                (matched | (1 << i) | (1 << j), new_ban, value + wts[eid], chosen + (edges[eid],))
            )
            new_ban |= 1 << eid
        stack.extend(reversed(children))

    witness = tuple((verts[i], verts[j]) for i, j in best_chosen)
    return SolveResult(status, best_value if weight is not None else int(best_value), witness, nodes)


def enumerate_maximal_matchings(graph) -> Iterator[tuple]:
    """Yield every maximal matching exactly once.

    Decides vertices in index order: the lowest undecided vertex either
    pairs with an undecided neighbor or is declared permanently unmatched,
    which is legal only when no already-unmatched neighbor exists.  Leaves
    of the decision tree are exactly the maximal matchings.
    """
    verts, edges = _indexed_edges(graph)
    n = len(verts)
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i

    def rec(decided: int, unmatched: int, chosen: tuple):
        if decided == (1 << n) - 1:
            yield chosen
            return
        i = (~decided & (decided + 1)).bit_length() - 1  # lowest undecided
        fn = adj[i] & ~decided
        while fn:
            low = fn & -fn
            j = low.bit_length() - 1
            yield from rec(decided | (1 << i) | (1 << j), unmatched, chosen + ((i, j),))
            fn ^= low
        if not (adj[i] & unmatched):
            yield from rec(decided | (1 << i), unmatched | (1 << i), chosen)

    for chosen in rec(0, 0, ()):
        yield tuple((verts[i], verts[j]) for i, j in chosen)


def exact_min_vertex_cover(graph, weight: Callable | None = None) -> SolveResult:
    """Minimum (weight) vertex cover via a maximum-weight independent set search."""
    verts, edges = _indexed_edges(graph)
    n = len(verts)
    if n > MAX_EXACT_VERTICES:
        raise ValueError(f"exact search capped at {MAX_EXACT_VERTICES} vertices, got {len(verts)}")
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    wts = [Fraction(1) if weight is None else Fraction(weight(v)) for v in verts]
    if any(w <= 0 for w in wts):
        raise ValueError("vertex weights must be positive")
    total = sum(wts, Fraction(0))
    full = (1 << n) - 1

    best = [Fraction(0), 0]  # value, vertex mask
    nodes = 0

    def rec(candidates: int, value: Fraction, chosen: int) -> None:
        nonlocal nodes
        nodes += 1
        rest = candidates
        slack = Fraction(0)
        while rest:
            low = rest & -rest
            slack += wts[low.bit_length() - 1]
            rest ^= low
        if value + slack <= best[0]:
            return
        if candidates == 0:
            best[0], best[1] = value, chosen
            return
        pick, pick_deg = -1, -1
        rest = candidates
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            deg = (adj[i] & candidates).bit_count()
            if deg > pick_deg:
                pick, pick_deg = i, deg
            rest ^= low
        rec(candidates & ~((1 << pick) | adj[pick]), value + wts[pick], chosen | (1 << pick))
        rec(candidates & ~(1 << pick), value, chosen)

    rec(full, Fraction(0), 0)
    cover_mask = full & ~best[1]
    cover = tuple(verts[i] for i in range(n) if (cover_mask >> i) & 1)
    value = total - best[0]
    return SolveResult("optimal", value if weight is not None else int(value), cover, nodes)


def exact_mbb(bip: Bipartite, node_limit: int | None = None) -> SolveResult:
    """Maximum balanced biclique of a bipartite graph, by left-subset search."""
    left, right = bip.left, bip.right
    if len(left) > MAX_BICLIQUE_SIDE or len(right) > MAX_BICLIQUE_SIDE:
        raise ValueError(f"biclique search capped at side size {MAX_BICLIQUE_SIDE}")
    rpos = {v: i for i, v in enumerate(right)}
    nb = []
    for u in left:
        mask = 0
        for v in right:
            if bip.has_edge(u, v):
                mask |= 1 << rpos[v]
        nb.append(mask)
    full_right = (1 << len(right)) - 1

    best = [0, (), 0]  # k, left tuple, right mask
    nodes = 0
    status = "optimal"

    def rec(i: int, chosen: tuple, common: int) -> bool:
        nonlocal nodes, status
        if node_limit is not None and nodes >= node_limit:
            status = "limit_reached"
            return False
        nodes += 1
        k = min(len(chosen), common.bit_count())
        if k > best[0]:
            best[0], best[1], best[2] = k, chosen, common
        if i == len(left):
            return True
        if min(len(chosen) + (len(left) - i), common.bit_count()) <= best[0]:
            return True
        if not rec(i + 1, chosen + (i,), common & nb[i]):
            return False
        return rec(i + 1, chosen, common)

    rec(0, (), full_right)
    k = best[0]
    left_part = tuple(left[i] for i in best[1][:k])
    right_part = tuple(
        right[i] for i in range(len(right)) if (best[2] >> i) & 1
    )[:k]
    for u in left_part:  # the witness really is a biclique
        for v in right_part:
            if not bip.has_edge(u, v):
                raise AssertionError("biclique witness has a missing edge")
    return SolveResult(status, k, (left_part, right_part), nodes)


def exact_min_total_vertex_cover(graph) -> SolveResult:
    """Smallest vertex cover whose members all have a neighbor inside it."""
    from .blowup import total_vertex_cover_check

    verts = tuple(graph.vertices())
    if len(verts) > MAX_TOTAL_COVER_VERTICES:
        raise ValueError(
            f"total cover search capped at {MAX_TOTAL_COVER_VERTICES} vertices, got {len(verts)}"
        )
    nodes = 0
    for k in range(len(verts) + 1):
        for subset in combinations(verts, k):
            nodes += 1
            if total_vertex_cover_check(graph, subset):
                return SolveResult("optimal", k, tuple(subset), nodes)
    raise AssertionError("the full vertex set always dominates itself")
