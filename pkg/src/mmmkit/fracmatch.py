"""Fractional matchings on the extended gadget graph with the min edge rule.

The construction has three stages.  Complement pairing puts the full min
edge weight on every pair of complementary subsets within a cloud (with the
planted colour removed from the ground set in core clouds).  Layer cycles
top up the remaining deficit of small subsets by walking a Hamiltonian cycle
of the bipartite Kneser graph of their layer, a quarter of the deficit per
cycle-edge incidence.  Empty-set cycles saturate the (x, {}) vertices along
a cycle through one vertex per cloud of the same class, half the deficit per
incident cycle edge.  Together the three stages saturate exactly the
complement of the planted independent set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator

from .bitsets import elements_of, k_subset_masks, spread, submasks
from .gadget import GadgetGraph, GadgetVertex, planted_independent_set, resolve_planted
from .kneser import build_bipartite_kneser, cycle_edges, cycle_in_subgraph, hamiltonian_cycle
from .ulc import Planted

STRATEGIES = ("hamiltonian", "uniform")


class FractionalMatching:
    """Mapping from gadget edges to nonnegative exact rationals.

    Values accumulate: adding to the same unordered pair twice sums the
    contributions.  Per-vertex loads are maintained incrementally and are
    queryable at any time.
    """

    def __init__(self, gadget: GadgetGraph) -> None:
        self.gadget = gadget
        self._values: dict[tuple[GadgetVertex, GadgetVertex], Fraction] = {}
        self._loads: dict[GadgetVertex, Fraction] = {}

    def _key(self, u: GadgetVertex, v: GadgetVertex) -> tuple[GadgetVertex, GadgetVertex]:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        return (u, v) if self.gadget.index(u) < self.gadget.index(v) else (v, u)

    def add(self, u: GadgetVertex, v: GadgetVertex, value: Fraction) -> None:
        value = Fraction(value)
        if value < 0:
            raise ValueError("negative edge value")
        if value == 0:
            return
        key = self._key(u, v)
        self._values[key] = self._values.get(key, Fraction(0)) + value
        for w in key:
            self._loads[w] = self._loads.get(w, Fraction(0)) + value

    def value(self, u: GadgetVertex, v: GadgetVertex) -> Fraction:
        return self._values.get(self._key(u, v), Fraction(0))

    def load(self, v: GadgetVertex) -> Fraction:
        return self._loads.get(v, Fraction(0))

    def support(self) -> list[tuple[GadgetVertex, GadgetVertex, Fraction]]:
        """Positive-value edges sorted by index pairs."""
        items = [(u, v, val) for (u, v), val in self._values.items()]
        items.sort(key=lambda t: (self.gadget.index(t[0]), self.gadget.index(t[1])))
        return items

    @property
    def n_support_edges(self) -> int:
        return len(self._values)

    def total_value(self) -> Fraction:
        return sum(self._values.values(), Fraction(0))

    def absorb(self, other: "FractionalMatching") -> None:
        if other.gadget is not self.gadget:
            raise ValueError("cannot combine fractional matchings over different gadgets")
        for (u, v), val in other._values.items():
            self.add(u, v, val)


def combine(*parts: FractionalMatching) -> FractionalMatching:
    if not parts:
        raise ValueError("nothing to combine")
    out = FractionalMatching(parts[0].gadget)
    for part in parts:
        out.absorb(part)
    return out


@dataclass(frozen=True)
class SaturationReport:
    """Exact per-vertex loads plus capacity and budget verdicts."""

    loads: dict[GadgetVertex, Fraction]
    saturated: tuple[GadgetVertex, ...]
    unsaturated: tuple[tuple[GadgetVertex, Fraction], ...]  # (vertex, deficit)
    support_ok: bool
    support_violation: tuple | None
    capacity_ok: bool
    capacity_violation: tuple | None
    budget_ok: bool
    budget_violation: tuple | None

    @property
    def ok(self) -> bool:
        return self.support_ok and self.capacity_ok and self.budget_ok


def _cloud_ground(gadget: GadgetGraph, planted: Planted, x: int) -> int:
    if x in planted.core:
        return gadget.full_mask & ~(1 << planted.labelling[x])
    return gadget.full_mask


def build_complement_pairing(
    gadget: GadgetGraph, planted: Planted | None = None
) -> FractionalMatching:
    """Stage one: the min edge weight on every complementary subset pair.

    Within each cloud the ground set is the full colour set, or the colour
    set minus the planted colour for core clouds; subsets containing the
    planted colour are left untouched there.
    """
    if gadget.flavor != "extended":
        raise ValueError("fractional matchings need the extended flavor")
    chosen = resolve_planted(gadget, planted)
    fm = FractionalMatching(gadget)
    for x in range(gadget.num_vars):
        ground = _cloud_ground(gadget, chosen, x)
        for s in submasks(ground):
            comp = ground ^ s
            if s >= comp:
                continue
            u, v = GadgetVertex(x, s), GadgetVertex(x, comp)
            fm.add(u, v, gadget.edge_weight(u, v, "min"))
    return fm


def _layer_range(ground_size: int) -> Iterator[int]:
    k = 1
    while 2 * k < ground_size:
        yield k
        k += 1


def build_layer_cycles(
    gadget: GadgetGraph,
    planted: Planted | None = None,
    strategy: str = "hamiltonian",
) -> FractionalMatching:
    """Stage two: per-layer deficit distribution for small subsets.

    For each cloud and each layer 0 < k < ground/2, a size-k subset is left
    with deficit mu(k) - mu(ground - k) by the complement pairing.  The
    hamiltonian strategy walks a Hamiltonian cycle of the layer's bipartite
    Kneser graph and lays a quarter of the deficit on each cycle edge; every
    subset appears on both sides and collects exactly four incidences.  The
    uniform strategy spreads the deficit equally over all of the subset's
    disjoint same-size partners instead.  Both saturate the layer exactly.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")
    if gadget.flavor != "extended":
        raise ValueError("fractional matchings need the extended flavor")
    chosen = resolve_planted(gadget, planted)
    fm = FractionalMatching(gadget)
    mu = gadget.weight_by_size
    for x in range(gadget.num_vars):
        ground = _cloud_ground(gadget, chosen, x)
        ground_elems = elements_of(ground)
        gsize = len(ground_elems)
        for k in _layer_range(gsize):
            deficit = mu[k] - mu[gsize - k]
            if strategy == "hamiltonian":
                cycle = hamiltonian_cycle(build_bipartite_kneser(gsize, k))
                quarter = deficit / 4
                for a, b in cycle_edges(cycle):
                    u = GadgetVertex(x, spread(a.subset, ground_elems))
                    v = GadgetVertex(x, spread(b.subset, ground_elems))
                    fm.add(u, v, quarter)
            else:
                degree = comb(gsize - k, k)
                share = deficit / degree
                masks = [spread(m, ground_elems) for m in k_subset_masks(gsize, k)]
                for i, s1 in enumerate(masks):
                    for s2 in masks[i + 1 :]:
                        if s1 & s2 == 0:
                            fm.add(GadgetVertex(x, s1), GadgetVertex(x, s2), share)
    return fm


def build_empty_set_cycles(
    gadget: GadgetGraph, planted: Planted | None = None
) -> FractionalMatching:
    """Stage three: saturate the (x, {}) vertices along per-class cycles.

    Clouds split into two classes, core and non-core, whose empty-set
    deficits differ (the complement pairing matched the empty set against
    the full ground set, whose size differs by one).  A class of size >= 3
    uses a Hamiltonian cycle through its empty-set vertices, half the
    deficit per edge; a class of size 2 puts the whole deficit on the single
    connecting edge; a singleton class cannot be saturated and is an error.
    """
    if gadget.flavor != "extended":
        raise ValueError("fractional matchings need the extended flavor")
    chosen = resolve_planted(gadget, planted)
    fm = FractionalMatching(gadget)
    mu = gadget.weight_by_size
    m = gadget.num_colors
    classes = (
        ("non-core", [x for x in range(gadget.num_vars) if x not in chosen.core], mu[0] - mu[m]),
        ("core", sorted(chosen.core), mu[0] - mu[m - 1] if m >= 1 else Fraction(0)),
    )
    for name, members, deficit in classes:
        if not members:
            continue
        if len(members) == 1:
            raise ValueError(
                f"cannot saturate the empty-set vertex of the singleton {name} class "
                f"(variable {members[0]}); need >= 2 variables per class"
            )
        verts = [GadgetVertex(x, 0) for x in members]
        if len(members) == 2:
            u, v = verts
            if not gadget.adjacent(u, v):
                raise ValueError(
                    f"the two {name} clouds {members} share no constraint edge, "
                    "so their empty-set vertices cannot be paired"
                )
            fm.add(u, v, deficit)
            continue
        cycle = cycle_in_subgraph(verts, gadget.adjacent)
        half = deficit / 2
        for u, v in cycle_edges(cycle):
            fm.add(u, v, half)
    return fm


def build_full(
    gadget: GadgetGraph,
    planted: Planted | None = None,
    strategy: str = "hamiltonian",
) -> FractionalMatching:
    """All three stages combined into one fractional matching."""
    chosen = resolve_planted(gadget, planted)
    return combine(
        build_complement_pairing(gadget, chosen),
        build_layer_cycles(gadget, chosen, strategy),
        build_empty_set_cycles(gadget, chosen),
    )


def validate(fm: FractionalMatching) -> SaturationReport:
    """Exact validation of the fractional matching invariants.

    Checks that every support edge exists in the graph, respects the min
    edge-weight capacity, and that no vertex load exceeds its weight; then
    classifies every vertex as saturated (load equals weight exactly) or
    unsaturated with its deficit.  Nothing is assumed about how the matching
    was built.
    """
    gadget = fm.gadget
    support_ok, support_violation = True, None
    capacity_ok, capacity_violation = True, None
    for u, v, value in fm.support():
        if not gadget.adjacent(u, v):
            support_ok, support_violation = False, (u, v)
            break
        cap = gadget.edge_weight(u, v, "min")
        if value > cap:
            capacity_ok, capacity_violation = False, (u, v, value, cap)
            break
    budget_ok, budget_violation = True, None
    loads: dict[GadgetVertex, Fraction] = {}
    saturated: list[GadgetVertex] = []
    unsaturated: list[tuple[GadgetVertex, Fraction]] = []
    for v in gadget.vertices():
        load = fm.load(v)
        weight = gadget.vertex_weight(v)
        loads[v] = load
        if load > weight and budget_ok:
            budget_ok, budget_violation = False, (v, load, weight)
        if load == weight:
            saturated.append(v)
        else:
            unsaturated.append((v, weight - load))
    return SaturationReport(
        loads=loads,
        saturated=tuple(saturated),
        unsaturated=tuple(unsaturated),
        support_ok=support_ok,
        support_violation=support_violation,
        capacity_ok=capacity_ok,
        capacity_violation=capacity_violation,
        budget_ok=budget_ok,
        budget_violation=budget_violation,
    )


def saturates_exactly_outside_planted_set(
    fm: FractionalMatching, planted: Planted | None = None
) -> tuple[bool, str]:
    """Convenience check used by the verification campaigns: valid matching,
    saturated set equal to the complement of the planted independent set,
    and zero load on the planted set itself."""
    gadget = fm.gadget
    chosen = resolve_planted(gadget, planted)
    report = validate(fm)
    if not report.ok:
        return False, "invalid fractional matching"
    is_vertices = set(planted_independent_set(gadget, chosen).vertices)
    saturated = set(report.saturated)
    expected = {v for v in gadget.vertices() if v not in is_vertices}
    if saturated != expected:
        return False, "saturated set differs from the complement of the planted set"
    for v in is_vertices:
        if report.loads[v] != 0:
            return False, f"planted vertex {v} has nonzero load"
    return True, "ok"
