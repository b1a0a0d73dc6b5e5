"""Canonical JSON, DOT, and CSV codecs for the toolkit's objects.

JSON payloads are canonical: sorted keys, no whitespace, rationals as
"p/q" strings, vertex encodings fixed per type.  Two runs with the same
seeds therefore export byte-identical artifacts.  Derived structures
(gadgets, blowups) serialize as their parameters and are rebuilt
deterministically on load.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable

from .bipartite import BipVertex
from .blowup import BlowupGraph, BlowupVertex, blow_up
from .fracmatch import FractionalMatching
from .gadget import GadgetGraph, GadgetVertex, build_gadget
from .graphs import Bipartite, Graph
from .bitsets import elements_of, mask_of
from .ulc import Planted, UlcInstance, new_instance

SCHEMA = "mmmkit/1"


class SchemaError(ValueError):
    """Malformed payload, with a JSON-path pointer to the offending field."""

    def __init__(self, message: str, path: str = "$") -> None:
        super().__init__(f"{message} (at {path})")
        self.path = path


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def frac_str(value: Fraction) -> str:
    return str(Fraction(value))


def parse_fraction(value, path: str = "$") -> Fraction:
    if isinstance(value, bool):
        raise SchemaError("expected a rational, got a boolean", path)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational {value!r}: {exc}", path) from None
    raise SchemaError(f"expected a rational string, got {type(value).__name__}", path)


def _expect(payload, key, path):
    if not isinstance(payload, dict):
        raise SchemaError(f"expected an object, got {type(payload).__name__}", path)
    if key not in payload:
        raise SchemaError(f"missing key {key!r}", path)
    return payload[key]


def _expect_kind(payload, kind: str, path: str = "$") -> None:
    got = _expect(payload, "kind", path)
    if got != kind:
        raise SchemaError(f"expected kind {kind!r}, got {got!r}", f"{path}.kind")


# -- vertices --------------------------------------------------------------


def encode_vertex(v):
    if isinstance(v, GadgetVertex):
        return {"variable": v.variable, "colors": list(elements_of(v.subset))}
    if isinstance(v, BlowupVertex):
        return {"base": encode_vertex(v.base), "copy": v.copy}
    if isinstance(v, BipVertex):
        return {"side": v.side, "base": encode_vertex(v.base)}
    if isinstance(v, tuple):
        return {"tuple": [encode_vertex(x) for x in v]}
    if isinstance(v, (int, str)):
        return v
    raise SchemaError(f"cannot encode vertex of type {type(v).__name__}")


def decode_vertex(payload, path: str = "$"):
    if isinstance(payload, (int, str)) and not isinstance(payload, bool):
        return payload
    if not isinstance(payload, dict):
        raise SchemaError(f"bad vertex encoding {payload!r}", path)
    if "variable" in payload and "colors" in payload:
        colors = payload["colors"]
        if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
            raise SchemaError("colors must be a list of integers", f"{path}.colors")
        return GadgetVertex(payload["variable"], mask_of(colors))
    if "copy" in payload and "base" in payload:
        return BlowupVertex(decode_vertex(payload["base"], f"{path}.base"), payload["copy"])
    if "side" in payload and "base" in payload:
        return BipVertex(payload["side"], decode_vertex(payload["base"], f"{path}.base"))
    if "tuple" in payload:
        items = payload["tuple"]
        if not isinstance(items, list):
            raise SchemaError("tuple must be a list", f"{path}.tuple")
        return tuple(decode_vertex(x, f"{path}.tuple[{i}]") for i, x in enumerate(items))
    raise SchemaError(f"unrecognized vertex shape with keys {sorted(payload)}", path)


# -- label cover instances -------------------------------------------------


def instance_to_payload(instance: UlcInstance) -> dict:
    planted = None
    if instance.planted is not None:
        planted = {
            "labelling": list(instance.planted.labelling),
            "core": sorted(instance.planted.core),
        }
    return {
        "schema": SCHEMA,
        "kind": "ulc_instance",
        "num_vars": instance.num_vars,
        "num_colors": instance.num_colors,
        "edges": [list(e) for e in instance.edges],
        "constraints": [list(p) for p in instance.constraints],
        "planted": planted,
    }


def instance_from_payload(payload, path: str = "$") -> UlcInstance:
    _expect_kind(payload, "ulc_instance", path)
    edges = _expect(payload, "edges", path)
    perms = _expect(payload, "constraints", path)
    if len(edges) != len(perms):
        raise SchemaError("edges and constraints must align", f"{path}.constraints")
    pairs = []
    for i, (edge, perm) in enumerate(zip(edges, perms)):
        if not (isinstance(edge, list) and len(edge) == 2):
            raise SchemaError("edge must be a pair", f"{path}.edges[{i}]")
        pairs.append(((edge[0], edge[1]), perm))
    instance = new_instance(
        _expect(payload, "num_vars", path), _expect(payload, "num_colors", path), pairs
    )
    planted = payload.get("planted")
    if planted is not None:
        labelling = _expect(planted, "labelling", f"{path}.planted")
        core = _expect(planted, "core", f"{path}.planted")
        instance = instance.with_planted(Planted(tuple(labelling), frozenset(core)))
    return instance


# -- derived graphs --------------------------------------------------------


def gadget_to_payload(gadget: GadgetGraph) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "gadget_graph",
        "instance": instance_to_payload(gadget.instance),
        "epsilon": frac_str(gadget.epsilon),
        "flavor": gadget.flavor,
    }


def gadget_from_payload(payload, path: str = "$") -> GadgetGraph:
    _expect_kind(payload, "gadget_graph", path)
    instance = instance_from_payload(_expect(payload, "instance", path), f"{path}.instance")
    epsilon = parse_fraction(_expect(payload, "epsilon", path), f"{path}.epsilon")
    return build_gadget(instance, epsilon, _expect(payload, "flavor", path))


def blowup_to_payload(blowup: BlowupGraph) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "blowup_graph",
        "gadget": gadget_to_payload(blowup.gadget),
        "rho": frac_str(blowup.rho),
    }


def blowup_from_payload(payload, path: str = "$") -> BlowupGraph:
    _expect_kind(payload, "blowup_graph", path)
    gadget = gadget_from_payload(_expect(payload, "gadget", path), f"{path}.gadget")
    return blow_up(gadget, parse_fraction(_expect(payload, "rho", path), f"{path}.rho"))


# -- explicit graphs and matchings ----------------------------------------


def graph_to_payload(graph: Graph) -> dict:
    verts = graph.vertices()
    return {
        "schema": SCHEMA,
        "kind": "graph",
        "vertices": [encode_vertex(v) for v in verts],
        "edges": [[graph.index(u), graph.index(v)] for u, v in graph.edges()],
    }


def graph_from_payload(payload, path: str = "$") -> Graph:
    _expect_kind(payload, "graph", path)
    verts = [
        decode_vertex(v, f"{path}.vertices[{i}]")
        for i, v in enumerate(_expect(payload, "vertices", path))
    ]
    g = Graph(vertices=verts)
    for i, edge in enumerate(_expect(payload, "edges", path)):
        if not (isinstance(edge, list) and len(edge) == 2):
            raise SchemaError("edge must be an index pair", f"{path}.edges[{i}]")
        try:
            g.add_edge(verts[edge[0]], verts[edge[1]])
        except (IndexError, TypeError):
            raise SchemaError("edge index out of range", f"{path}.edges[{i}]") from None
    return g


def bipartite_to_payload(bip: Bipartite) -> dict:
    li = {v: i for i, v in enumerate(bip.left)}
    ri = {v: i for i, v in enumerate(bip.right)}
    return {
        "schema": SCHEMA,
        "kind": "bipartite",
        "left": [encode_vertex(v) for v in bip.left],
        "right": [encode_vertex(v) for v in bip.right],
        "edges": [[li[u], ri[v]] for u, v in bip.edges()],
    }


def bipartite_from_payload(payload, path: str = "$") -> Bipartite:
    _expect_kind(payload, "bipartite", path)
    left = [
        decode_vertex(v, f"{path}.left[{i}]")
        for i, v in enumerate(_expect(payload, "left", path))
    ]
    right = [
        decode_vertex(v, f"{path}.right[{i}]")
        for i, v in enumerate(_expect(payload, "right", path))
    ]
    bp = Bipartite(left=left, right=right)
    for i, edge in enumerate(_expect(payload, "edges", path)):
        if not (isinstance(edge, list) and len(edge) == 2):
            raise SchemaError("edge must be an index pair", f"{path}.edges[{i}]")
        try:
            bp.add_edge(left[edge[0]], right[edge[1]])
        except (IndexError, TypeError):
            raise SchemaError("edge index out of range", f"{path}.edges[{i}]") from None
    return bp


def sseh_from_payload(payload, path: str = "$") -> Bipartite:
    """The padded gadget graph of a bundle; original and planted sides stay payload-only."""
    _expect_kind(payload, "sseh_gadget", path)
    return bipartite_from_payload(_expect(payload, "gadget", path), f"{path}.gadget")


def matching_to_payload(matching: Iterable) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "matching",
        "pairs": [[encode_vertex(u), encode_vertex(v)] for u, v in matching],
    }


def matching_from_payload(payload, path: str = "$") -> tuple:
    _expect_kind(payload, "matching", path)
    pairs = []
    for i, pair in enumerate(_expect(payload, "pairs", path)):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise SchemaError("pair must have two endpoints", f"{path}.pairs[{i}]")
        pairs.append(
            (
                decode_vertex(pair[0], f"{path}.pairs[{i}][0]"),
                decode_vertex(pair[1], f"{path}.pairs[{i}][1]"),
            )
        )
    return tuple(pairs)


def fracmatch_to_payload(fm: FractionalMatching) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "fractional_matching",
        "gadget": gadget_to_payload(fm.gadget),
        "edges": [
            [encode_vertex(u), encode_vertex(v), frac_str(value)]
            for u, v, value in fm.support()
        ],
    }


def fracmatch_from_payload(payload, path: str = "$") -> FractionalMatching:
    _expect_kind(payload, "fractional_matching", path)
    gadget = gadget_from_payload(_expect(payload, "gadget", path), f"{path}.gadget")
    fm = FractionalMatching(gadget)
    for i, row in enumerate(_expect(payload, "edges", path)):
        if not (isinstance(row, list) and len(row) == 3):
            raise SchemaError("edge row must be [u, v, value]", f"{path}.edges[{i}]")
        fm.add(
            decode_vertex(row[0], f"{path}.edges[{i}][0]"),
            decode_vertex(row[1], f"{path}.edges[{i}][1]"),
            parse_fraction(row[2], f"{path}.edges[{i}][2]"),
        )
    return fm


# -- dispatch --------------------------------------------------------------

_ENCODERS = (
    (UlcInstance, instance_to_payload),
    (GadgetGraph, gadget_to_payload),
    (BlowupGraph, blowup_to_payload),
    (FractionalMatching, fracmatch_to_payload),
    (Graph, graph_to_payload),
    (Bipartite, bipartite_to_payload),
)

_DECODERS = {
    "ulc_instance": instance_from_payload,
    "gadget_graph": gadget_from_payload,
    "blowup_graph": blowup_from_payload,
    "fractional_matching": fracmatch_from_payload,
    "graph": graph_from_payload,
    "bipartite": bipartite_from_payload,
    "sseh_gadget": sseh_from_payload,
    "matching": matching_from_payload,
}


def to_payload(obj) -> dict:
    for cls, encoder in _ENCODERS:
        if isinstance(obj, cls):
            return encoder(obj)
    raise SchemaError(f"no JSON encoding for {type(obj).__name__}")


def from_payload(payload, path: str = "$"):
    kind = _expect(payload, "kind", path)
    schema = _expect(payload, "schema", path)
    if schema != SCHEMA:
        raise SchemaError(f"unsupported schema {schema!r}", f"{path}.schema")
    decoder = _DECODERS.get(kind)
    if decoder is None:
        raise SchemaError(f"unknown kind {kind!r}", f"{path}.kind")
    return decoder(payload, path)


def loads(text: str):
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from None
    return from_payload(payload)


def dumps(obj) -> str:
    return canonical_json(to_payload(obj))


# -- DOT and CSV -----------------------------------------------------------


def _vertex_label(v) -> str:
    label = getattr(v, "label", None)
    return label() if callable(label) else str(v)


def graph_to_dot(graph, name: str = "G", weighted: bool = False) -> str:
    """Render any graph-protocol object (or a Bipartite) as undirected DOT."""
    if hasattr(graph, "vertices"):
        verts = list(graph.vertices())
        edges = graph.edges()
    else:
        verts = list(graph.left) + list(graph.right)
        edges = graph.edges()
    ids = {v: f"v{i}" for i, v in enumerate(verts)}
    weight_of = getattr(graph, "vertex_weight", None)
    lines = [f"graph {name} {{"]
    for v in verts:
        attrs = [f'label="{_vertex_label(v)}"']
        if weighted and weight_of is not None:
            attrs.append(f'weight="{frac_str(weight_of(v))}"')
        lines.append(f"  {ids[v]} [{', '.join(attrs)}];")
    for u, v in edges:
        lines.append(f"  {ids[u]} -- {ids[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def rows_to_csv(fieldnames: Iterable[str], rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fieldnames), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()
