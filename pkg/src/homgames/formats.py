"""Text and JSON serializers for graphs, formulas, instances and
decomposition certificates.

The graph format is line oriented and diff friendly::

    n 4
    e 0 1
    e 1 2
    l 0 1,2

``n`` gives the vertex count, each ``e`` line an edge, and optional ``l``
lines the colour list of a vertex (lists are all-or-nothing: a graph either
has an ``l`` line for every vertex or none at all).  Everything else uses
JSON objects with a ``type`` tag.  Every parse/serialize pair round-trips
exactly.
"""

from __future__ import annotations

import json

from .edp import EdpInstance
from .graphs import Graph, graph
from .quantified import (CONST_FALSE, Prefix, QbfInstance, QcspInstance,
                         QnaeInstance)
from .widths import (EliminationForest, PathDecomposition, TreeDecomposition,
                     VertexOrder)


class FormatError(ValueError):
    """Raised on malformed input, naming the offending line or field."""


# ---------------------------------------------------------------------------
# graph text format


def serialize_graph(g):
    lines = [f"n {g.n}"]
    for u, v in g.sorted_edges:
        lines.append(f"e {u} {v}")
    if g.lists is not None:
        for v in range(g.n):
            lines.append("l %d %s" % (v, ",".join(map(str, sorted(g.lists[v])))))
    return "\n".join(lines) + "\n"


def parse_graph(text):
    n = None
    edges = []
    lists = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "n" and len(parts) == 2:
                if n is not None:
                    raise FormatError(f"line {lineno}: duplicate n line")
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2])))
            elif parts[0] == "l" and len(parts) == 3:
                v = int(parts[1])
                lists[v] = frozenset(int(c) for c in parts[2].split(","))
            else:
                raise FormatError(f"line {lineno}: unrecognised record {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: {raw!r}: {exc}") from None
    if n is None:
        raise FormatError("missing n line")
    if lists and set(lists) != set(range(n)):
        missing = sorted(set(range(n)) - set(lists))
        raise FormatError(f"l lines must cover every vertex; missing {missing}")
    try:
        return graph(n, edges, lists=lists if lists else None)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# ---------------------------------------------------------------------------
# JSON object formats


def _prefix_to_json(p):
    return [[q, v] for q, v in p.entries]


def _prefix_from_json(obj):
    return Prefix(tuple((q, v) for q, v in obj))


def _require(obj, typ):
    if not isinstance(obj, dict) or obj.get("type") != typ:
        raise FormatError(f"expected a {typ!r} object, got {obj.get('type') if isinstance(obj, dict) else obj!r}")


def to_json(x):
    """Serialize a formula, instance, order or certificate to a JSON string."""
    return json.dumps(_to_obj(x), separators=(",", ":"), sort_keys=True) + "\n"


def _to_obj(x):
    if isinstance(x, QbfInstance):
        return {"type": "qbf",
                "prefix": _prefix_to_json(x.prefix),
                "clauses": [sorted([v, pos] for v, pos in c) for c in x.clauses]}
    if isinstance(x, QnaeInstance):
        return {"type": "qnae",
                "prefix": _prefix_to_json(x.prefix),
                "triples": [[list(t) if t != CONST_FALSE else CONST_FALSE
                             for t in triple] for triple in x.triples]}
    if isinstance(x, QcspInstance):
        return {"type": "qcsp",
                "prefix": _prefix_to_json(x.prefix),
                "edge_atoms": [list(e) for e in x.edge_atoms],
                "list_atoms": [[v, sorted(lst)] for v, lst in x.list_atoms],
                "allow_any_lists": x.allow_any_lists}
    if isinstance(x, PathDecomposition):
        return {"type": "path-decomposition",
                "bags": [sorted(b) for b in x.bags]}
    if isinstance(x, TreeDecomposition):
        return {"type": "tree-decomposition",
                "bags": [sorted(b) for b in x.bags],
                "tree": sorted([min(e), max(e)] for e in x.tree)}
    if isinstance(x, EliminationForest):
        return {"type": "elimination-forest",
                "parent": list(x.parent), "height": x.height}
    if isinstance(x, VertexOrder):
        return {"type": "vertex-order", "order": list(x.order)}
    if isinstance(x, EdpInstance):
        return {"type": "edp",
                "graph": serialize_graph(x.graph),
                "pairs": [list(p) for p in x.pairs],
                "min_length": x.min_length}
    if isinstance(x, Graph):
        return {"type": "graph", "text": serialize_graph(x)}
    raise FormatError(f"cannot serialize {type(x).__name__}")


def from_json(text):
    """Inverse of to_json; dispatches on the object's type tag."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "type" not in obj:
        raise FormatError("missing type tag")
    typ = obj["type"]
    try:
        if typ == "qbf":
            return QbfInstance(_prefix_from_json(obj["prefix"]),
                               tuple(frozenset((v, pos) for v, pos in c)
                                     for c in obj["clauses"]))
        if typ == "qnae":
            return QnaeInstance(_prefix_from_json(obj["prefix"]),
                                tuple(tuple(CONST_FALSE if t == CONST_FALSE
                                            else (t[0], t[1]) for t in triple)
                                      for triple in obj["triples"]))
        if typ == "qcsp":
            return QcspInstance(_prefix_from_json(obj["prefix"]),
                                tuple(tuple(e) for e in obj["edge_atoms"]),
                                tuple((v, frozenset(lst))
                                      for v, lst in obj["list_atoms"]),
                                obj.get("allow_any_lists", False))
        if typ == "path-decomposition":
            return PathDecomposition(tuple(frozenset(b) for b in obj["bags"]))
        if typ == "tree-decomposition":
            return TreeDecomposition(tuple(frozenset(b) for b in obj["bags"]),
                                     frozenset(tuple(e) for e in obj["tree"]))
        if typ == "elimination-forest":
            return EliminationForest(tuple(obj["parent"]), obj["height"])
        if typ == "vertex-order":
            return VertexOrder(tuple(obj["order"]))
        if typ == "edp":
            return EdpInstance(parse_graph(obj["graph"]),
                               tuple(tuple(p) for p in obj["pairs"]),
                               obj.get("min_length", 0))
        if typ == "graph":
            return parse_graph(obj["text"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed {typ} object: {exc}") from None
    raise FormatError(f"unknown type tag {typ!r}")
