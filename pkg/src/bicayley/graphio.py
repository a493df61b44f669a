"""Graph serialisation: JSON (lossless), DOT and edge lists (export only)."""
from __future__ import annotations

import json

from bicayley.errors import ParseError
from bicayley.graph import LabeledGraph

JSON_VERSION = 1


def vertex_name(g: LabeledGraph, v: int) -> str:
    side, element = g.labels[v]
    return f"{element}" if side is None else f"{side}:{element}"


def export_dot(g: LabeledGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  "{vertex_name(g, v)}";' for v in range(g.n)]
    lines += [f'  "{vertex_name(g, u)}" -- "{vertex_name(g, v)}";' for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_edgelist(g: LabeledGraph) -> str:
    lines = [f"# vertices {g.n} edges {g.edge_count}"]
    lines += [f"{vertex_name(g, u)} {vertex_name(g, v)}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def graph_to_dict(g: LabeledGraph) -> dict:
    return {
        "version": JSON_VERSION,
        "groupDescriptor": g.group_descriptor,
        "vertices": [{"side": s, "element": x} for s, x in g.labels],
        "edges": [[u, v] for u, v in g.edges()],
        "meta": g.meta,
    }


def export_json(g: LabeledGraph) -> str:
    return json.dumps(graph_to_dict(g), separators=(",", ":")) + "\n"


def import_json(text: str) -> LabeledGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed graph JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return graph_from_dict(data)


def graph_from_dict(data) -> LabeledGraph:
    if not isinstance(data, dict):
        raise ParseError("graph JSON must be an object")
    try:
        verts = data["vertices"]
        edges = data["edges"]
    except KeyError as exc:
        raise ParseError(f"graph JSON missing field {exc.args[0]!r}") from None
    if data.get("version", JSON_VERSION) != JSON_VERSION:
        raise ParseError(f"unsupported graph JSON version {data.get('version')!r}")
    try:
        labels = [(v["side"], v["element"]) for v in verts]
        pairs = [(int(u), int(v)) for u, v in edges]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad vertex or edge entry: {exc}") from None
    n = len(labels)
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge [{u}, {v}] out of range for {n} vertices")
    try:
        return LabeledGraph.from_edges(n, pairs, labels, data.get("meta", ""), data.get("groupDescriptor"))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_graph(path) -> LabeledGraph:
    with open(path, encoding="utf-8") as fh:
        return import_json(fh.read())


def write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
