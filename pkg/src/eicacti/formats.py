"""Text and JSON formats for graphs and hypergraphs.

Text: one edge (or hyperedge) per line, whitespace-separated tokens; a line
with a single token declares a vertex; ``#`` starts a comment.
JSON: ``{"vertices": [...], "edges": [[u, v], ...]}`` or
``{"vertices": [...], "hyperedges": [[a, b, c], ...]}``.
"""

from __future__ import annotations

import json

from .core import Graph, Hypergraph, sorted_sets, sorted_vertices
from .errors import EIError, ParseError


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def _looks_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def _json_object(text: str, key: str) -> tuple[list, list]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    if not isinstance(data, dict) or key not in data:
        raise ParseError(f'JSON object with a "{key}" list expected')
    vertices = data.get("vertices", [])
    rows = data[key]
    if not isinstance(vertices, list) or not isinstance(rows, list):
        raise ParseError('"vertices" and "%s" must be lists' % key)

    def tok(x):
        if isinstance(x, bool) or not isinstance(x, (str, int)):
            raise ParseError(f"vertex ids must be strings or integers, got {x!r}")
        return str(x)

    out_rows = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"{key}[{i}] is not a list")
        out_rows.append([tok(x) for x in row])
    return [tok(v) for v in vertices], out_rows


def parse_graph(text: str) -> Graph:
    if _looks_json(text):
        vertices, rows = _json_object(text, "edges")
        for i, row in enumerate(rows):
            if len(row) != 2 or row[0] == row[1]:
                raise ParseError(f"edges[{i}] must hold two distinct vertices")
        return _build(Graph.from_edges, rows, vertices)
    vertices, rows = [], []
    for lineno, tokens in _lines(text):
        if len(tokens) == 1:
            vertices.append(tokens[0])
        elif len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise ParseError(f"loop at vertex {tokens[0]}", lineno)
            rows.append(tokens)
        else:
            raise ParseError(f"expected 1 or 2 tokens, got {len(tokens)}", lineno)
    return _build(Graph.from_edges, rows, vertices)


def parse_hypergraph(text: str, general: bool = False) -> Hypergraph:
    """Parse a hypergraph; hyperedges must have exactly 3 vertices unless ``general``."""

    def check(row, where=None):
        if len(set(row)) != len(row):
            raise ParseError(f"duplicate vertex in hyperedge {row}", where)
        if general and len(row) < 2:
            raise ParseError("hyperedges need at least 2 vertices", where)
        if not general and len(row) != 3:
            raise ParseError(f"expected 3 vertices per hyperedge, got {len(row)}", where)

    if _looks_json(text):
        vertices, rows = _json_object(text, "hyperedges")
        for row in rows:
            check(row)
        return _build(Hypergraph.from_edges, rows, vertices)
    vertices, rows = [], []
    for lineno, tokens in _lines(text):
        if len(tokens) == 1:
            vertices.append(tokens[0])
            continue
        check(tokens, lineno)
        rows.append(tokens)
    return _build(Hypergraph.from_edges, rows, vertices)


def _build(factory, rows, vertices):
    try:
        return factory(rows, vertices)
    except (EIError, ValueError, TypeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def graph_to_dict(g: Graph) -> dict:
    return {"vertices": sorted_vertices(g.vertices), "edges": [list(e) for e in g.sorted_edges()]}


def hypergraph_to_dict(h: Hypergraph) -> dict:
    return {"vertices": sorted_vertices(h.vertices), "hyperedges": [list(e) for e in h.sorted_hyperedges()]}


def serialize_graph(g: Graph, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(graph_to_dict(g), sort_keys=True) + "\n"
    covered = set().union(*g.edges) if g.edges else set()
    lines = sorted_vertices(g.vertices - covered)
    lines += [" ".join(e) for e in g.sorted_edges()]
    return "".join(line + "\n" for line in lines)


def serialize_hypergraph(h: Hypergraph, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(hypergraph_to_dict(h), sort_keys=True) + "\n"
    covered = set().union(*h.hyperedges) if h.hyperedges else set()
    lines = sorted_vertices(h.vertices - covered)
    lines += [" ".join(e) for e in sorted_sets(h.hyperedges)]
    return "".join(line + "\n" for line in lines)
