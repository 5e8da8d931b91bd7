"""Free-tree canonical forms, small-tree enumeration and the exceptional trees."""

from __future__ import annotations

from functools import lru_cache

from .core import Graph, Vertex, sorted_vertices, vkey
from .errors import NotATree


def path_graph(n: int, labels=None) -> Graph:
    labels = list(labels) if labels is not None else [str(i) for i in range(1, n + 1)]
    return Graph.from_edges(zip(labels, labels[1:]), vertices=labels)


def cycle_graph(n: int, labels=None) -> Graph:
    labels = list(labels) if labels is not None else [str(i) for i in range(1, n + 1)]
    return Graph.from_edges(zip(labels, labels[1:] + labels[:1]), vertices=labels)


def star_graph(m: int, center: Vertex = "c", leaves=None) -> Graph:
    leaves = list(leaves) if leaves is not None else [f"a{i}" for i in range(1, m + 1)]
    return Graph.from_edges(((center, a) for a in leaves), vertices=[center])


T7 = Graph.from_edges([("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v3", "v5")])
T12 = Graph.from_edges([("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v2", "v5"), ("v5", "v6")])


def tree_centers(t: Graph) -> list[Vertex]:
    """One or two center vertices, found by stripping leaves."""
    degree = {v: t.degree(v) for v in t.vertices}
    layer = [v for v in t.vertices if degree[v] <= 1]
    remaining = len(t.vertices)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.neighbors(v):
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted_vertices(layer if remaining <= 2 and layer else t.vertices)


def _rooted_code(t: Graph, root: Vertex) -> tuple[str, list[Vertex]]:
    """AHU code of ``t`` rooted at ``root`` and the matching canonical preorder."""
    parent = {root: None}
    order = [root]
    for v in order:
        for w in sorted_vertices(t.neighbors(v)):
            if w not in parent:
                parent[w] = v
                order.append(w)
    code: dict[Vertex, str] = {}
    preorder: dict[Vertex, list[Vertex]] = {}
    for v in reversed(order):
        kids = sorted(
            (w for w in t.neighbors(v) if parent.get(w) == v),
            key=lambda w: (code[w], vkey(w)),
        )
        code[v] = "(" + "".join(code[w] for w in kids) + ")"
        seq = [v]
        for w in kids:
            seq.extend(preorder.pop(w))
        preorder[v] = seq
    return code[root], preorder[root]


def canonical_form(t: Graph) -> tuple[str, list[Vertex]]:
    """Canonical string of a free tree and a vertex ordering realizing it.

    Two trees are isomorphic iff their strings agree; in that case pairing
    the returned orderings position by position gives an isomorphism.
    """
    if not t.is_tree():
        raise NotATree("graph is not a tree")
    best = None
    for c in tree_centers(t):
        code, order = _rooted_code(t, c)
        if best is None or code < best[0]:
            best = (code, order)
    return best


def canonical_code(t: Graph) -> str:
    return canonical_form(t)[0]


def graph_from_code(code: str) -> Graph:
    """Rebuild a tree (vertices '0'..'n-1' in preorder) from its AHU code."""
    edges = []
    stack: list[int] = []
    count = 0
    for ch in code:
        if ch == "(":
            v = count
            count += 1
            if stack:
                edges.append((str(stack[-1]), str(v)))
            stack.append(v)
        else:
            stack.pop()
    return Graph.from_edges(edges, vertices=[str(i) for i in range(count)])


@lru_cache(maxsize=None)
def _exceptional_codes() -> dict[str, str]:
    table = {f"P{n}": path_graph(n) for n in range(1, 7)}
    table["T7"] = T7
    table["T12"] = T12
    return {canonical_code(g): name for name, g in table.items()}


EXCEPTIONAL_NAMES = ("P1", "P2", "P3", "P4", "P5", "P6", "T7", "T12")


def classify_exceptional_tree(t: Graph) -> str | None:
    """Name of the exceptional tree isomorphic to ``t`` (P1..P6, T7, T12), else None."""
    if not t.is_tree():
        raise NotATree("graph is not a tree")
    if len(t.vertices) > 6:
        return None
    return _exceptional_codes().get(canonical_code(t))


def is_path(t: Graph) -> bool:
    return t.is_tree() and all(t.degree(v) <= 2 for v in t.vertices)


def is_star(t: Graph) -> bool:
    n = len(t.vertices)
    return t.is_tree() and n >= 3 and any(t.degree(v) == n - 1 for v in t.vertices)


def path_order(t: Graph) -> list[Vertex]:
    """Vertices of a path graph from its smaller end to the other."""
    if len(t.vertices) == 1:
        return list(t.vertices)
    ends = sorted_vertices(v for v in t.vertices if t.degree(v) == 1)
    order = [ends[0]]
    prev = None
    while len(order) < len(t.vertices):
        nxt = next(w for w in t.neighbors(order[-1]) if w != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def enumerate_trees(n: int) -> list[Graph]:
    """All free trees on exactly ``n`` vertices up to isomorphism, labeled '0'..'n-1'."""
    if n < 1:
        return []
    codes = {canonical_code(Graph(frozenset({"0"})))}
    for size in range(2, n + 1):
        grown = set()
        for code in codes:
            g = graph_from_code(code)
            new = str(size - 1)
            for v in g.vertices:
                grown.add(canonical_code(Graph.from_edges(list(g.edges) + [(v, new)], g.vertices)))
        codes = grown
    return [graph_from_code(c) for c in sorted(codes, key=lambda c: (len(c), c))]
