"""Explicit 3-uniform constructions.

Standalone witnesses for cycles, paths and stars, plus attachment gadgets
that extend a certified pair (G1, H1) by a tree or a short cycle glued at a
single vertex.  Every function certifies its output (recomputes EI and
compares against the expected graph) before returning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import Graph, Hypergraph, Vertex, ei_as_graph, hypergraph_union, sorted_vertices, vkey
from .errors import (
    BaseTooSmall,
    CertificationError,
    CycleTooShort,
    DegreeTooLow,
    HelperClash,
    HelperNotNeighbor,
    InvalidGraph,
    NoNeighborHelper,
    NotATree,
    PathTooShort,
    StarTooSmall,
    VertexCollision,
)
from .trees import classify_exceptional_tree, is_star


def _labels(n: int, labels) -> list[Vertex]:
    if labels is None:
        return [str(i) for i in range(1, n + 1)]
    labels = list(labels)
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise VertexCollision("labels are not distinct")
    return labels


def certified(expected: Graph, hyperedges, vertices=None) -> Hypergraph:
    """Build the hypergraph on ``expected``'s vertex set and insist EI reproduces it."""
    h = Hypergraph(frozenset(expected.vertices if vertices is None else vertices),
                   frozenset(frozenset(e) for e in hyperedges))
    got = ei_as_graph(h)
    if got != expected:
        missing = expected.edges - got.edges
        extra = got.edges - expected.edges
        raise CertificationError(
            f"construction failed certification: missing {sorted(map(sorted, missing))}, "
            f"extra {sorted(map(sorted, extra))}",
            missing=missing, extra=extra,
        )
    return h


# -- standalone witnesses ---------------------------------------------------


def cycle_witness(n: int, labels: Sequence[Vertex] | None = None) -> Hypergraph:
    """Sliding windows {v_{i-1}, v_i, v_{i+1}} around C_n (n >= 5)."""
    if n < 5:
        raise CycleTooShort(f"C{n} has no 3-uniform witness (n must be at least 5)")
    vs = _labels(n, labels)
    target = Graph.from_edges(zip(vs, vs[1:] + vs[:1]))
    return certified(target, ({vs[i - 1], vs[i], vs[(i + 1) % n]} for i in range(n)))


def path_witness(n: int, labels: Sequence[Vertex] | None = None) -> Hypergraph:
    """Windows along P_n plus the end gadgets {v1, v2, v5} and {v_{n-4}, v_{n-1}, v_n}."""
    if n < 7:
        raise PathTooShort(f"path_witness needs n >= 7, got {n}")
    vs = _labels(n, labels)
    target = Graph.from_edges(zip(vs, vs[1:]))
    edges = [{vs[i], vs[i + 1], vs[i + 2]} for i in range(n - 2)]
    edges.append({vs[0], vs[1], vs[4]})
    edges.append({vs[n - 5], vs[n - 2], vs[n - 1]})
    return certified(target, edges)


def star_witness(m: int, center: Vertex = "c", leaves: Sequence[Vertex] | None = None) -> Hypergraph:
    """{c, a_i, a_{i+1}} cyclically over the leaves of K_{1,m} (m >= 3)."""
    if m < 3:
        raise StarTooSmall(f"K_1,{m} is exceptional (m must be at least 3)")
    if leaves is None:
        leaves = [f"a{i}" for i in range(1, m + 1)]
    leaves = _labels(m, leaves)
    if center in leaves:
        raise VertexCollision(f"center {center} is also a leaf")
    target = Graph.from_edges((center, a) for a in leaves)
    return certified(target, ({center, leaves[i], leaves[(i + 1) % m]} for i in range(m)))


# -- attachment gadgets -----------------------------------------------------


@dataclass(frozen=True)
class AttachmentContext:
    """A certified pair (base_graph, base_witness) and the vertex to glue at.

    ``helper_vertices`` optionally pins the gadget helpers in the order the
    gadget documents (u, w) / (u, x) / (u, x, y, z); unpinned helpers are
    chosen deterministically.
    """

    base_graph: Graph
    base_witness: Hypergraph
    attach_vertex: Vertex
    helper_vertices: tuple = field(default=())
    check: bool = True

    def __post_init__(self):
        object.__setattr__(self, "helper_vertices", tuple(self.helper_vertices))
        if self.attach_vertex not in self.base_graph.vertices:
            raise InvalidGraph(f"attach vertex {self.attach_vertex} is not in the base graph")
        if len(set(self.helper_vertices)) != len(self.helper_vertices):
            raise HelperClash("helper vertices are not pairwise distinct")
        for h in self.helper_vertices:
            if h not in self.base_graph.vertices:
                raise HelperClash(f"helper {h} is not a base vertex")
        if self.check:
            if self.base_witness.vertices != self.base_graph.vertices:
                raise InvalidGraph("base witness and base graph have different vertex sets")
            if ei_as_graph(self.base_witness) != self.base_graph:
                raise CertificationError("base witness does not certify the base graph")

    @property
    def v(self) -> Vertex:
        return self.attach_vertex

    def helper(self, i: int) -> Vertex | None:
        return self.helper_vertices[i] if i < len(self.helper_vertices) else None

    def extend(self, graph: Graph, witness: Hypergraph, vertex: Vertex | None = None) -> AttachmentContext:
        return AttachmentContext(graph, witness, self.v if vertex is None else vertex, check=False)


def _fresh(ctx: AttachmentContext, new: Sequence[Vertex]) -> list[Vertex]:
    new = list(new)
    if len(set(new)) != len(new):
        raise VertexCollision("new vertices are not distinct")
    clash = [v for v in new if v in ctx.base_graph.vertices]
    if clash:
        raise VertexCollision(f"vertices {sorted_vertices(clash)} already belong to the base graph")
    return new


def _neighbor_helper(ctx: AttachmentContext) -> Vertex:
    nbrs = ctx.base_graph.neighbors(ctx.v)
    u = ctx.helper(0)
    if u is None:
        if not nbrs:
            raise NoNeighborHelper(f"attach vertex {ctx.v} has no neighbor in the base graph")
        return min(nbrs, key=vkey)
    if u not in nbrs:
        raise NoNeighborHelper(f"helper {u} is not a neighbor of {ctx.v}")
    return u


def _other_helpers(ctx: AttachmentContext, count: int, avoid: set, start: int = 1) -> list[Vertex]:
    """Pinned helpers at positions start.. or the least base vertices outside ``avoid``."""
    pinned = [ctx.helper(i) for i in range(start, start + count)]
    taken = set(avoid) | {p for p in pinned if p is not None}
    pool = iter(v for v in sorted_vertices(ctx.base_graph.vertices) if v not in taken)
    out = []
    for p in pinned:
        if p is None:
            p = next(pool, None)
            if p is None:
                raise BaseTooSmall(f"base graph has too few vertices for {count} extra helpers")
        elif p in avoid:
            raise HelperClash(f"helper {p} coincides with the attach vertex or u")
        out.append(p)
    return out


def _finish(ctx: AttachmentContext, component: Graph, new_edges) -> tuple[Graph, Hypergraph]:
    target = ctx.base_graph.union(component)
    extra = [frozenset(e) for e in new_edges]
    h = certified(target, list(ctx.base_witness.hyperedges) + extra)
    return target, h


def attach_p2(ctx: AttachmentContext, new_vertex: Vertex) -> Hypergraph:
    """Pendant edge {v1, v2}: adds {u, v1, v2} and {w, v1, v2} for neighbors u != w of v1."""
    return _attach_p2(ctx, new_vertex)[1]


def _attach_p2(ctx, new_vertex):
    (v2,) = _fresh(ctx, [new_vertex])
    v1 = ctx.v
    nbrs = ctx.base_graph.neighbors(v1)
    if len(nbrs) < 2:
        raise DegreeTooLow(f"{v1} has degree {len(nbrs)} < 2; a pendant edge needs two neighbors")
    picks = []
    for i in range(2):
        p = ctx.helper(i)
        if p is None:
            p = min((w for w in nbrs if w not in picks and w not in ctx.helper_vertices[:2]), key=vkey)
        elif p not in nbrs:
            raise HelperNotNeighbor(f"helper {p} is not a neighbor of {v1}")
        picks.append(p)
    u, w = picks
    component = Graph.from_edges([(v1, v2)])
    return _finish(ctx, component, [{u, v1, v2}, {w, v1, v2}])


def attach_path_end(ctx: AttachmentContext, new_vertices: Sequence[Vertex]) -> Hypergraph:
    """Path v1 v2 ... vn (n >= 3) glued at its end v1 = attach vertex.

    Adds {u,v1,v2}, the windows {v_i,v_{i+1},v_{i+2}} and {w,v_{n-1},v_n},
    where u neighbors v1 and w is any other base vertex outside {u, v1}.
    """
    return _attach_path_end(ctx, new_vertices)[1]


def _attach_path_end(ctx, new_vertices):
    new = _fresh(ctx, new_vertices)
    if len(new) < 2:
        raise PathTooShort("attach_path_end needs a path with at least 3 vertices")
    u = _neighbor_helper(ctx)
    (w,) = _other_helpers(ctx, 1, {ctx.v, u})
    path = [ctx.v] + new
    n = len(path)
    hyper = [{u, path[0], path[1]}]
    hyper += [{path[i], path[i + 1], path[i + 2]} for i in range(n - 2)]
    hyper.append({w, path[n - 2], path[n - 1]})
    return _finish(ctx, Graph.from_edges(zip(path, path[1:])), hyper)


def attach_path_inner(ctx: AttachmentContext, left_vertices: Sequence[Vertex],
                      right_vertices: Sequence[Vertex]) -> Hypergraph:
    """Path glued at an inner vertex v.

    ``left_vertices`` and ``right_vertices`` list the new vertices on each
    side, ordered outward from v.  The longer side goes first as a path end;
    the shorter follows (as a pendant edge when it is a single vertex, v then
    having degree >= 2).  A P3 glued at its middle is a 2-fusion with K_{1,3}
    along an existing edge {v, u}.
    """
    return _attach_path_inner(ctx, left_vertices, right_vertices)[1]


def _attach_path_inner(ctx, left, right):
    left = list(left)
    right = list(right)
    _fresh(ctx, left + right)
    if not left or not right:
        side = left or right
        return _attach_p2(ctx, side[0]) if len(side) == 1 else _attach_path_end(ctx, side)
    if len(left) == 1 and len(right) == 1:
        u = _neighbor_helper(ctx)
        a, b = left[0], right[0]
        v = ctx.v
        component = Graph.from_edges([(a, v), (v, b)])
        return _finish(ctx, component, [{v, a, b}, {v, a, u}, {v, b, u}])
    first, second = (left, right) if len(left) >= len(right) else (right, left)
    graph, h = _attach_path_end(ctx, first)
    step = ctx.extend(graph, h)
    if len(second) == 1:
        return _attach_p2(step, second[0])
    return _attach_path_end(step, second)


def attach_c3(ctx: AttachmentContext, new_vertices: Sequence[Vertex]) -> Hypergraph:
    """Triangle v1 v2 v3 glued at v1.

    Adds {v1,v2,v3}, {u,v1,v2}, {u,v1,v3}, {x,v2,v3} with u a neighbor of v1
    and x any base vertex outside {v1, u}.
    """
    return _attach_c3(ctx, new_vertices)[1]


def _attach_c3(ctx, new_vertices):
    v2, v3 = _fresh(ctx, new_vertices)
    v1 = ctx.v
    u = _neighbor_helper(ctx)
    (x,) = _other_helpers(ctx, 1, {v1, u})
    component = Graph.from_edges([(v1, v2), (v2, v3), (v3, v1)])
    return _finish(ctx, component, [{v1, v2, v3}, {u, v1, v2}, {u, v1, v3}, {x, v2, v3}])


def attach_c4(ctx: AttachmentContext, new_vertices: Sequence[Vertex]) -> Hypergraph:
    """4-cycle v1 v2 v3 v4 glued at v1; the base needs at least 5 vertices.

    Adds {v1,v2,v3}, {v1,v2,v4}, {u,v1,v4}, {x,v2,v3}, {y,v3,v4}, {z,v3,v4}.
    A base that is exactly K_{1,3} is handled by the two dedicated K_{1,3}/C4
    fusions instead, which replace rather than extend the base witness.
    """
    return _attach_c4(ctx, new_vertices)[1]


def _attach_c4(ctx, new_vertices):
    v2, v3, v4 = _fresh(ctx, new_vertices)
    v1 = ctx.v
    base = ctx.base_graph
    if len(base.vertices) < 5:
        if len(base.vertices) == 4 and is_star(base):
            return _k13_base_c4(ctx, [v2, v3, v4])
        raise BaseTooSmall(f"C4 attachment needs at least 5 base vertices, base has {len(base.vertices)}")
    u = _neighbor_helper(ctx)
    x, y, z = _other_helpers(ctx, 3, {v1, u})
    component = Graph.from_edges([(v1, v2), (v2, v3), (v3, v4), (v4, v1)])
    return _finish(ctx, component, [
        {v1, v2, v3}, {v1, v2, v4}, {u, v1, v4}, {x, v2, v3}, {y, v3, v4}, {z, v3, v4},
    ])


def _k13_base_c4(ctx, new):
    base = ctx.base_graph
    v = ctx.v
    center = next(c for c in base.vertices if base.degree(c) == 3)
    if v == center:
        leaves = sorted_vertices(base.neighbors(center))
        labels = leaves + [center] + new
        variant = "center"
    else:
        others = sorted_vertices(base.vertices - {center, v})
        labels = [center] + others + [v] + new
        variant = "leaf"
    graph, h = k13_c4_fusion(variant, labels)
    return graph, h


# -- the two K_{1,3} / C4 fusions -------------------------------------------

_K13_C4 = {
    # center v1, cycle v4 v5 v6 v7 glued at leaf v4
    "leaf": (
        [(1, 2, 3), (1, 2, 4), (1, 3, 4), (1, 4, 7), (1, 5, 6), (2, 6, 7), (3, 6, 7), (4, 5, 6), (4, 5, 7)],
        [(1, 2), (1, 3), (1, 4), (4, 5), (5, 6), (6, 7), (7, 4)],
    ),
    # center v4, cycle glued at the center
    "center": (
        [(1, 3, 4), (1, 4, 7), (2, 3, 4), (2, 4, 5), (2, 4, 7), (3, 6, 7), (4, 5, 6), (5, 6, 7)],
        [(1, 4), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 4)],
    ),
}


def k13_c4_fusion(variant: str, labels: Sequence[Vertex] | None = None) -> tuple[Graph, Hypergraph]:
    """K_{1,3} fused with C4 at one vertex, for a leaf ("leaf") or the center ("center").

    ``labels`` are v1..v7; in the leaf variant v1 is the star center and v4
    the shared leaf, in the center variant v4 is both center and cycle vertex.
    The cycle is v4 v5 v6 v7.
    """
    if variant not in _K13_C4:
        raise ValueError(f"variant must be 'leaf' or 'center', got {variant!r}")
    vs = _labels(7, labels if labels is not None else [f"v{i}" for i in range(1, 8)])
    hyper, edges = _K13_C4[variant]
    target = Graph.from_edges([(vs[a - 1], vs[b - 1]) for a, b in edges])
    h = certified(target, ({vs[i - 1] for i in t} for t in hyper))
    return target, h


# -- trees ------------------------------------------------------------------


def _pendant_walk(t: Graph, parent: dict, start: Vertex, depth: dict) -> list[Vertex]:
    """Follow children from ``start`` always into the deepest subtree."""
    path = [start]
    while True:
        kids = [w for w in t.neighbors(path[-1]) if parent.get(w) == path[-1]]
        if not kids:
            return path
        path.append(min(kids, key=lambda w: (-depth[w], vkey(w))))


def tree_path_cover(t: Graph, root: Vertex) -> list[tuple[Vertex, list[Vertex], list[Vertex]]]:
    """Decompose ``t`` rooted at ``root`` into gluing steps.

    Each step is (anchor, left, right): new vertices hanging from ``anchor``
    ordered outward, with ``right`` non-empty only for the first step when
    the root is an inner vertex.  Every anchor after the first step is an
    inner vertex of an earlier path or the root after its first path, so it
    already has degree >= 2 when the step is applied.
    """
    parent = {root: None}
    order = [root]
    for v in order:
        for w in sorted_vertices(t.neighbors(v)):
            if w not in parent:
                parent[w] = v
                order.append(w)
    height = {}
    for v in reversed(order):
        kids = [w for w in t.neighbors(v) if parent.get(w) == v]
        height[v] = 1 + max((height[w] for w in kids), default=0)

    def branches(v, exclude=()):
        kids = [w for w in t.neighbors(v) if parent.get(w) == v and w not in exclude]
        return sorted(kids, key=lambda w: (-height[w], vkey(w)))

    steps = []
    placed = {root}
    first = branches(root)
    if not first:
        return steps
    left = _pendant_walk(t, parent, first[0], height)
    right = _pendant_walk(t, parent, first[1], height) if len(first) > 1 else []
    steps.append((root, left, right))
    placed.update(left, right)
    queue = [root] + left + right
    for v in queue:
        for w in branches(v):
            if w in placed:
                continue
            path = _pendant_walk(t, parent, w, height)
            steps.append((v, path, []))
            placed.update(path)
            queue.extend(path)
    return steps


def attach_tree(ctx: AttachmentContext, t: Graph) -> Hypergraph:
    """Glue tree ``t`` at the attach vertex (its only vertex shared with the base).

    A non-exceptional tree contributes its own standalone witness (the union
    is a 1-fusion).  Exceptional trees are split into pendant paths glued one
    by one with the path gadgets.
    """
    return _attach_tree(ctx, t)[1]


def _attach_tree(ctx, t):
    if not t.is_tree():
        raise NotATree("attach_tree needs a tree")
    if t.vertices & ctx.base_graph.vertices != {ctx.v}:
        raise VertexCollision("the tree must share exactly the attach vertex with the base")
    if len(t.vertices) == 1:
        return ctx.base_graph, ctx.base_witness
    if classify_exceptional_tree(t) is None:
        from .synthesis import tree_witness

        h = hypergraph_union([ctx.base_witness, tree_witness(t)])
        target = ctx.base_graph.union(t)
        return target, certified(target, h.hyperedges)
    return _attach_tree_by_paths(ctx, t)


def _attach_tree_by_paths(ctx, t):
    graph, h = ctx.base_graph, ctx.base_witness
    for i, (anchor, left, right) in enumerate(tree_path_cover(t, ctx.v)):
        step = AttachmentContext(graph, h, anchor, ctx.helper_vertices if i == 0 else (), check=False)
        if right:
            graph, h = _attach_path_inner(step, left, right)
        elif len(left) == 1:
            graph, h = _attach_p2(step, left[0])
        else:
            graph, h = _attach_path_end(step, left)
    return graph, h
