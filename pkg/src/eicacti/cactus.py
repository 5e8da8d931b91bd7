"""Cactus recognition, circumference and the tree-cycle decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import networkx as nx

from .core import Graph, Vertex, sorted_vertices, vkey
from .errors import InternalInvariantViolation, NotACactus
from .trees import classify_exceptional_tree  # noqa: F401  (re-exported)


def _to_nx(g: Graph) -> nx.Graph:
    ng = nx.Graph()
    ng.add_nodes_from(sorted_vertices(g.vertices))
    ng.add_edges_from(g.sorted_edges())
    return ng


def blocks(g: Graph) -> list[Graph]:
    """Biconnected blocks of ``g`` with at least one edge, in deterministic order."""
    out = []
    for comp in nx.biconnected_component_edges(_to_nx(g)):
        out.append(Graph.from_edges(comp))
    out.sort(key=lambda b: [vkey(v) for v in sorted_vertices(b.vertices)])
    return out


def is_cactus(g: Graph) -> bool:
    """Connected, and every block is a single edge or a simple cycle."""
    if not g.is_connected():
        return False
    for b in blocks(g):
        if len(b.edges) > 1 and len(b.edges) != len(b.vertices):
            return False
    return True


def _require_cactus(g: Graph) -> None:
    if not is_cactus(g):
        raise NotACactus("graph is not a cactus")


def cycle_blocks(g: Graph) -> list[Graph]:
    return [b for b in blocks(g) if len(b.edges) >= 3]


def circumference(g: Graph) -> int:
    _require_cactus(g)
    return max((len(c.edges) for c in cycle_blocks(g)), default=0)


def cycle_order(c: Graph, start: Vertex | None = None) -> list[Vertex]:
    """Vertices of a cycle graph in cyclic order from ``start``, stepping to the smaller neighbor first."""
    if start is None:
        start = min(c.vertices, key=vkey)
    order = [start]
    prev = None
    cur = start
    while True:
        options = sorted_vertices(w for w in c.neighbors(cur) if w != prev)
        nxt = options[0]
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


@dataclass(frozen=True)
class TreeCycleDecomposition:
    graph: Graph
    d_vertices: frozenset
    limbs: tuple  # tuple[Graph, ...]
    cycles: tuple  # tuple[Graph, ...]


def _components(g: Graph) -> list[Graph]:
    seen = set()
    comps = []
    for s in sorted_vertices(g.vertices):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        for v in comp:
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
        comps.append(g.induced(comp))
    return comps


def tree_cycle_decompose(g: Graph) -> TreeCycleDecomposition:
    """Split a cactus into d-vertices, limbs (trees) and cycles."""
    _require_cactus(g)
    cycles = cycle_blocks(g)
    on_cycle = set()
    cycle_edges = set()
    for c in cycles:
        on_cycle |= c.vertices
        cycle_edges |= c.edges
    d_vertices = frozenset(v for v in on_cycle if g.degree(v) >= 3)
    # Step 1: drop cycle edges and degree-2 cycle vertices; what survives are the limbs.
    drop = {v for v in on_cycle if g.degree(v) == 2}
    forest = Graph(g.vertices - drop, g.edges - cycle_edges)
    limbs = tuple(_components(forest))
    # Step 2: removing limb edges leaves the cycle blocks, which are already edge-disjoint cycles.
    return TreeCycleDecomposition(g, d_vertices, limbs, tuple(cycles))


@dataclass(frozen=True)
class ComponentNode:
    kind: str  # "limb" | "cycle"
    index: int
    graph: Graph

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class ComponentTree:
    nodes: tuple  # tuple[ComponentNode, ...]
    links: tuple  # tuple[(node_a, node_b, vertex), ...]

    def neighbors(self, node: ComponentNode) -> list[tuple[ComponentNode, Vertex]]:
        out = []
        for a, b, v in self.links:
            if a == node:
                out.append((b, v))
            elif b == node:
                out.append((a, v))
        out.sort(key=lambda item: (vkey(item[1]), item[0].kind, item[0].index))
        return out


def component_tree(d: TreeCycleDecomposition) -> ComponentTree:
    """Limbs and cycles as nodes, linked through the d-vertex they share."""
    nodes = [ComponentNode("limb", i, t) for i, t in enumerate(d.limbs)]
    nodes += [ComponentNode("cycle", i, c) for i, c in enumerate(d.cycles)]
    limb_of = {}
    for node in nodes:
        if node.kind == "limb":
            for v in node.graph.vertices:
                limb_of[v] = node
    links = []
    for node in nodes:
        if node.kind != "cycle":
            continue
        for v in sorted_vertices(node.graph.vertices & d.d_vertices):
            if v not in limb_of:
                raise InternalInvariantViolation(f"d-vertex {v} lies in no limb")
            links.append((limb_of[v], node, v))

    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if len(a.graph.vertices & b.graph.vertices) > 1:
                raise InternalInvariantViolation(f"{a.name} and {b.name} share more than one vertex")
    if nodes and len(links) != len(nodes) - 1:
        raise InternalInvariantViolation(f"{len(links)} links for {len(nodes)} components")
    tree = ComponentTree(tuple(nodes), tuple(links))
    if nodes:
        seen = {nodes[0]}
        queue = deque([nodes[0]])
        while queue:
            for nb, _ in tree.neighbors(queue.popleft()):
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        if len(seen) != len(nodes):
            raise InternalInvariantViolation("component links are not connected")
    return tree
