"""Witness synthesis for cacti: applicability, fusion planning and the certified fold."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .cactus import (
    ComponentNode,
    TreeCycleDecomposition,
    circumference,
    component_tree,
    cycle_order,
    is_cactus,
    tree_cycle_decompose,
)
from .core import Graph, Hypergraph, Vertex, ei_as_graph, hypergraph_union, sorted_vertices, vkey
from .errors import (
    CertificationError,
    CycleTooShort,
    ExceptionalTree,
    InternalInvariantViolation,
    NotACactus,
    NotATree,
    NotRepresentable,
    NotThreeUniform,
    UnsupportedByTheorem,
    VertexSetMismatch,
)
from .gadgets import (
    AttachmentContext,
    attach_c3,
    attach_c4,
    attach_p2,
    attach_path_end,
    attach_tree,
    certified,
    cycle_witness,
    path_witness,
    star_witness,
)
from .oracle import decide
from .trees import canonical_form, classify_exceptional_tree, graph_from_code, is_path, is_star, path_order

ORACLE_TREE_BOUND = 8


# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class WitnessCertificate:
    target: Graph
    witness: Hypergraph
    recomputed: Graph
    missing: frozenset = frozenset()  # target edges absent from EI(witness)
    extra: frozenset = frozenset()  # EI edges absent from the target

    @property
    def equal(self) -> bool:
        return self.recomputed == self.target

    @property
    def verdict(self) -> str:
        return "equal" if self.equal else "mismatch"


def certify(g: Graph, h: Hypergraph) -> WitnessCertificate:
    """Recompute EI(h) and compare it with ``g`` edge for edge."""
    if h.vertices != g.vertices:
        raise VertexSetMismatch(
            f"vertex sets differ: only in graph {sorted_vertices(g.vertices - h.vertices)}, "
            f"only in hypergraph {sorted_vertices(h.vertices - g.vertices)}"
        )
    if not h.is_k_uniform(3):
        raise NotThreeUniform("witness is not 3-uniform")
    got = ei_as_graph(h)
    return WitnessCertificate(g, h, got, g.edges - got.edges, got.edges - g.edges)


# -- trees ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _oracle_tree_witness(code: str) -> Hypergraph:
    outcome = decide(graph_from_code(code))
    if not outcome.representable:
        raise InternalInvariantViolation(f"oracle rejects non-exceptional tree {code}")
    return outcome.witness


def _small_tree_witness(t: Graph) -> Hypergraph:
    code, order = canonical_form(t)
    canon_order = canonical_form(graph_from_code(code))[1]
    mapping = dict(zip(canon_order, order))
    return _oracle_tree_witness(code).relabel(mapping)


def _peel_step(t: Graph):
    """Split a pendant path off a deepest branch vertex.

    Returns (remainder, anchor, new_vertices): gluing ``new_vertices`` as a
    path at ``anchor`` onto the remainder rebuilds ``t``.  The remainder keeps
    at least 7 vertices.
    """
    root = min(t.vertices, key=lambda v: (_ecc(t, v), vkey(v)))
    parent, depth = {root: None}, {root: 0}
    order = [root]
    for v in order:
        for w in sorted_vertices(t.neighbors(v)):
            if w not in parent:
                parent[w], depth[w] = v, depth[v] + 1
                order.append(w)
    b = min((v for v in t.vertices if t.degree(v) >= 3), key=lambda v: (-depth[v], vkey(v)))
    paths = []
    for c in sorted_vertices(w for w in t.neighbors(b) if parent.get(w) == b):
        path = [c]
        while True:
            kids = [w for w in t.neighbors(path[-1]) if parent.get(w) == path[-1]]
            if not kids:
                break
            path.append(kids[0])
        paths.append(path)
    path = min(paths, key=lambda p: (len(p), vkey(p[0])))
    n = len(t.vertices)
    if n - len(path) >= 7:
        return t.remove_vertices(path), b, path
    keep = len(path) - (n - 7)
    return t.remove_vertices(path[keep:]), path[keep - 1], path[keep:]


def _ecc(t: Graph, v: Vertex) -> int:
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for w in t.neighbors(x):
            if w not in dist:
                dist[w] = dist[x] + 1
                queue.append(w)
    return max(dist.values())


def tree_witness(t: Graph) -> Hypergraph:
    """Certified 3-uniform witness for any non-exceptional tree.

    Trees with at most 8 vertices come from the exhaustive oracle, long paths
    and large stars from the direct constructions; anything else is peeled
    down to a 7+ vertex remainder and rebuilt with the path gadgets.
    """
    if not t.is_tree():
        raise NotATree("tree_witness needs a tree")
    name = classify_exceptional_tree(t)
    if name == "P1":
        return Hypergraph(t.vertices)
    if name is not None:
        raise ExceptionalTree(name)

    steps = []
    cur = t
    while len(cur.vertices) > ORACLE_TREE_BOUND and not is_path(cur) and not is_star(cur):
        cur, anchor, new = _peel_step(cur)
        steps.append((anchor, new))
    if len(cur.vertices) <= ORACLE_TREE_BOUND:
        h = _small_tree_witness(cur)
    elif is_path(cur):
        order = path_order(cur)
        h = path_witness(len(order), order)
    else:
        center = max(cur.vertices, key=cur.degree)
        h = star_witness(len(cur.vertices) - 1, center, sorted_vertices(cur.neighbors(center)))

    g = cur
    for anchor, new in reversed(steps):
        ctx = AttachmentContext(g, h, anchor, check=False)
        h = attach_p2(ctx, new[0]) if len(new) == 1 else attach_path_end(ctx, new)
        g = g.union(Graph.from_edges(zip([anchor] + new, new)))
    if g != t:
        raise InternalInvariantViolation("peeling did not rebuild the tree")
    return certified(t, h.hyperedges)


# -- applicability and planning ---------------------------------------------


@dataclass(frozen=True)
class Applicability:
    decomposition: TreeCycleDecomposition
    shape: str  # "tree" | "cycle" | "cactus"
    circumference: int
    condition_a: bool
    condition_b: bool
    seed: ComponentNode | None
    limb_names: tuple  # exceptional name per limb, or None

    @property
    def supported(self) -> bool:
        return self.condition_a or self.condition_b


def cactus_applicable(g: Graph) -> Applicability:
    """Which of the two cactus conditions hold (ci >= 5, or a non-exceptional limb), and the seed."""
    if not is_cactus(g):
        raise NotACactus("graph is not a cactus")
    d = tree_cycle_decompose(g)
    ci = circumference(g)
    names = tuple(classify_exceptional_tree(t) for t in d.limbs)
    tree = component_tree(d)
    cond_a = ci >= 5
    good_limbs = [n for n in tree.nodes if n.kind == "limb" and names[n.index] is None]
    cond_b = bool(good_limbs)
    seed = None
    if cond_a:
        cycles = [n for n in tree.nodes if n.kind == "cycle"]
        seed = max(cycles, key=lambda n: (len(n.graph.vertices), -n.index))
    elif cond_b:
        seed = max(good_limbs, key=lambda n: (len(n.graph.vertices), -n.index))
    if not d.cycles:
        shape = "tree"
    elif not d.limbs and len(d.cycles) == 1:
        shape = "cycle"
    else:
        shape = "cactus"
    return Applicability(d, shape, ci, cond_a, cond_b, seed, names)


@dataclass(frozen=True)
class FusionStep:
    component: ComponentNode
    attach_vertex: Vertex
    gadget: str  # identity | cycle_union | c3 | c4 | k13_c4 | tree


@dataclass(frozen=True)
class FusionPlan:
    seed: ComponentNode
    steps: tuple = field(default=())


def plan_fusion(d: TreeCycleDecomposition, seed: ComponentNode) -> FusionPlan:
    """Order the remaining components breadth-first from the seed, each glued at one d-vertex."""
    tree = component_tree(d)
    union = set(seed.graph.vertices)
    seed_is_k13 = seed.kind == "limb" and len(seed.graph.vertices) == 4 and is_star(seed.graph)
    steps = []
    seen = {seed}
    queue = deque([seed])
    while queue:
        node = queue.popleft()
        for nb, v in tree.neighbors(node):
            if nb in seen:
                continue
            seen.add(nb)
            queue.append(nb)
            shared = nb.graph.vertices & union
            if shared != {v}:
                raise InternalInvariantViolation(f"{nb.name} meets the prior union in {sorted_vertices(shared)}")
            size = len(nb.graph.vertices)
            if nb.kind == "limb":
                gadget = "identity" if size == 1 else "tree"
            elif size >= 5:
                gadget = "cycle_union"
            elif size == 3:
                gadget = "c3"
            elif len(union) == 4 and seed_is_k13:
                gadget = "k13_c4"
            else:
                gadget = "c4"
            steps.append(FusionStep(nb, v, gadget))
            union |= nb.graph.vertices
    if len(seen) != len(tree.nodes):
        raise InternalInvariantViolation("plan does not reach every component")
    return FusionPlan(seed, tuple(steps))


def _apply_step(graph: Graph, h: Hypergraph, step: FusionStep) -> tuple[Graph, Hypergraph]:
    comp = step.component.graph
    v = step.attach_vertex
    if step.gadget == "identity":
        return graph, h
    target = graph.union(comp)
    ctx = AttachmentContext(graph, h, v, check=False)
    if step.gadget == "tree":
        return target, attach_tree(ctx, comp)
    order = cycle_order(comp, v)
    if step.gadget == "cycle_union":
        out = hypergraph_union([h, cycle_witness(len(order), order)])
        return target, certified(target, out.hyperedges)
    if step.gadget == "c3":
        return target, attach_c3(ctx, order[1:])
    return target, attach_c4(ctx, order[1:])


def execute_plan(plan: FusionPlan, debug_certify_steps: bool = False) -> tuple[Graph, Hypergraph]:
    seed = plan.seed.graph
    if plan.seed.kind == "cycle":
        order = cycle_order(seed)
        h = cycle_witness(len(order), order)
    else:
        h = tree_witness(seed)
    graph = seed
    for step in plan.steps:
        graph, h = _apply_step(graph, h, step)
        if debug_certify_steps:
            cert = certify(graph, h)
            if not cert.equal:
                raise CertificationError(f"step at {step.attach_vertex} broke certification",
                                         cert.missing, cert.extra)
    return graph, h


def cactus_witness(g: Graph, debug_certify_steps: bool = False) -> WitnessCertificate:
    """Certified witness for a cactus covered by the construction.

    Raises NotRepresentable for exceptional trees and for C3/C4, and
    UnsupportedByTheorem for cacti with circumference <= 4 whose limbs are
    all exceptional.
    """
    app = cactus_applicable(g)
    if app.shape == "tree":
        h = tree_witness(g)
    elif app.shape == "cycle":
        order = cycle_order(g)
        try:
            h = cycle_witness(len(order), order)
        except CycleTooShort as exc:
            raise NotRepresentable(f"C{len(order)} is not representable") from exc
    else:
        if not app.supported:
            raise UnsupportedByTheorem(
                f"circumference {app.circumference} <= 4 and every limb is exceptional "
                f"({', '.join(sorted(set(app.limb_names)))})"
            )
        graph, h = execute_plan(plan_fusion(app.decomposition, app.seed), debug_certify_steps)
        if graph != g:
            raise InternalInvariantViolation("fusion plan did not rebuild the cactus")
    cert = certify(g, h)
    if not cert.equal:
        raise CertificationError("synthesized witness failed certification", cert.missing, cert.extra)
    return cert
