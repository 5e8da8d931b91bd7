"""Graphs, hypergraphs, the edge intersection operator and clique-fusion checks."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidGraph, InvalidHypergraph, NotAFusion, NotThreeUniform

Vertex = str
Edge = frozenset  # frozenset[Vertex] of size 2


def vkey(v: Vertex) -> tuple:
    """Total order on vertex tokens: numeric tokens first (by value), then lexicographic."""
    if v.isdigit():
        return (0, int(v), v)
    return (1, 0, v)


def sorted_vertices(vs: Iterable[Vertex]) -> list[Vertex]:
    return sorted(vs, key=vkey)


def sorted_sets(sets: Iterable[Iterable[Vertex]]) -> list[tuple[Vertex, ...]]:
    """Each set as a sorted tuple, the whole list sorted by vertex order."""
    rows = [tuple(sorted_vertices(s)) for s in sets]
    rows.sort(key=lambda row: [vkey(v) for v in row])
    return rows


def _check_token(v) -> Vertex:
    if not isinstance(v, str):
        raise TypeError(f"vertex ids are strings, got {type(v).__name__}: {v!r}")
    if not v or not v.isprintable() or any(c.isspace() for c in v):
        raise ValueError(f"invalid vertex id {v!r}")
    return v


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph; isolated vertices allowed."""

    vertices: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        vertices = frozenset(_check_token(v) for v in self.vertices)
        edges = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise InvalidGraph(f"edge {sorted_vertices(e)} is not a pair of distinct vertices")
            if not e <= vertices:
                raise InvalidGraph(f"edge {sorted_vertices(e)} has an endpoint outside the vertex set")
            edges.add(e)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[Vertex]], vertices: Iterable[Vertex] = ()) -> Graph:
        edges = [frozenset(e) for e in edges]
        vs = set(vertices)
        for e in edges:
            vs |= e
        return cls(frozenset(vs), frozenset(edges))

    @cached_property
    def adjacency(self) -> dict[Vertex, frozenset]:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(n) for v, n in adj.items()}

    def neighbors(self, v: Vertex) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: Vertex) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return frozenset((a, b)) in self.edges

    def __len__(self) -> int:
        return len(self.vertices)

    def union(self, *others: Graph) -> Graph:
        vs = set(self.vertices)
        es = set(self.edges)
        for g in others:
            vs |= g.vertices
            es |= g.edges
        return Graph(frozenset(vs), frozenset(es))

    def induced(self, vs: Iterable[Vertex]) -> Graph:
        vs = frozenset(vs)
        return Graph(vs, frozenset(e for e in self.edges if e <= vs))

    def remove_vertices(self, vs: Iterable[Vertex]) -> Graph:
        return self.induced(self.vertices - frozenset(vs))

    def relabel(self, mapping: dict[Vertex, Vertex]) -> Graph:
        return Graph(
            frozenset(mapping.get(v, v) for v in self.vertices),
            frozenset(frozenset(mapping.get(v, v) for v in e) for e in self.edges),
        )

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        start = min(self.vertices, key=vkey)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def is_tree(self) -> bool:
        return len(self.edges) == len(self.vertices) - 1 and self.is_connected()

    def sorted_edges(self) -> list[tuple[Vertex, Vertex]]:
        return sorted_sets(self.edges)

    def __repr__(self) -> str:
        edges = " ".join("-".join(e) for e in self.sorted_edges())
        return f"Graph(|V|={len(self.vertices)}, E=[{edges}])"


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set plus a set of hyperedges (each of cardinality >= 2)."""

    vertices: frozenset = field(default_factory=frozenset)
    hyperedges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        vertices = frozenset(_check_token(v) for v in self.vertices)
        hyperedges = set()
        for e in self.hyperedges:
            e = frozenset(e)
            if len(e) < 2:
                raise InvalidHypergraph(f"hyperedge {sorted_vertices(e)} has fewer than 2 vertices")
            if not e <= vertices:
                raise InvalidHypergraph(f"hyperedge {sorted_vertices(e)} leaves the vertex set")
            hyperedges.add(e)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "hyperedges", frozenset(hyperedges))

    @classmethod
    def from_edges(cls, hyperedges: Iterable[Iterable[Vertex]], vertices: Iterable[Vertex] = ()) -> Hypergraph:
        hyperedges = [frozenset(e) for e in hyperedges]
        vs = set(vertices)
        for e in hyperedges:
            vs |= e
        return cls(frozenset(vs), frozenset(hyperedges))

    def is_k_uniform(self, k: int) -> bool:
        return all(len(e) == k for e in self.hyperedges)

    def degree(self, v: Vertex) -> int:
        return sum(1 for e in self.hyperedges if v in e)

    def relabel(self, mapping: dict[Vertex, Vertex]) -> Hypergraph:
        return Hypergraph(
            frozenset(mapping.get(v, v) for v in self.vertices),
            frozenset(frozenset(mapping.get(v, v) for v in e) for e in self.hyperedges),
        )

    def sorted_hyperedges(self) -> list[tuple[Vertex, ...]]:
        return sorted_sets(self.hyperedges)

    def __len__(self) -> int:
        return len(self.hyperedges)

    def __repr__(self) -> str:
        hs = " ".join("".join(e) if all(len(v) == 1 for v in e) else ",".join(e)
                      for e in self.sorted_hyperedges())
        return f"Hypergraph(|V|={len(self.vertices)}, E=[{hs}])"


@dataclass(frozen=True)
class EIResult:
    vertices: frozenset
    intersection_edges: frozenset

    def to_graph(self) -> Graph:
        if any(len(s) != 2 for s in self.intersection_edges):
            raise NotThreeUniform("EI contains an intersection of cardinality > 2")
        return Graph(self.vertices, self.intersection_edges)


def ei(h: Hypergraph) -> EIResult:
    """Edge intersection hypergraph: all intersections of two distinct hyperedges with >= 2 vertices."""
    # Two hyperedges meet in >= 2 vertices iff they share some vertex pair,
    # so only hyperedges listed under a common pair need to be intersected.
    by_pair: dict[frozenset, list[frozenset]] = defaultdict(list)
    for e in h.hyperedges:
        for pair in combinations(e, 2):
            by_pair[frozenset(pair)].append(e)
    out = set()
    done = set()
    for members in by_pair.values():
        if len(members) < 2:
            continue
        for e1, e2 in combinations(members, 2):
            key = frozenset((e1, e2))
            if key in done:
                continue
            done.add(key)
            out.add(e1 & e2)
    return EIResult(h.vertices, frozenset(out))


def ei_as_graph(h: Hypergraph) -> Graph:
    if not h.is_k_uniform(3):
        bad = next(e for e in h.hyperedges if len(e) != 3)
        raise NotThreeUniform(f"hyperedge {sorted_vertices(bad)} has {len(bad)} vertices, expected 3")
    return ei(h).to_graph()


def hypergraph_union(hs: Sequence[Hypergraph]) -> Hypergraph:
    vs = set()
    es = set()
    for h in hs:
        vs |= h.vertices
        es |= h.hyperedges
    return Hypergraph(frozenset(vs), frozenset(es))


@dataclass(frozen=True)
class FusionValidation:
    shared: frozenset
    k: int
    is_fusion: bool
    union: Graph | None = None
    missing_edges: frozenset = frozenset()


def validate_clique_fusion(gs: Sequence[Graph]) -> FusionValidation:
    """Check whether the union of ``gs`` is a clique-fusion.

    The shared set collects every vertex lying in at least two of the graphs;
    the union is a k-fusion when those k >= 1 vertices induce a k-clique.
    """
    if len(gs) < 2:
        raise ValueError("clique-fusion needs at least two graphs")
    seen_once: set = set()
    shared: set = set()
    for g in gs:
        shared |= seen_once & g.vertices
        seen_once |= g.vertices
    shared = frozenset(shared)
    union = gs[0].union(*gs[1:])
    missing = frozenset(frozenset(p) for p in combinations(shared, 2) if frozenset(p) not in union.edges)
    ok = bool(shared) and not missing
    return FusionValidation(shared, len(shared), ok, union if ok else None, missing)


def clique_fusion(gs: Sequence[Graph]) -> Graph:
    """The fused graph, or NotAFusion when the shared vertices are not a clique."""
    result = validate_clique_fusion(gs)
    if not result.is_fusion:
        if not result.shared:
            raise NotAFusion("graphs share no vertex")
        raise NotAFusion(
            f"shared vertices {sorted_vertices(result.shared)} miss edges "
            f"{sorted_sets(result.missing_edges)}"
        )
    return result.union
