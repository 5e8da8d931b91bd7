"""Exhaustive decision procedure for 3-uniform EI representability of small graphs.

A set S of vertex triples satisfies EI((V, S)) = G exactly when

* (C1) every non-adjacent pair lies in at most one triple of S, and
* (C2) every edge lies in at least two triples of S,

because two distinct triples meet in a pair iff both contain it.  The search
branches on the unsatisfied edge with the fewest remaining supporting triples
and excludes earlier siblings, so it visits every solution class exactly once.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from itertools import combinations

from .core import Graph, Hypergraph, ei_as_graph, sorted_vertices
from .errors import BudgetExhausted, CertificationError, GraphTooLarge
from .trees import canonical_code, classify_exceptional_tree, enumerate_trees

DEFAULT_MAX_VERTICES = 9
CENSUS_MAX_VERTICES = 8


@dataclass(frozen=True)
class OracleOutcome:
    representable: bool
    witness: Hypergraph | None
    nodes: int
    candidates: int

    @property
    def decision(self) -> str:
        return "representable" if self.representable else "not_representable"


def candidate_triples(g: Graph) -> list[tuple[str, str, str]]:
    """Triples containing at least one edge; the others can never help satisfy C2."""
    vs = sorted_vertices(g.vertices)
    out = []
    for t in combinations(vs, 3):
        a, b, c = t
        if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            out.append(t)
    return out


class _Search:
    def __init__(self, g: Graph, limit: int | None):
        self.limit = limit
        self.nodes = 0
        self.triples = candidate_triples(g)
        edges = g.sorted_edges()
        self.edge_index = {frozenset(e): i for i, e in enumerate(edges)}
        self.n_edges = len(edges)
        # For each triple: indices of the edges it supports and of the non-edge pairs it occupies.
        self.t_edges: list[list[int]] = []
        self.t_nonedges: list[list[frozenset]] = []
        self.edge_triples: list[list[int]] = [[] for _ in edges]
        self.nonedge_triples: dict[frozenset, list[int]] = {}
        for ti, t in enumerate(self.triples):
            es, ns = [], []
            for p in combinations(t, 2):
                p = frozenset(p)
                if p in self.edge_index:
                    ei_ = self.edge_index[p]
                    es.append(ei_)
                    self.edge_triples[ei_].append(ti)
                else:
                    ns.append(p)
                    self.nonedge_triples.setdefault(p, []).append(ti)
            self.t_edges.append(es)
            self.t_nonedges.append(ns)
        self.state = [0] * len(self.triples)  # 0 open, 1 chosen, -1 excluded
        self.support = [0] * self.n_edges
        self.avail = [len(ts) for ts in self.edge_triples]

    def _exclude(self, ti: int, trail: list[int]) -> None:
        self.state[ti] = -1
        for e in self.t_edges[ti]:
            self.avail[e] -= 1
        trail.append(ti)

    def _restore(self, trail: list[int]) -> None:
        for ti in reversed(trail):
            self.state[ti] = 0
            for e in self.t_edges[ti]:
                self.avail[e] += 1

    def _choose(self, ti: int, trail: list[int]) -> None:
        self.state[ti] = 1
        for e in self.t_edges[ti]:
            self.avail[e] -= 1
            self.support[e] += 1
        for p in self.t_nonedges[ti]:
            for other in self.nonedge_triples[p]:
                if self.state[other] == 0:
                    self._exclude(other, trail)

    def _unchoose(self, ti: int, trail: list[int]) -> None:
        self._restore(trail)
        self.state[ti] = 0
        for e in self.t_edges[ti]:
            self.avail[e] += 1
            self.support[e] -= 1

    def run(self) -> bool:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted(self.nodes - 1)
        best = -1
        best_slack = None
        for e in range(self.n_edges):
            need = 2 - self.support[e]
            if need <= 0:
                continue
            slack = self.avail[e] - need
            if slack < 0:
                return False
            if best_slack is None or slack < best_slack:
                best, best_slack = e, slack
        if best < 0:
            return True
        excluded: list[int] = []
        for ti in self.edge_triples[best]:
            if self.state[ti] != 0:
                continue
            trail: list[int] = []
            self._choose(ti, trail)
            if self.run():
                return True
            self._unchoose(ti, trail)
            self._exclude(ti, excluded)
            if self.avail[best] < 2 - self.support[best]:
                break
        self._restore(excluded)
        return False

    def chosen(self) -> list[tuple[str, str, str]]:
        return [t for t, s in zip(self.triples, self.state) if s == 1]


def decide(g: Graph, limit: int | None = None, max_vertices: int = DEFAULT_MAX_VERTICES) -> OracleOutcome:
    """Decide whether some 3-uniform H on V(g) has EI(H) = g.

    ``limit`` caps the number of search nodes (BudgetExhausted when hit).
    """
    if len(g.vertices) > max_vertices:
        raise GraphTooLarge(f"{len(g.vertices)} vertices exceeds the oracle bound {max_vertices}")
    search = _Search(g, limit)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10 * len(search.triples) + 1000))
    try:
        found = search.run()
    finally:
        sys.setrecursionlimit(old)
    witness = None
    if found:
        witness = Hypergraph(g.vertices, frozenset(frozenset(t) for t in search.chosen()))
        got = ei_as_graph(witness)
        if got != g:
            raise CertificationError("oracle witness failed certification",
                                     missing=g.edges - got.edges, extra=got.edges - g.edges)
    return OracleOutcome(found, witness, search.nodes, len(search.triples))


@dataclass(frozen=True)
class CensusEntry:
    code: str
    graph: Graph
    name: str | None  # exceptional-tree name, if any
    outcome: OracleOutcome = field(compare=False)


def census(trees_up_to: int) -> dict[str, CensusEntry]:
    """Decide every free tree with 1..n vertices, keyed by canonical code."""
    if trees_up_to > CENSUS_MAX_VERTICES:
        raise GraphTooLarge(f"census is limited to trees with at most {CENSUS_MAX_VERTICES} vertices")
    out: dict[str, CensusEntry] = {}
    for n in range(1, trees_up_to + 1):
        for t in enumerate_trees(n):
            code = canonical_code(t)
            out[code] = CensusEntry(code, t, classify_exceptional_tree(t), decide(t))
    return out
