import random

import networkx as nx
import pytest

from eicacti.cactus import (
    circumference,
    component_tree,
    cycle_order,
    is_cactus,
    tree_cycle_decompose,
)
from eicacti.core import Graph
from eicacti.errors import NotACactus
from eicacti.generate import RandomCactusSpec, random_cactus
from eicacti.trees import cycle_graph, path_graph

from oracles import brute_circumference, brute_is_cactus, from_nx


def G(*pairs, vertices=()):
    return Graph.from_edges([p.split() if isinstance(p, str) else p for p in pairs], vertices)


EIGHT = G("1 2", "2 3", "3 4", "4 5", "5 1", "1 6", "6 7", "3 8")
TWO_C5 = cycle_graph(5, ["v", "a1", "a2", "a3", "a4"]).union(cycle_graph(5, ["v", "b1", "b2", "b3", "b4"]))


class TestIsCactus:
    def test_cycle(self):
        assert is_cactus(cycle_graph(5))

    def test_k4(self):
        k4 = from_nx(nx.complete_graph(4))
        assert not brute_is_cactus(k4)
        assert not is_cactus(k4)

    def test_bowtie(self):
        assert is_cactus(G("a b", "b c", "c a", "c d", "d e", "e c"))

    def test_disconnected(self):
        assert not is_cactus(G("a b", "c d"))

    def test_single_vertex(self):
        assert is_cactus(Graph(frozenset({"a"})))

    def test_agrees_with_cycle_enumeration_on_small_graphs(self):
        for ng in nx.graph_atlas_g()[1:]:
            if ng.number_of_nodes() > 6:
                break
            g = from_nx(ng)
            assert is_cactus(g) == brute_is_cactus(g), g


class TestCircumference:
    def test_tree(self):
        assert circumference(path_graph(6)) == 0

    def test_c5_pendant(self):
        assert circumference(cycle_graph(5).union(G("1 9"))) == 5

    def test_c3_c4(self):
        assert circumference(G("a b", "b c", "c a", "a d", "d e", "e f", "f a")) == 4

    def test_rejects_non_cactus(self):
        with pytest.raises(NotACactus):
            circumference(from_nx(nx.complete_graph(4)))

    def test_random_cacti_against_brute_force(self):
        for seed in range(40):
            g = random_cactus(RandomCactusSpec(14, (0, 4), (3, 7), seed))
            assert circumference(g) == brute_circumference(g)


class TestDecompose:
    def test_eight_vertex_example(self):
        d = tree_cycle_decompose(EIGHT)
        assert d.d_vertices == {"1", "3"}
        assert set(d.limbs) == {G("1 6", "6 7"), G("3 8")}
        assert d.cycles == (cycle_graph(5),)

    def test_tree(self):
        t = path_graph(6)
        d = tree_cycle_decompose(t)
        assert d.d_vertices == frozenset()
        assert d.limbs == (t,)
        assert d.cycles == ()

    def test_single_cycle(self):
        d = tree_cycle_decompose(cycle_graph(6))
        assert d.d_vertices == frozenset() and d.limbs == () and len(d.cycles) == 1

    def test_two_c5_sharing_a_vertex(self):
        d = tree_cycle_decompose(TWO_C5)
        assert d.d_vertices == {"v"}
        assert d.limbs == (Graph(frozenset({"v"})),)
        assert len(d.cycles) == 2

    def test_rejects_non_cactus(self):
        with pytest.raises(NotACactus):
            tree_cycle_decompose(from_nx(nx.complete_graph(4)))


def _random_cacti(count=150):
    out = []
    for seed in range(count):
        rng = random.Random(seed)
        spec = RandomCactusSpec(rng.randint(1, 40), (0, rng.randint(0, 6)), (3, rng.randint(3, 9)), seed)
        out.append(random_cactus(spec))
    return out


@pytest.mark.parametrize("g", _random_cacti(), ids=lambda g: f"n{len(g.vertices)}")
def test_decomposition_invariants(g):
    d = tree_cycle_decompose(g)
    # edge partition and reconstruction
    limb_edges = [t.edges for t in d.limbs]
    cyc_edges = [c.edges for c in d.cycles]
    all_parts = limb_edges + cyc_edges
    assert sum(len(p) for p in all_parts) == len(g.edges)
    assert frozenset().union(*all_parts) == g.edges if all_parts else not g.edges
    assert Graph(frozenset().union(*(p.vertices for p in d.limbs + d.cycles)),
                 g.edges) == g or (len(g.vertices) == 1)
    # limbs are trees, pairwise vertex-disjoint
    for i, t in enumerate(d.limbs):
        assert t.is_tree()
        for u in d.limbs[i + 1:]:
            assert not t.vertices & u.vertices
    # cycles are simple cycles
    for c in d.cycles:
        assert len(c.edges) == len(c.vertices) >= 3
        assert all(c.degree(v) == 2 for v in c.vertices)
        assert len(cycle_order(c)) == len(c.vertices)
    # d-vertices: degree >= 3 on a cycle; on >= 1 cycle, in exactly one limb
    on_cycle = set().union(*(c.vertices for c in d.cycles)) if d.cycles else set()
    assert d.d_vertices == {v for v in on_cycle if g.degree(v) >= 3}
    for v in d.d_vertices:
        assert any(v in c.vertices for c in d.cycles)
        assert sum(v in t.vertices for t in d.limbs) == 1
    if d.d_vertices:
        for part in d.limbs + d.cycles:
            assert part.vertices & d.d_vertices
    else:
        assert g.is_tree() or (len(d.cycles) == 1 and not d.limbs)
    tree = component_tree(d)
    assert len(tree.links) == len(tree.nodes) - 1
    # deterministic
    assert tree_cycle_decompose(g) == d


class TestComponentTree:
    def test_eight_vertex_star(self):
        tree = component_tree(tree_cycle_decompose(EIGHT))
        assert len(tree.nodes) == 3
        links = {(a.graph, b.graph, v) for a, b, v in tree.links}
        assert links == {(G("1 6", "6 7"), cycle_graph(5), "1"), (G("3 8"), cycle_graph(5), "3")}

    def test_single_cycle(self):
        tree = component_tree(tree_cycle_decompose(cycle_graph(7)))
        assert len(tree.nodes) == 1 and tree.links == ()

    def test_cycle_limb_cycle_chain(self):
        g = cycle_graph(5, "abcde").union(path_graph(3, "aXf"), cycle_graph(5, "fghij"))
        tree = component_tree(tree_cycle_decompose(g))
        assert len(tree.nodes) == 3
        limb = next(n for n in tree.nodes if n.kind == "limb")
        assert len(tree.neighbors(limb)) == 2
        assert {v for _, _, v in tree.links} == {"a", "f"}
