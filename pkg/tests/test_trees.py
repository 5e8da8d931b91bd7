import random

import networkx as nx
import pytest

from eicacti.core import Graph
from eicacti.errors import NotATree
from eicacti.trees import (
    T7,
    T12,
    canonical_code,
    canonical_form,
    classify_exceptional_tree,
    enumerate_trees,
    graph_from_code,
    path_graph,
    star_graph,
    tree_centers,
)

from oracles import from_nx, is_isomorphic


def shuffled_labels(g: Graph, rng: random.Random) -> Graph:
    vs = sorted(g.vertices)
    new = [f"x{i}" for i in range(len(vs))]
    rng.shuffle(new)
    return g.relabel(dict(zip(vs, new)))


@pytest.mark.parametrize("n", range(1, 11))
def test_enumeration_matches_networkx(n):
    ours = enumerate_trees(n)
    theirs = [from_nx(t) for t in nx.nonisomorphic_trees(n)] if n > 1 else [Graph(frozenset({"0"}))]
    assert len(ours) == len(theirs)
    assert {canonical_code(t) for t in ours} == {canonical_code(t) for t in theirs}


def test_tree_counts():
    assert [len(enumerate_trees(n)) for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(7)
    for n in range(2, 12):
        for t in enumerate_trees(n)[:20]:
            u = shuffled_labels(t, rng)
            assert canonical_code(u) == canonical_code(t)
            code, order_t = canonical_form(t)
            _, order_u = canonical_form(u)
            mapping = dict(zip(order_t, order_u))
            assert t.relabel(mapping) == u


def test_distinct_trees_have_distinct_codes():
    trees = enumerate_trees(8)
    for i, a in enumerate(trees):
        for b in trees[i + 1:]:
            assert not is_isomorphic(a, b)


def test_code_round_trip():
    for t in enumerate_trees(7):
        assert canonical_code(graph_from_code(canonical_code(t))) == canonical_code(t)


def test_centers():
    assert tree_centers(path_graph(5)) == ["3"]
    assert tree_centers(path_graph(4)) == ["2", "3"]
    assert tree_centers(Graph(frozenset({"a"}))) == ["a"]


class TestClassify:
    def test_p4(self):
        assert classify_exceptional_tree(path_graph(4, "abcd")) == "P4"

    def test_t7(self):
        t = Graph.from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("c", "e")])
        assert classify_exceptional_tree(t) == "T7"
        assert sorted(t.degree(v) for v in t.vertices) == [1, 1, 1, 2, 3]

    def test_t12(self):
        assert classify_exceptional_tree(T12) == "T12"

    def test_star_not_exceptional(self):
        assert classify_exceptional_tree(star_graph(3)) is None

    def test_single_vertex(self):
        assert classify_exceptional_tree(Graph(frozenset({"v"}))) == "P1"

    def test_all_names(self):
        names = {classify_exceptional_tree(path_graph(n)) for n in range(1, 7)}
        assert names == {"P1", "P2", "P3", "P4", "P5", "P6"}
        assert classify_exceptional_tree(T7) == "T7"
        assert classify_exceptional_tree(path_graph(7)) is None

    def test_not_a_tree(self):
        with pytest.raises(NotATree):
            classify_exceptional_tree(Graph.from_edges([("a", "b"), ("b", "c"), ("c", "a")]))
