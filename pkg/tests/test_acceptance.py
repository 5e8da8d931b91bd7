"""Acceptance suite: one PASS/FAIL line per criterion (shown with ``-s`` and in the summary)."""

import os
import random
import subprocess
import sys
import time

import networkx as nx
import pytest

from eicacti.core import ei_as_graph, hypergraph_union, validate_clique_fusion
from eicacti.errors import UnsupportedByTheorem
from eicacti.gadgets import (
    AttachmentContext,
    attach_c3,
    attach_c4,
    attach_p2,
    attach_path_end,
    attach_path_inner,
    attach_tree,
    cycle_witness,
)
from eicacti.formats import serialize_graph
from eicacti.generate import RandomCactusSpec, random_cactus
from eicacti.oracle import census, decide
from eicacti.synthesis import cactus_witness, certify
from eicacti.trees import T7, T12, cycle_graph, enumerate_trees, path_graph

from conftest import certified_cacti
from oracles import from_nx, naive_representable
from test_core import CENTER_FUSION, LEAF_FUSION, E

EXCEPTIONAL = {"P2", "P3", "P4", "P5", "P6", "T7", "T12"}


def test_exceptional_tree_census(report):
    start = time.perf_counter()
    entries = census(6)
    elapsed = time.perf_counter() - start
    negative = {e.name for e in entries.values() if not e.outcome.representable}
    positives = [e for e in entries.values() if e.outcome.representable]
    certified_ok = all(certify(e.graph, e.outcome.witness).equal for e in positives)
    names_ok = all(e.name not in EXCEPTIONAL for e in positives)
    ok = (len(entries) == 14 and negative == EXCEPTIONAL and len(positives) == 7
          and certified_ok and names_ok and elapsed < 10)
    report("1 exceptional-tree census", ok,
           f"{len(entries)} trees, not representable {sorted(negative)}, {elapsed:.2f}s")
    assert ok


def test_seven_vertex_closure(report):
    start = time.perf_counter()
    trees = enumerate_trees(7)
    outcomes = [decide(t) for t in trees]
    elapsed = time.perf_counter() - start
    good = sum(o.representable and certify(t, o.witness).equal for t, o in zip(trees, outcomes))
    ok = len(trees) == 11 and good == 11 and elapsed < 120
    report("2 seven-vertex closure", ok, f"{good}/{len(trees)} certified, {elapsed:.2f}s")
    assert ok


def test_cycle_characterization(report):
    start = time.perf_counter()
    short = [decide(cycle_graph(n)).representable for n in (3, 4)]
    built = all(certify(cycle_graph(n), cycle_witness(n)).equal for n in range(5, 51))
    confirmed = [decide(cycle_graph(n)) for n in range(5, 9)]
    confirmed_ok = all(o.representable and certify(cycle_graph(n), o.witness).equal
                       for n, o in zip(range(5, 9), confirmed))
    elapsed = time.perf_counter() - start
    ok = short == [False, False] and built and confirmed_ok and elapsed < 60
    report("3 cycle characterization", ok,
           f"C3/C4 representable={short}, C5..C50 certified={built}, oracle C5..C8={confirmed_ok}, {elapsed:.2f}s")
    assert ok


def test_published_fusions_exact(report):
    leaf = ei_as_graph(LEAF_FUSION).edges
    center = ei_as_graph(CENTER_FUSION).edges
    ok = (leaf == E(("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v4", "v5"), ("v5", "v6"), ("v6", "v7"),
                    ("v7", "v4"))
          and center == E(("v1", "v4"), ("v2", "v4"), ("v3", "v4"), ("v4", "v5"), ("v5", "v6"),
                          ("v6", "v7"), ("v7", "v4")))
    report("4 K13/C4 fusion exactness", ok, f"leaf {len(leaf)} edges, center {len(center)} edges")
    assert ok


def _attach(kind, g, h, rng, i):
    """Apply one gadget at a random vertex; returns (output witness, component)."""
    v = rng.choice(sorted(x for x in g.vertices if g.degree(x) >= 2))
    ctx = AttachmentContext(g, h, v)
    if kind == "attach_p2":
        return attach_p2(ctx, "n1"), path_graph(2, [v, "n1"])
    if kind == "attach_path_end":
        n = 3 + i % 6  # path order 3..8 including v
        new = [f"n{j}" for j in range(1, n)]
        return attach_path_end(ctx, new), path_graph(n, [v] + new)
    if kind == "attach_path_inner":
        left = [f"l{j}" for j in range(rng.randint(1, 4))]
        right = [f"r{j}" for j in range(rng.randint(1, 4))]
        return attach_path_inner(ctx, left, right), path_graph(len(left) + len(right) + 1, left[::-1] + [v] + right)
    if kind == "attach_c3":
        return attach_c3(ctx, ["n1", "n2"]), cycle_graph(3, [v, "n1", "n2"])
    if kind == "attach_c4":
        return attach_c4(ctx, ["n1", "n2", "n3"]), cycle_graph(4, [v, "n1", "n2", "n3"])
    # attach_tree: cycle through T7, T12, the small paths, then random trees
    fixed = [T7, T12] + [path_graph(n) for n in range(2, 7)]
    if i < len(fixed):
        t = fixed[i]
    else:
        t = from_nx(nx.random_labeled_tree(rng.randint(2, 14), seed=rng.getrandbits(32)))
    root = rng.choice(sorted(t.vertices))
    t = t.relabel({x: (v if x == root else f"t{x}") for x in t.vertices})
    return attach_tree(ctx, t), t


@pytest.mark.parametrize("kind", ["attach_p2", "attach_path_end", "attach_path_inner",
                                  "attach_c3", "attach_c4", "attach_tree"])
def test_gadget_soundness(report, kind):
    rng = random.Random(kind)
    bases = certified_cacti(100, seed=5, max_vertices=30)
    failures = []
    for i, (g, h) in enumerate(bases):
        out, comp = _attach(kind, g, h, rng, i)
        target = g.union(comp)
        cert = certify(target, out)
        new = cert.recomputed.edges - g.edges
        if not cert.equal or new != comp.edges:
            failures.append(i)
    ok = not failures
    report(f"5 gadget soundness {kind}", ok, f"{len(bases)} bases, failures {failures[:5]}")
    assert ok


def test_end_to_end_cacti(report):
    start = time.perf_counter()
    rng = random.Random(2024)
    mismatched, supported = 0, 0
    for _ in range(500):
        spec = RandomCactusSpec(rng.randint(7, 60), (0, rng.randint(1, 8)), (3, rng.randint(3, 10)),
                                rng.getrandbits(64), "a_or_b")
        g = random_cactus(spec)
        cert = cactus_witness(g)
        supported += 1
        mismatched += not cert.equal
    unsupported = 0
    for _ in range(100):
        spec = RandomCactusSpec(rng.randint(5, 40), (1, 10), (3, 4), rng.getrandbits(64), "neither",
                                max_path_piece=2)
        try:
            cactus_witness(random_cactus(spec))
        except UnsupportedByTheorem:
            unsupported += 1
    elapsed = time.perf_counter() - start
    ok = supported == 500 and mismatched == 0 and unsupported == 100 and elapsed < 300
    report("6 end-to-end cactus synthesis", ok,
           f"{supported} certified, {mismatched} mismatched, {unsupported}/100 unsupported, {elapsed:.1f}s")
    assert ok


def test_fusion_property(report):
    rng = random.Random(33)
    pairs = certified_cacti(400, seed=11, max_vertices=20)
    failures, counts = 0, {1: 0, 2: 0}
    for i in range(200):
        (g1, h1), (g2, h2) = pairs[2 * i], pairs[2 * i + 1]
        k = 1 + i % 2
        rename = {v: f"b{v}" for v in g2.vertices}
        if k == 1:
            rename[rng.choice(sorted(g2.vertices))] = rng.choice(sorted(g1.vertices))
        else:
            a2, b2 = sorted(rng.choice(g2.sorted_edges()))
            a1, b1 = sorted(rng.choice(g1.sorted_edges()))
            rename[a2], rename[b2] = a1, b1
        g2r, h2r = g2.relabel(rename), h2.relabel(rename)
        fusion = validate_clique_fusion([g1, g2r])
        union = ei_as_graph(hypergraph_union([h1, h2r]))
        if fusion.is_fusion and fusion.k == k and union == g1.union(g2r):
            counts[k] += 1
        else:
            failures += 1
    ok = failures == 0 and counts == {1: 100, 2: 100}
    report("7 clique-fusion property", ok, f"1-fusions {counts[1]}, 2-fusions {counts[2]}, failures {failures}")
    assert ok


def test_oracle_against_naive(report):
    graphs = [from_nx(ng) for ng in nx.graph_atlas_g() if 1 <= ng.number_of_nodes() <= 5]
    disagreements = [g for g in graphs if decide(g).representable != (naive_representable(g) is not None)]
    positives = sum(decide(g).representable for g in graphs)
    ok = len(graphs) == 52 and not disagreements
    report("8 oracle vs naive enumeration", ok,
           f"{len(graphs)} graphs, {positives} representable, {len(disagreements)} disagreements")
    assert ok


def _cli(args, hashseed, cwd):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    res = subprocess.run([sys.executable, "-m", "eicacti", *args], capture_output=True, env=env, cwd=cwd)
    return res.returncode, res.stdout


def test_determinism(report, tmp_path):
    g = random_cactus(RandomCactusSpec(45, (2, 6), (3, 9), 99, "a_or_b"))
    gpath = tmp_path / "g.txt"
    gpath.write_text(serialize_graph(g))
    small = tmp_path / "small.txt"
    small.write_text("1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 1\n1 8\n")
    commands = [
        ["synthesize", str(gpath)],
        ["synthesize", "--format", "json", str(gpath)],
        ["oracle", str(small)],
        ["random-cactus", "--budget", "40", "--seed", "7", "--require", "a_or_b"],
        ["random-cactus", "--budget", "40", "--seed", "7", "--format", "json"],
    ]
    differing = []
    for cmd in commands:
        runs = {_cli(cmd, seed, tmp_path) for seed in (0, 1, 12345)}
        if len(runs) != 1 or next(iter(runs))[0] != 0:
            differing.append(cmd[0])
    ok = not differing
    report("9 determinism", ok, f"{len(commands)} commands x 3 hash seeds, differing {differing}")
    assert ok
