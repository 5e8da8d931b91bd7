"""Certified 3-uniform edge intersection witnesses for cactus graphs."""

from .cactus import circumference, classify_exceptional_tree, component_tree, is_cactus, tree_cycle_decompose
from .core import (
    EIResult,
    Graph,
    Hypergraph,
    clique_fusion,
    ei,
    ei_as_graph,
    hypergraph_union,
    validate_clique_fusion,
)
from .oracle import census, decide
from .synthesis import cactus_witness, certify, plan_fusion, cactus_applicable, tree_witness

__version__ = "0.1.0"

__all__ = [
    "EIResult", "Graph", "Hypergraph", "cactus_witness", "census", "certify", "circumference",
    "classify_exceptional_tree", "clique_fusion", "component_tree", "decide", "ei", "ei_as_graph",
    "hypergraph_union", "is_cactus", "plan_fusion", "cactus_applicable", "tree_cycle_decompose",
    "tree_witness", "validate_clique_fusion",
]
