"""Seeded random cactus generator."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cactus import is_cactus
from .core import Graph
from .errors import GenerationFailed

CONDITIONS = ("none", "a", "b", "a_or_b", "neither")


@dataclass(frozen=True)
class RandomCactusSpec:
    vertex_budget: int
    cycle_count_range: tuple = (0, 4)
    cycle_length_range: tuple = (3, 8)
    seed: int = 0
    require_condition: str = "none"
    max_path_piece: int = 3
    max_attempts: int = 2000

    def __post_init__(self):
        lo, hi = self.cycle_count_range
        a, b = self.cycle_length_range
        if self.vertex_budget < 1:
            raise ValueError("vertex_budget must be at least 1")
        if not 0 <= lo <= hi:
            raise ValueError(f"bad cycle_count_range {self.cycle_count_range}")
        if not 3 <= a <= b:
            raise ValueError(f"bad cycle_length_range {self.cycle_length_range}")
        if self.require_condition not in CONDITIONS:
            raise ValueError(f"require_condition must be one of {CONDITIONS}")
        if self.max_path_piece < 1:
            raise ValueError("max_path_piece must be at least 1")


def _grow(spec: RandomCactusSpec, rng: random.Random) -> Graph | None:
    lo, hi = spec.cycle_count_range
    k = rng.randint(lo, hi)
    lengths = [rng.randint(*spec.cycle_length_range) for _ in range(k)]
    spare = spec.vertex_budget - 1 - sum(n - 1 for n in lengths)
    if spare < 0:
        return None
    ops = [("cycle", n) for n in lengths]
    while spare > 0:
        piece = min(spare, rng.randint(1, spec.max_path_piece))
        ops.append(("path", piece))
        spare -= piece
    rng.shuffle(ops)

    vertices = ["1"]
    edges = []
    for kind, size in ops:
        at = rng.choice(vertices)
        new = [str(len(vertices) + i + 1) for i in range(size if kind == "path" else size - 1)]
        vertices.extend(new)
        chain = [at] + new
        edges.extend(zip(chain, chain[1:]))
        if kind == "cycle":
            edges.append((new[-1], at))
    return Graph.from_edges(edges, vertices=vertices)


def _meets(g: Graph, condition: str) -> bool:
    if condition == "none":
        return True
    from .synthesis import cactus_applicable

    app = cactus_applicable(g)
    return {
        "a": app.condition_a,
        "b": app.condition_b,
        "a_or_b": app.supported,
        # a lone tree or cycle is decided outright, never "unsupported"
        "neither": app.shape == "cactus" and not app.supported,
    }[condition]


def random_cactus(spec: RandomCactusSpec) -> Graph:
    """Grow a cactus with exactly ``vertex_budget`` vertices, deterministic in ``spec.seed``.

    Cycles and pendant paths are glued one at a time at uniformly chosen
    existing vertices.  Attempts are repeated (same RNG stream) until the
    required condition holds.
    """
    cond = spec.require_condition
    if cond == "a" and (spec.cycle_length_range[1] < 5 or spec.cycle_count_range[1] == 0):
        raise GenerationFailed("condition a needs cycles of length >= 5")
    rng = random.Random(spec.seed)
    for _ in range(spec.max_attempts):
        g = _grow(spec, rng)
        if g is None:
            continue
        if not is_cactus(g):
            raise GenerationFailed("generator produced a non-cactus")
        if _meets(g, cond):
            return g
    raise GenerationFailed(f"no cactus satisfying condition {cond!r} after {spec.max_attempts} attempts")
