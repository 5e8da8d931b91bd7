import random

import pytest

from eicacti.core import Graph
from eicacti.generate import RandomCactusSpec, random_cactus
from eicacti.synthesis import cactus_witness

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion."""

    def _report(criterion: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" :: {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def certified_cacti(count: int, seed: int, max_vertices: int = 30, min_vertices: int = 7):
    """Seeded stream of (graph, witness) pairs from the synthesis pipeline."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        spec = RandomCactusSpec(
            vertex_budget=rng.randint(min_vertices, max_vertices),
            cycle_count_range=(0, 5),
            cycle_length_range=(3, 8),
            seed=rng.getrandbits(64),
            require_condition="a_or_b",
        )
        g = random_cactus(spec)
        out.append((g, cactus_witness(g).witness))
    return out


def prefixed(g: Graph, prefix: str) -> dict:
    return {v: f"{prefix}{v}" for v in g.vertices}
