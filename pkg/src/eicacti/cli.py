"""Command-line interface.

Exit codes: 0 success / verdict equal, 1 negative verdict (not representable,
unsupported, certificate mismatch, search budget exhausted), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cactus import component_tree, cycle_order, tree_cycle_decompose
from .core import ei, ei_as_graph, sorted_sets, sorted_vertices
from .errors import (
    BudgetExhausted,
    EIError,
    GenerationFailed,
    NotRepresentable,
    UnsupportedByTheorem,
)
from .formats import (
    graph_to_dict,
    hypergraph_to_dict,
    parse_graph,
    parse_hypergraph,
    serialize_graph,
    serialize_hypergraph,
)
from .generate import CONDITIONS, RandomCactusSpec, random_cactus
from .oracle import CENSUS_MAX_VERTICES, DEFAULT_MAX_VERTICES, census, decide
from .synthesis import (
    cactus_witness,
    certify,
    plan_fusion,
    cactus_applicable,
)

OK, NEGATIVE, USAGE = 0, 1, 2


class _Out:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def json(self, payload: dict) -> None:
        self.stream.write(json.dumps(payload, sort_keys=True) + "\n")

    def text(self, s: str) -> None:
        self.stream.write(s if s.endswith("\n") or not s else s + "\n")

    def emit(self, payload: dict, text: str) -> None:
        if self.fmt == "json":
            self.json(payload)
        else:
            self.text(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _vs(vs) -> str:
    return " ".join(sorted_vertices(vs))


def cmd_ei(args, out: _Out) -> int:
    h = parse_hypergraph(_read(args.hypergraph), general=args.general)
    if args.general:
        result = ei(h)
        rows = sorted_sets(result.intersection_edges)
        out.emit(
            {"vertices": sorted_vertices(result.vertices), "intersection_edges": [list(r) for r in rows]},
            "".join(" ".join(r) + "\n" for r in rows),
        )
        return OK
    g = ei_as_graph(h)
    out.emit(graph_to_dict(g), serialize_graph(g))
    return OK


def _decomposition_payload(d) -> dict:
    return {
        "d_vertices": sorted_vertices(d.d_vertices),
        "limbs": [graph_to_dict(t) for t in d.limbs],
        "cycles": [cycle_order(c) for c in d.cycles],
    }


def cmd_decompose(args, out: _Out) -> int:
    d = tree_cycle_decompose(parse_graph(_read(args.graph)))
    tree = component_tree(d)
    payload = _decomposition_payload(d)
    payload["links"] = [[a.name, b.name, v] for a, b, v in tree.links]
    lines = [f"d-vertices: {_vs(d.d_vertices)}"]
    for i, t in enumerate(d.limbs):
        edges = " ".join("-".join(e) for e in t.sorted_edges())
        lines.append(f"limb{i}: vertices {_vs(t.vertices)}" + (f"; edges {edges}" if edges else ""))
    for i, c in enumerate(d.cycles):
        lines.append(f"cycle{i}: {' '.join(cycle_order(c))}")
    for a, b, v in tree.links:
        lines.append(f"link: {a.name} -- {b.name} at {v}")
    out.emit(payload, "\n".join(lines))
    return OK


def cmd_check(args, out: _Out) -> int:
    app = cactus_applicable(parse_graph(_read(args.graph)))
    if app.shape == "tree":
        covered = app.condition_b
    elif app.shape == "cycle":
        covered = app.condition_a
    else:
        covered = app.supported
    payload = {
        "shape": app.shape,
        "circumference": app.circumference,
        "condition_a": app.condition_a,
        "condition_b": app.condition_b,
        "supported": covered,
        "seed": None if app.seed is None else app.seed.name,
        "limb_names": list(app.limb_names),
        "decomposition": _decomposition_payload(app.decomposition),
    }
    steps = []
    if covered and app.shape == "cactus":
        plan = plan_fusion(app.decomposition, app.seed)
        steps = [[s.component.name, s.attach_vertex, s.gadget] for s in plan.steps]
    payload["plan"] = steps
    names = ", ".join(n or "-" for n in app.limb_names) or "none"
    lines = [
        f"shape: {app.shape}",
        f"circumference: {app.circumference}",
        f"condition (a) ci >= 5: {'yes' if app.condition_a else 'no'}",
        f"condition (b) non-exceptional limb: {'yes' if app.condition_b else 'no'}",
        f"exceptional limb names: {names}",
        f"seed: {payload['seed'] or '-'}",
        f"supported: {'yes' if covered else 'no'}",
    ]
    lines += [f"step: {c} at {v} via {g}" for c, v, g in steps]
    out.emit(payload, "\n".join(lines))
    return OK if covered else NEGATIVE


def cmd_synthesize(args, out: _Out) -> int:
    g = parse_graph(_read(args.graph))
    try:
        cert = cactus_witness(g, debug_certify_steps=args.debug_certify_steps)
        source = "construction"
    except (NotRepresentable, UnsupportedByTheorem) as exc:
        unsupported = isinstance(exc, UnsupportedByTheorem)
        if unsupported and args.oracle_fallback and len(g.vertices) <= DEFAULT_MAX_VERTICES:
            outcome = decide(g, limit=args.budget)
            if outcome.representable:
                cert = certify(g, outcome.witness)
                source = "oracle (outside the cactus construction)"
            else:
                out.emit({"verdict": "not_representable", "source": "oracle", "reason": str(exc)},
                         f"not representable (exhaustive oracle); {exc}")
                return NEGATIVE
        else:
            verdict = "unsupported" if unsupported else "not_representable"
            out.emit({"verdict": verdict, "reason": str(exc)}, f"{verdict}: {exc}")
            return NEGATIVE
    payload = {
        "verdict": cert.verdict,
        "source": source,
        "witness": hypergraph_to_dict(cert.witness),
    }
    out.emit(payload, serialize_hypergraph(cert.witness))
    return OK if cert.equal else NEGATIVE


def cmd_certify(args, out: _Out) -> int:
    g = parse_graph(_read(args.graph))
    h = parse_hypergraph(_read(args.hypergraph))
    cert = certify(g, h)
    missing = [list(e) for e in sorted_sets(cert.missing)]
    extra = [list(e) for e in sorted_sets(cert.extra)]
    lines = [f"verdict: {cert.verdict}"]
    lines += [f"missing: {' '.join(e)}" for e in missing]
    lines += [f"extra: {' '.join(e)}" for e in extra]
    out.emit({"verdict": cert.verdict, "missing": missing, "extra": extra}, "\n".join(lines))
    return OK if cert.equal else NEGATIVE


def cmd_oracle(args, out: _Out) -> int:
    g = parse_graph(_read(args.graph))
    try:
        outcome = decide(g, limit=args.budget, max_vertices=args.max_vertices)
    except BudgetExhausted as exc:
        out.emit({"decision": "budget_exhausted", "nodes": exc.nodes}, f"budget exhausted after {exc.nodes} nodes")
        return NEGATIVE
    payload = {
        "decision": outcome.decision,
        "nodes": outcome.nodes,
        "candidates": outcome.candidates,
        "witness": hypergraph_to_dict(outcome.witness) if outcome.witness else None,
    }
    text = f"{outcome.decision} (nodes {outcome.nodes}, candidate triples {outcome.candidates})\n"
    if outcome.witness:
        text += serialize_hypergraph(outcome.witness)
    out.emit(payload, text)
    return OK if outcome.representable else NEGATIVE


def cmd_census(args, out: _Out) -> int:
    entries = census(args.max_n)
    rows = []
    for e in entries.values():
        rows.append({
            "code": e.code,
            "n": len(e.graph.vertices),
            "name": e.name,
            "decision": e.outcome.decision,
            "edges": [list(x) for x in e.graph.sorted_edges()],
        })
    lines = [f"{r['n']:>2}  {r['decision']:<17} {r['name'] or '':<4} {r['code']}" for r in rows]
    bad = sum(1 for r in rows if r["decision"] != "representable")
    lines.append(f"{len(rows)} trees, {bad} not representable")
    out.emit({"trees": rows, "not_representable": bad}, "\n".join(lines))
    return OK


def cmd_random_cactus(args, out: _Out) -> int:
    spec = RandomCactusSpec(
        vertex_budget=args.budget,
        cycle_count_range=tuple(args.cycles),
        cycle_length_range=tuple(args.lengths),
        seed=args.seed,
        require_condition=args.require,
        max_path_piece=args.max_path_piece,
    )
    try:
        g = random_cactus(spec)
    except GenerationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    out.emit(graph_to_dict(g), serialize_graph(g))
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")

    p = argparse.ArgumentParser(
        prog="eicacti",
        description="Certified 3-uniform edge intersection witnesses for cacti.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ei", parents=[common], help="edge intersection hypergraph of a hypergraph")
    s.add_argument("hypergraph", help="hypergraph file ('-' for stdin)")
    s.add_argument("--general", action="store_true", help="accept hyperedges of any size >= 2")
    s.set_defaults(func=cmd_ei)

    s = sub.add_parser("decompose", parents=[common], help="tree-cycle decomposition of a cactus")
    s.add_argument("graph")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("check", parents=[common], help="does the cactus construction apply?")
    s.add_argument("graph")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("synthesize", parents=[common], help="build a certified witness")
    s.add_argument("graph")
    s.add_argument("--debug-certify-steps", action="store_true", help="certify after every fusion step")
    s.add_argument("--oracle-fallback", action="store_true",
                   help=f"run the exhaustive oracle on unsupported cacti with <= {DEFAULT_MAX_VERTICES} vertices")
    s.add_argument("--budget", type=int, default=None, help="oracle node budget for --oracle-fallback")
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("certify", parents=[common], help="check EI(hypergraph) == graph")
    s.add_argument("graph")
    s.add_argument("hypergraph")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("oracle", parents=[common], help="exhaustive representability decision")
    s.add_argument("graph")
    s.add_argument("--budget", type=int, default=None, help="maximum search nodes")
    s.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("census", parents=[common], help="decide all trees up to a size")
    s.add_argument("--max-n", type=int, default=6, help=f"largest tree size (<= {CENSUS_MAX_VERTICES})")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("random-cactus", parents=[common], help="seeded random cactus")
    s.add_argument("--budget", type=int, required=True, help="number of vertices")
    s.add_argument("--cycles", type=int, nargs=2, default=(0, 4), metavar=("LO", "HI"))
    s.add_argument("--lengths", type=int, nargs=2, default=(3, 8), metavar=("LO", "HI"))
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--require", choices=CONDITIONS, default="none")
    s.add_argument("--max-path-piece", type=int, default=3)
    s.set_defaults(func=cmd_random_cactus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Out(args.format)
    try:
        return args.func(args, out)
    except (EIError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
