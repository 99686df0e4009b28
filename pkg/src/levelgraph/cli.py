"""Command-line front end.

Exit codes: 0 computed, 1 usage error, 2 size-gate rejection,
3 certificate verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence, TextIO

from . import render, serialize
from .crossings import CrossingError, CrossRelation, level_partition_from_crossings
from .graph import Graph, GraphError, generate, parse_edge_list, parse_family
from .invariants import (
    SizeGateError,
    book_embedding,
    expected_values,
    planar_partition,
    validate_inequalities,
)
from .leveling import (
    certificate_problems,
    hamiltonian_level_number,
    has_leveled_embedding,
    level_number,
    spine_level_number,
)
from .spine import Spine

EXIT_OK, EXIT_USAGE, EXIT_SIZE, EXIT_CERT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_graph(source: str) -> Graph:
    """A family shorthand (``K5``, ``K3,3``, ``C7``, ``P4``, ``M16``), an edge-list file, or ``-`` for stdin."""
    if source == "-":
        return parse_edge_list(sys.stdin.read())
    if os.path.isfile(source):
        with open(source) as fh:
            return parse_edge_list(fh.read())
    return generate(parse_family(source))


def _parse_spine(text: str) -> Spine:
    try:
        return Spine([int(t) for t in text.split(",") if t.strip()])
    except ValueError as exc:
        raise GraphError(f"malformed spine {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--format", choices=["json", "text"], default="text")
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identical output)")
    common.add_argument("--workers", type=int, default=1)

    parser = _Parser(prog="levelgraph", description="Level numbers of graphs with certificates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("level", parents=[common], help="level number with certificate")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=None, help="examine at most this many cycles")
    p.add_argument("--literal-prop", action="store_true", help="only require each fragment to be planar")

    p = sub.add_parser("hlevel", parents=[common], help="hamiltonian level number")
    p.add_argument("graph")

    p = sub.add_parser("spine-level", parents=[common], help="level count for one spine")
    p.add_argument("graph")
    p.add_argument("--spine", required=True, help="comma-separated cycle, e.g. 0,1,2,3")
    p.add_argument("--literal-prop", action="store_true")

    p = sub.add_parser("decide-leveled", parents=[common], help="does a leveled embedding exist")
    p.add_argument("graph")
    p.add_argument("--literal-prop", action="store_true")

    p = sub.add_parser("book-thickness", parents=[common], help="minimum pages over all vertex orders")
    p.add_argument("graph")
    p.add_argument("--max-vertices", type=int, default=9)

    p = sub.add_parser("thickness", parents=[common], help="fewest planar subgraphs covering the edges")
    p.add_argument("graph")
    p.add_argument("--max-edges", type=int, default=18)

    p = sub.add_parser("check-formulas", parents=[common], help="solver against closed forms")
    p.add_argument("family")
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("verify-cert", parents=[common], help="re-check a JSON certificate")
    p.add_argument("file")
    p.add_argument("--graph", dest="graph_source", default=None, help="graph to check against instead of the embedded one")

    p = sub.add_parser("cross-levels", parents=[common], help="layer a crosses-over relation")
    p.add_argument("relation")
    p.add_argument("--count", type=int, default=None, help="fragment count (default: 1 + largest index)")

    p = sub.add_parser("report", parents=[common], help="all invariants and inequalities")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--max-vertices", type=int, default=9)
    p.add_argument("--max-edges", type=int, default=18)

    p = sub.add_parser("render", help="draw a certificate")
    p.add_argument("cert")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--svg", dest="render_format", action="store_const", const="svg")
    kind.add_argument("--dot", dest="render_format", action="store_const", const="dot")
    return parser


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------


def _text(doc: dict) -> str:
    cmd = doc["command"]
    lines = []
    value = doc.get("value")
    if "exact" in doc:
        lines.append(f"{cmd} {doc['input']}: {value} ({'exact' if doc['exact'] else 'upper bound'})")
    elif "value" in doc:
        lines.append(f"{cmd} {doc['input']}: {value}")
    else:
        lines.append(f"{cmd} {doc['input']}")
    cert = doc.get("certificate")
    if cert:
        lines.append("spine: " + " ".join(map(str, cert["spine"])))
        for i, (f, lv) in enumerate(zip(cert["fragments"], cert["levels"])):
            inner = f" internal {f['internal_vertices']}" if f["internal_vertices"] else ""
            lines.append(f"  fragment {i}: attachments {f['attachments']}{inner} -> level {lv}")
    for key in ("level", "hamiltonian_level", "book_thickness", "thickness"):
        if key in doc:
            lines.append(f"  {key}: {doc[key]}")
    for key in ("witness", "order", "pages", "partition", "problems", "levels"):
        if key in doc and doc[key] is not None:
            lines.append(f"{key}: {doc[key]}")
    if "checks" in doc:
        for name, ok in doc["checks"].items():
            lines.append(f"  {name}: {'skipped' if ok is None else 'PASS' if ok else 'FAIL'}")
    if "verdict" in doc:
        lines.append(doc["verdict"])
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _level_doc(args, g: Graph) -> tuple[dict, int]:
    literal = getattr(args, "literal_prop", False)
    if args.command == "level":
        res = level_number(g, cap=args.cap, workers=args.workers, literal=literal)
    elif args.command == "hlevel":
        res = hamiltonian_level_number(g, workers=args.workers)
    else:
        res = spine_level_number(g, _parse_spine(args.spine), literal=literal)
    return serialize.result_document(args.command, args.graph, g, res), EXIT_OK


def _check_formulas(args) -> tuple[dict, int]:
    spec = parse_family(args.family)
    exp_l, exp_h = expected_values(spec)
    g = generate(spec)
    got_l = level_number(g, cap=args.cap).value if g.is_connected() else serialize.INFINITE
    got_h = hamiltonian_level_number(g).value if g.is_connected() else serialize.INFINITE
    if got_h == serialize.INFINITE:
        got_h = None
    ok = got_l == exp_l and got_h == exp_h
    enc = serialize.encode_value
    doc = {
        "command": "check-formulas",
        "input": args.family,
        "expected": {"level": enc(exp_l), "hamiltonian_level": enc(exp_h)},
        "solver": {"level": enc(got_l), "hamiltonian_level": enc(got_h)},
        "pass": ok,
        "verdict": f"solver l={enc(got_l)}, hl={enc(got_h)} vs expected {enc(exp_l)}, {enc(exp_h)}: "
        + ("PASS" if ok else "FAIL"),
    }
    return doc, EXIT_OK


def _verify_cert(args) -> tuple[dict, int]:
    with open(args.file) as fh:
        data = json.load(fh)
    g = load_graph(args.graph_source) if args.graph_source else serialize.graph_from_json(data["graph"])
    try:
        cert = serialize.certificate_from_json(data["certificate"], g)
        problems = certificate_problems(g, cert)
        claimed = serialize.decode_value(data.get("value"))
        if not problems and claimed is not None and claimed != cert.k:
            problems.append(f"claimed value {data.get('value')} but certificate uses {cert.k} levels")
    except (GraphError, KeyError, TypeError) as exc:
        problems = [str(exc)]
    doc = {
        "command": "verify-cert",
        "input": args.file,
        "value": not problems,
        "problems": problems,
    }
    return doc, EXIT_OK if not problems else EXIT_CERT


def _cross_levels(args) -> tuple[dict, int]:
    with open(args.relation) as fh:
        pairs = json.load(fh)
    if isinstance(pairs, dict):
        count = pairs.get("count")
        pairs = pairs["over"]
    else:
        count = None
    count = args.count if args.count is not None else count
    if count is None:
        count = 1 + max((max(p) for p in pairs), default=-1)
    outcome = level_partition_from_crossings(CrossRelation(count, (tuple(p) for p in pairs)))
    doc = {
        "command": "cross-levels",
        "input": args.relation,
        "value": "partition" if outcome.is_partition else "witness",
        "levels": list(outcome.levels) if outcome.levels is not None else None,
        "witness": list(outcome.witness) if outcome.witness is not None else None,
    }
    return doc, EXIT_OK


def _dispatch(args) -> tuple[dict | str, int]:
    cmd = args.command
    if cmd in ("level", "hlevel", "spine-level"):
        return _level_doc(args, load_graph(args.graph))
    if cmd == "decide-leveled":
        g = load_graph(args.graph)
        ok, witness = has_leveled_embedding(g, literal=args.literal_prop)
        return {
            "command": cmd,
            "input": args.graph,
            "value": ok,
            "witness": list(witness.vertices) if witness else None,
        }, EXIT_OK
    if cmd == "book-thickness":
        g = load_graph(args.graph)
        k, order, pages = book_embedding(g, args.max_vertices)
        return {"command": cmd, "input": args.graph, "value": k, "order": list(order.vertices), "pages": pages}, EXIT_OK
    if cmd == "thickness":
        g = load_graph(args.graph)
        part = planar_partition(g, args.max_edges)
        return {"command": cmd, "input": args.graph, "value": max(part, default=-1) + 1, "partition": part}, EXIT_OK
    if cmd == "check-formulas":
        return _check_formulas(args)
    if cmd == "verify-cert":
        return _verify_cert(args)
    if cmd == "cross-levels":
        return _cross_levels(args)
    if cmd == "report":
        g = load_graph(args.graph)
        rep = validate_inequalities(g, args.graph, args.max_vertices, args.max_edges, cap=args.cap)
        doc = {"command": cmd, "input": args.graph, **serialize.report_to_json(rep)}
        return doc, EXIT_OK
    # render
    with open(args.cert) as fh:
        data = json.load(fh)
    g = serialize.graph_from_json(data["graph"])
    cert = serialize.certificate_from_json(data["certificate"], g)
    return (render.to_svg(cert) if args.render_format == "svg" else render.to_dot(cert)), EXIT_OK


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    t0 = time.perf_counter()
    try:
        doc, code = _dispatch(args)
    except SizeGateError as exc:
        err.write(f"size gate: {exc}\n")
        return EXIT_SIZE
    except (GraphError, CrossingError, OSError, json.JSONDecodeError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    if isinstance(doc, str):
        out.write(doc)
        return code
    doc["timings"] = {"total_seconds": round(time.perf_counter() - t0, 6)} if args.timings else {}
    out.write(serialize.dumps(doc) if args.format == "json" else _text(doc))
    return code


def main() -> None:
    sys.exit(run())
