"""JSON documents shared by every command: results, certificates and reports."""

from __future__ import annotations

import json
from typing import Any

from .graph import Graph, GraphError
from .invariants import InvariantReport
from .leveling import INFINITE, LevelCertificate, LevelResult
from .spine import Spine, fragments


def encode_value(v: Any) -> Any:
    if isinstance(v, float) and v == INFINITE:
        return "inf"
    return v


def decode_value(v: Any) -> Any:
    return INFINITE if v == "inf" else v


def graph_to_json(g: Graph) -> dict:
    return {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.edges]}


def graph_from_json(d: dict) -> Graph:
    return Graph(int(d["vertex_count"]), (tuple(e) for e in d["edges"]))


def certificate_to_json(cert: LevelCertificate) -> dict:
    return {
        "spine": list(cert.spine.vertices),
        "fragments": [
            {"attachments": list(f.attachments), "internal_vertices": list(f.internal_vertices)}
            for f in cert.fragments
        ],
        "levels": list(cert.levels),
    }


def certificate_from_json(d: dict, g: Graph) -> LevelCertificate:
    """Rebuild a certificate against ``g``; the listed fragments must match the spine's decomposition."""
    spine = Spine(d["spine"])
    if list(spine.vertices) != list(d["spine"]):
        raise GraphError("certificate spine is not in canonical form")
    spine.check_in(g)
    frags = fragments(g, spine)
    listed = [(tuple(f["attachments"]), tuple(f["internal_vertices"])) for f in d["fragments"]]
    if listed != [(f.attachments, f.internal_vertices) for f in frags]:
        raise GraphError("certificate fragments do not match the graph")
    return LevelCertificate(spine, tuple(frags), tuple(int(x) for x in d["levels"]))


def result_document(command: str, source: str, g: Graph, result: LevelResult) -> dict:
    doc = {
        "command": command,
        "input": source,
        "value": encode_value(result.value),
        "exact": result.exact,
        "graph": graph_to_json(g),
    }
    if result.certificate is not None:
        doc["certificate"] = certificate_to_json(result.certificate)
    return doc


def report_to_json(report: InvariantReport) -> dict:
    return {
        "graph_id": report.graph_id,
        "level": encode_value(report.level),
        "hamiltonian_level": encode_value(report.hamiltonian_level),
        "book_thickness": report.book_thickness,
        "thickness": report.thickness,
        "checks": report.checks,
        "passed": report.passed,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc) + "\n"
